import pytest
from hypothesis import given
from hypothesis import strategies as st

from aronson.core import InvalidParameters, MissingRule
from aronson.engine import RuleSpec, generate
from aronson.oracles import Multiples, Odds
from aronson.squares import SquareConstraint, solve_square, theorem1_sequence
from aronson.words import (A_THETA, FAKE_EVEN_PREFIX, H_THETA, Morphism, Word,
                           a_difference_language, a_language_prefix, apply_morphism, concat,
                           difference_word, fake_even_prefix, fake_even_segments,
                           h_difference_language, h_language_prefix, iterate_segments)


def test_word_basics():
    w = Word([1, 1, 2, 2, 2, 1])
    assert w.runs == [(1, 2), (2, 3), (1, 1)]
    assert len(w) == 6 and w == [1, 1, 2, 2, 2, 1]
    assert w.reversed() == [1, 2, 2, 2, 1, 1]
    assert (w + Word([1])).runs[-1] == (1, 2)
    assert w.alphabet() == {1, 2}
    assert Word.from_runs([(4, 0), (3, 2)]) == [3, 3]
    assert concat([Word([1]), Word([1]), Word([2])]).runs == [(1, 2), (2, 1)]


@given(st.lists(st.integers(1, 4), max_size=60))
def test_run_length_round_trip(letters):
    w = Word(letters)
    assert list(w) == letters
    assert Word.from_runs(w.runs) == w
    assert all(a != b for (a, _), (b, _) in zip(w.runs, w.runs[1:]))


def test_morphism_examples():
    assert apply_morphism(A_THETA, Word([1, 1, 1])) == [2, 2, 2]
    assert apply_morphism(A_THETA, Word([2, 2, 2])) == [1] * 6
    assert apply_morphism(H_THETA, Word([4])) == [1, 1, 1, 3]
    assert A_THETA(Word([2, 1])) == [1, 1, 2]


def test_missing_rule():
    with pytest.raises(MissingRule):
        apply_morphism(A_THETA, Word([3]))


@given(st.lists(st.integers(1, 2), max_size=40), st.lists(st.integers(1, 2), max_size=40))
def test_morphism_is_a_homomorphism(u, v):
    m = Morphism({1: [2, 1], 2: [1, 1, 1]})
    assert m(Word(u) + Word(v)) == m(Word(u)) + m(Word(v))
    # expansion agrees with letter-by-letter substitution
    assert list(m(Word(u))) == [x for c in u for x in m.rules[c]]


def test_iterate_segments():
    it = iterate_segments(A_THETA, Word([1, 1, 1]))
    segs = [next(it) for _ in range(5)]
    assert [len(s) for s in segs] == [3, 3, 6, 6, 12]
    assert segs[1] == [2, 2, 2]


def test_a_language_examples():
    assert a_difference_language(3) == [3, 2, 1, 1, 1, 2, 2, 2]
    with pytest.raises(InvalidParameters):
        a_difference_language(0)


def test_a_language_matches_engine():
    a = generate(RuleSpec(oracle=Odds()), 20_001)
    assert list(difference_word(a)) == a_language_prefix(20_000)


def test_a_difference_runs():
    a = generate(RuleSpec(oracle=Odds()), 6000)
    r = difference_word(a).runs
    assert r[:2] == [(3, 1), (2, 1)]
    body = r[2:-1]
    for i, (letter, count) in enumerate(body):
        assert letter == (1 if i % 2 == 0 else 2)
        assert count == 3 * 2 ** (i // 2)


def test_h_language_examples():
    it = iterate_segments(H_THETA, Word([4]))
    segs = [next(it) for _ in range(3)]
    assert segs[0] == [4] and segs[1] == [1, 1, 1, 3]
    assert segs[2] == [6, 6, 6, 1, 1, 4]
    assert h_difference_language(2) == [4, 1, 1, 1, 3]


def test_h_language_matches_engine():
    h = generate(RuleSpec(oracle=Multiples(6), seeds=(2,)), 20_001)
    assert list(difference_word(h)) == h_language_prefix(20_000)


def test_g_difference_runs():
    g = theorem1_sequence(2, 1, 4000)
    r = difference_word(g).runs[:-1]
    for i, (letter, count) in enumerate(r):
        assert letter == (1 if i % 2 == 0 else 2)
        assert count == 2 ** (i // 2)


def test_fake_even_examples():
    assert FAKE_EVEN_PREFIX == [2, 2, 1]
    assert fake_even_segments(1) == [3, 4, 1, 1, 2, 1, 1, 1, 1, 4, 4, 1]
    assert fake_even_prefix(16) == [2, 2, 1, 3, 4, 1, 1, 2, 1, 1, 1, 1, 4, 4, 1, 3]
    with pytest.raises(InvalidParameters):
        fake_even_segments(0)


def test_fake_even_segments_match_solver():
    i = solve_square(SquareConstraint(4, 0, 0), 20_001)
    assert list(difference_word(i)) == fake_even_prefix(20_000)


def test_fake_even_segment_lengths():
    # S_k and T_k hold 2^(2k) - 1 and 2^(2k+1) - 1 letters, plus two separators
    for k in range(1, 8):
        assert len(fake_even_segments(k)) == (2 ** (2 * k) - 1) + (2 ** (2 * k + 1) - 1) + 2


def test_difference_word_needs_two_terms():
    with pytest.raises(InvalidParameters):
        difference_word(generate(RuleSpec(oracle=Odds()), 1))
