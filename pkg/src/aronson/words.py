"""Words over small integer alphabets, D0L morphisms, and the difference
languages of several sequences.

Words are stored run-length encoded because the interesting ones grow
geometrically; equality and indexing are defined on the expansion.
"""

from __future__ import annotations

from itertools import chain, repeat
from typing import Iterable, Iterator, Mapping

from .core import GeneratedSequence, InvalidParameters, MissingRule


class Word:
    __slots__ = ("runs",)

    def __init__(self, letters: Iterable[int] = ()):
        self.runs: list[tuple[int, int]] = []
        for x in letters:
            self._push(x, 1)

    @classmethod
    def from_runs(cls, runs: Iterable[tuple[int, int]]) -> "Word":
        w = cls()
        for letter, count in runs:
            w._push(letter, count)
        return w

    def _push(self, letter: int, count: int) -> None:
        if count <= 0:
            return
        if self.runs and self.runs[-1][0] == letter:
            self.runs[-1] = (letter, self.runs[-1][1] + count)
        else:
            self.runs.append((letter, count))

    def __iter__(self) -> Iterator[int]:
        return chain.from_iterable(repeat(x, c) for x, c in self.runs)

    def __len__(self) -> int:
        return sum(c for _, c in self.runs)

    def __eq__(self, other):
        if isinstance(other, Word):
            return self.runs == other.runs
        if isinstance(other, (list, tuple)):
            return list(self) == list(other)
        return NotImplemented

    def __add__(self, other: "Word") -> "Word":
        return Word.from_runs(chain(self.runs, other.runs))

    def reversed(self) -> "Word":
        return Word.from_runs(reversed(self.runs))

    def letters(self) -> list[int]:
        return list(self)

    def alphabet(self) -> set[int]:
        return {x for x, _ in self.runs}

    def __repr__(self) -> str:
        body = " ".join(f"{x}^{c}" if c > 1 else str(x) for x, c in self.runs[:12])
        return f"Word({body}{' ...' if len(self.runs) > 12 else ''})"


def concat(words: Iterable[Word]) -> Word:
    return Word.from_runs(chain.from_iterable(w.runs for w in words))


class Morphism:
    def __init__(self, rules: Mapping[int, Iterable[int]]):
        self.rules = {int(k): Word(v) for k, v in rules.items()}

    def __call__(self, w: Word) -> Word:
        return apply_morphism(self, w)


def apply_morphism(m: Morphism, w: Word) -> Word:
    out = Word()
    for letter, count in w.runs:
        image = m.rules.get(letter)
        if image is None:
            raise MissingRule(f"no rule for letter {letter}")
        if len(image.runs) == 1:
            x, c = image.runs[0]
            out._push(x, c * count)
        else:
            for _ in range(count):
                for x, c in image.runs:
                    out._push(x, c)
    return out


def iterate_segments(m: Morphism, seed: Word) -> Iterator[Word]:
    """seed, m(seed), m(m(seed)), ..."""
    w = seed
    while True:
        yield w
        w = apply_morphism(m, w)


def difference_word(s: GeneratedSequence) -> Word:
    if len(s) < 2:
        raise InvalidParameters("need at least two terms for differences")
    t = s.terms
    return Word(b - a for a, b in zip(t, t[1:]))


A_THETA = Morphism({1: [2], 2: [1, 1]})
H_THETA = Morphism({i: [1] * (i - 1) + [7 - i] for i in range(1, 7)})


def _segments(m: Morphism, seed: Word, count: int) -> list[Word]:
    it = iterate_segments(m, seed)
    return [next(it) for _ in range(count)]


def a_difference_language(num_segments: int) -> Word:
    """Concatenation 32, 111, theta(111), ... of ``num_segments`` segments."""
    if num_segments < 1:
        raise InvalidParameters("need at least one segment")
    return Word([3, 2]) + concat(_segments(A_THETA, Word([1, 1, 1]), num_segments - 1))


def h_difference_language(num_segments: int) -> Word:
    """Concatenation 4, theta(4), theta(theta(4)), ... under the mod-6 morphism."""
    if num_segments < 1:
        raise InvalidParameters("need at least one segment")
    return concat(_segments(H_THETA, Word([4]), num_segments))


FAKE_EVEN_PREFIX = Word([2, 2, 1])


def fake_even_segments(k: int) -> Word:
    """Segment ``3 S_k 2 T_k`` of the fake-even difference word.

    ``S_k`` reverses ``1^2 4^1 1^8 4^4 ... 1^(2^(2k-1)) 4^(2^(2k-2))`` and
    ``T_k`` reverses ``1^1 4^2 1^4 ... 4^(2^(2k-1)) 1^(2^(2k))``.
    """
    if k < 1:
        raise InvalidParameters(f"segments are numbered from 1, got {k}")
    s_runs = []
    for m in range(1, k + 1):
        s_runs += [(1, 1 << (2 * m - 1)), (4, 1 << (2 * m - 2))]
    t_runs = [(1 if e % 2 == 0 else 4, 1 << e) for e in range(2 * k + 1)]
    return (Word([3]) + Word.from_runs(s_runs).reversed()
            + Word([2]) + Word.from_runs(t_runs).reversed())


def language_prefix(pieces: Iterator[Word], length: int) -> list[int]:
    """The first ``length`` letters of the concatenation of ``pieces``."""
    out: list[int] = []
    for w in pieces:
        out.extend(w)
        if len(out) >= length:
            return out[:length]
    raise InvalidParameters("piece stream ended early")


def a_language_prefix(length: int) -> list[int]:
    return language_prefix(chain([Word([3, 2])], iterate_segments(A_THETA, Word([1, 1, 1]))), length)


def h_language_prefix(length: int) -> list[int]:
    return language_prefix(iterate_segments(H_THETA, Word([4])), length)


def fake_even_prefix(length: int) -> list[int]:
    def pieces():
        yield FAKE_EVEN_PREFIX
        k = 1
        while True:
            yield fake_even_segments(k)
            k += 1
    return language_prefix(pieces(), length)
