"""The eight acceptance criteria, each printing one PASS/FAIL line."""

import random
import time

import pytest

from aronson.analysis import IDENTITIES, density_profile, verify_identity
from aronson.closedform import a_closed, e_closed, f_closed, g_closed
from aronson.core import InvalidParameters
from aronson.engine import RuleSpec, generate
from aronson.oracles import (FromSequence, LowerWythoff, Multiples, Odds, Primes, Residue,
                             Squares, Theorem1Set, Triangular)
from aronson.registry import REGISTRY, sequence_a
from aronson.squares import SquareConstraint, check_theorem1, solve_square, square_defect, \
    theorem1_sequence
from aronson.transform import (InverseOracle, aronson_transform, inverse_aronson, oracle_sequence,
                               sequence_square)
from aronson.words import a_language_prefix, difference_word, fake_even_prefix, h_language_prefix

A_SEEDS = ((1, 1), (2, 4), (3, 6))


class Timer:
    def __init__(self, label, limit=None):
        self.label, self.limit = label, limit

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def report(self, ok, detail=""):
        dt = time.perf_counter() - self.t0
        within = self.limit is None or dt <= self.limit
        status = "PASS" if ok and within else "FAIL"
        budget = f" (limit {self.limit:g}s)" if self.limit else ""
        print(f"\n{self.label}: {status} in {dt:.2f}s{budget} {detail}".rstrip())
        return ok and within

    def __exit__(self, *exc):
        return False


def test_ac1_prefixes():
    with Timer("AC1 registry prefixes", 1.0) as t:
        bad = [e.name for e in REGISTRY.values() if e.check() is not None]
        assert t.report(not bad, f"mismatches={bad}")


def test_ac2_three_way_agreement():
    with Timer("AC2 engine = closed form = solver", 30.0) as t:
        n = 10**6
        a_eng = generate(RuleSpec(oracle=Odds()), n)
        a_sol = solve_square(SquareConstraint(2, 3, 1, A_SEEDS, start=2), n)
        ok_a = a_eng.terms == a_sol.terms and all(a_closed(k) == a_eng(k) for k in range(1, n + 1))

        n = 10**5
        e_eng = generate(RuleSpec(oracle=Multiples(3), seeds=(2,)), n)
        e_sol = solve_square(SquareConstraint(3, 0, 1), n)
        ok_e = e_eng.terms == e_sol.terms and all(e_closed(k) == e_eng(k) for k in range(1, n + 1))

        g_eng = generate(RuleSpec(oracle=Theorem1Set(2, 1), seeds=(2,)), n)
        g_sol = theorem1_sequence(2, 1, n)
        ok_g = g_eng.terms == g_sol.terms and all(g_closed(k) == g_eng(k) for k in range(1, n + 1))
        assert t.report(ok_a and ok_e and ok_g, f"a={ok_a} e={ok_e} g={ok_g}")


def _grid():
    for y in range(2, 10):
        for z in range(-y + 2, 10):
            if (y - z) % 2 == 0:
                continue
            try:
                check_theorem1(y, z)
            except InvalidParameters:
                continue
            yield y, z


def test_ac3_theorem1_grid():
    with Timer("AC3 square-constraint grid", 60.0) as t:
        n, bad, count = 10**4, [], 0
        for y, z in _grid():
            count += 1
            f = theorem1_sequence(y, z, n)
            if square_defect(f, y, z, 2) is not None:
                bad.append((y, z, "square"))
            elif y + z > 1 and any(f(k) != f_closed(k, y, z) for k in range(1, n + 1)):
                bad.append((y, z, "closed form"))
        assert t.report(count > 0 and not bad, f"pairs={count} failures={bad}")


def test_ac4_round_trips():
    with Timer("AC4 inverse then transform round trip") as t:
        n, bad = 10**4, []
        alphas = {name: oracle_sequence(o, n) for name, o in
                  [("squares", Squares()), ("primes", Primes()),
                   ("triangular", Triangular()), ("wythoff", LowerWythoff())]}
        alphas["a"] = sequence_a(n)
        for name, alpha in alphas.items():
            # the inverse of the squares runs to 10^8, so membership is read from its ranges
            beta = InverseOracle(alpha)
            if aronson_transform(beta, alpha.n0, n).terms != alpha.terms:
                bad.append(name)
        # where the inverse is small enough to materialize, it must give the same answer
        for name in ("primes", "wythoff", "a"):
            alpha = alphas[name]
            beta = FromSequence(inverse_aronson(alpha))
            if aronson_transform(beta, alpha.n0, n - 50).terms != alpha.terms[:n - 50]:
                bad.append(name + " materialized")
        assert t.report(not bad, f"failures={bad}")


def test_ac5_difference_languages():
    with Timer("AC5 difference languages") as t:
        n = 10**4
        a = generate(RuleSpec(oracle=Odds()), n + 1)
        h = generate(RuleSpec(oracle=Multiples(6), seeds=(2,)), n + 1)
        i = solve_square(SquareConstraint(4, 0, 0), n + 1)
        ok = {"a": list(difference_word(a)) == a_language_prefix(n),
              "h": list(difference_word(h)) == h_language_prefix(n),
              "i": list(difference_word(i)) == fake_even_prefix(n)}
        assert t.report(all(ok.values()), str(ok))


def test_ac6_identities():
    with Timer("AC6 identities") as t:
        reports = [verify_identity(name, 10**4) for name in IDENTITIES]
        failed = [str(r) for r in reports if not r.passed]
        assert t.report(not failed, f"checked={len(reports)} failures={failed}")


def test_ac7_density():
    with Timer("AC7 density", 10.0) as t:
        a10 = sequence_a((12 << 10) - 3)
        p10 = density_profile(a10, 10)
        a15 = sequence_a((12 << 15) - 3)
        p15 = density_profile(a15, 15)
        ok_max = abs(float(p10.max_ratio) - 0.75) < 1e-3
        ok_bound = abs(float(p10.first_ratio) - 2 / 3) < 1e-3 and \
            abs(float(p10.last_ratio) - 2 / 3) < 1e-3
        ok_mean = abs(p15.mean_ratio - 0.70753) < 1e-3
        assert t.report(ok_max and ok_bound and ok_mean,
                        f"max={float(p10.max_ratio):.5f} mean15={p15.mean_ratio:.5f}")


def _random_rule(rng):
    kind = rng.randrange(3)
    if kind == 0:
        return RuleSpec(oracle=Multiples(rng.randint(2, 9)))
    if kind == 1:
        m = rng.randint(2, 7)
        return RuleSpec(oracle=Residue(m, rng.randrange(m)))
    return RuleSpec(oracle=rng.choice([Odds(), Squares(), Triangular(), Primes()]))


def test_ac8_square_membership():
    with Timer("AC8 square-membership property") as t:
        rng = random.Random(20261019)
        bad = []
        for trial in range(20):
            rule = _random_rule(rng)
            s = generate(rule, rng.randint(500, 3000))
            sq = set(sequence_square(s).terms)
            values = set(s.terms)
            for n, v in s.items():
                if v > s.last_index or n > s.terms[-1]:
                    break
                if (n in values) != (v in sq):
                    bad.append((trial, n))
                    break
        assert t.report(not bad, f"failures={bad}")
