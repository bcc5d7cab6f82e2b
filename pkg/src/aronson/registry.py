"""Named sequences: how to generate each one, and its published prefix.

Ground-truth prefixes are transcribed fixtures, never computed here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable

from . import closedform
from .core import GeneratedSequence, HorizonExceeded, Provenance, UnknownSequence
from .engine import BOTH_ODD_NEXT, ODD_BEFORE_EVEN, Mode, RuleSpec, generate
from .oracles import (Evens, FromSequence, LowerWythoff, Multiples, Odds, Primes, Residue,
                      Squares, Theorem1Set, Triangular)
from .squares import SquareConstraint, solve_square, theorem1_sequence
from .transform import aronson_transform, inverse_aronson, oracle_sequence

Generator = Callable[[int], GeneratedSequence]


@dataclass(frozen=True)
class RegistryEntry:
    name: str
    oeis_id: str
    generator: Generator = field(repr=False)
    description: str
    n0: int = 1
    ground_truth: tuple[int, ...] = ()

    def generate(self, count: int) -> GeneratedSequence:
        seq = self.generator(count)
        return GeneratedSequence(seq.n0, seq.terms, Provenance(self.name, seq.provenance.params,
                                                               seq.monotone),
                                 seq.complete_through)

    def truth_pairs(self) -> list[tuple[int, int]]:
        return list(enumerate(self.ground_truth, self.n0))

    def check(self) -> int | None:
        """First index where the generator disagrees with the ground truth."""
        if not self.ground_truth:
            return None
        got = self.generate(len(self.ground_truth)).terms
        for n, (u, v) in enumerate(zip(got, self.ground_truth), self.n0):
            if u != v:
                return n
        return None


def _rule(**kw) -> Generator:
    rule = RuleSpec(**kw)
    return lambda count: generate(rule, count)


def _square(y, z, n0=1, forced=(), start=None) -> Generator:
    con = SquareConstraint(y, z, n0, tuple(forced), start)
    return lambda count: solve_square(con, count)


def _growing(make: Callable[[int], GeneratedSequence]) -> Callable[[int], GeneratedSequence]:
    """Retry ``make(size)`` with larger inputs until it stops running off a horizon."""
    def gen(count: int) -> GeneratedSequence:
        size = 2 * count + 16
        while True:
            try:
                return make(count, size)
            except HorizonExceeded:
                size *= 2
    return gen


def sequence_a(count: int) -> GeneratedSequence:
    return generate(RuleSpec(oracle=Odds(), n0=1, name="a"), count)


def _transform_of(oracle_factory, n0=1):
    return lambda count: aronson_transform(oracle_factory(), n0, count)


def _transform_of_a(count, size):
    return aronson_transform(FromSequence(sequence_a(size)), 1, count)


def _inverse_of(oracle_factory):
    def make(count, size):
        return inverse_aronson(oracle_sequence(oracle_factory(), size), count)
    return _growing(make)


def _inverse_of_a(count, size):
    return inverse_aronson(sequence_a(size), count)


def _e_prime(count):
    e = solve_square(SquareConstraint(3, 0, 1), count)
    return GeneratedSequence(1, tuple(v - n for n, v in e.items()),
                             Provenance("e'", monotone=False))


def _dprime(count):
    return closedform.closed_sequence(closedform.dprime_closed, count, name="d'")


A_PREFIX = (1, 4, 6, 7, 8, 9, 11, 13, 15, 16, 17, 18, 19, 20, 21, 23, 25, 27, 29, 31,
           33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 47, 49, 51, 53, 55, 57, 59,
           61, 63, 65, 67, 69, 70, 71, 72, 73, 74, 75, 76, 77, 78, 79, 80, 81, 82, 83, 84,
           85, 86, 87, 88, 89, 90, 91, 92, 93, 95, 97, 99)

_ENTRIES = [
    RegistryEntry("a", "A079000", sequence_a,
                  "n in a iff a(n) is odd", 1, A_PREFIX),
    RegistryEntry("a'", "A080596", _square(2, 3, 1, [(1, 1)], start=2),
                  "least increasing a' with a'(1)=1 and a'(a'(n))=2n+3 for n>=2", 1,
                  (1, 4, 5, 7, 9, 10, 11, 12, 13, 15, 17, 19, 21, 22)),
    RegistryEntry("b", "A079313", _rule(oracle=Odds(), monotone=False, name="b"),
                  "non-monotone: n in b iff b(n) is odd", 1,
                  (1, 3, 5, 2, 7, 8, 9, 11, 13, 12, 15, 17, 19, 16, 21, 23, 25, 20, 27, 29)),
    RegistryEntry("c", "A079253", _rule(oracle=Evens(), n0=0, name="c"),
                  "n in c iff c(n) is even", 0, (0, 3, 5, 6, 7, 8, 10, 12, 14, 15)),
    RegistryEntry("d", "A080653",
                  _rule(oracle=Odds(), mode=Mode.NEGATED_IFF, seeds=(2,), name="d"),
                  "lying version: 'n in d iff d(n) odd' is false, d(1)=2", 1,
                  (2, 4, 5, 6, 8, 10, 11, 12, 13, 14)),
    RegistryEntry("d'", "A014132", _dprime,
                  "n + nearest integer to sqrt(2n)", 1,
                  (2, 4, 5, 7, 8, 9, 11, 12, 13, 14, 16)),
    RegistryEntry("e", "A003605", _square(3, 0),
                  "e(e(n)) = 3n", 1, (2, 3, 6, 7, 8, 9, 12, 15, 18, 19)),
    RegistryEntry("e'", "A006166", _e_prime, "e(n) - n", 1),
    RegistryEntry("g", "A080637", lambda count: theorem1_sequence(2, 1, count),
                  "g(1)=2, g(g(n)) = 2n+1 for n>=2", 1, (2, 3, 5, 6, 7, 9, 11, 12, 13, 14)),
    RegistryEntry("g'", "A007378", _rule(oracle=Residue(2, 2), n0=2, name="g'"),
                  "n in g' iff g'(n) is an even number >= 4; g'(g'(n)) = 2n", 2),
    RegistryEntry("h", "A080780", _rule(oracle=Multiples(6), seeds=(2,), name="h"),
                  "n in h iff h(n) is a multiple of 6, h(1)=2", 1,
                  (2, 6, 7, 8, 9, 12, 18, 24, 30, 31)),
    RegistryEntry("i", "A080588", _square(4, 0, 0),
                  "fake even numbers: least increasing i with i(i(n)) = 4n", 0,
                  (0, 2, 4, 5, 8, 12, 13, 14, 16, 17)),
    RegistryEntry("i'", "A080591", _square(4, 3, 0),
                  "fake odd numbers: least increasing i' with i'(i'(n)) = 4n+3", 0,
                  (1, 3, 4, 7, 11, 12, 13, 15, 16, 17)),
    RegistryEntry("q1", "A079255", _rule(window=ODD_BEFORE_EVEN, name="q1"),
                  "n in q iff q(n) is odd and q(n+1) is even", 1,
                  (1, 4, 6, 9, 12, 15, 18, 20, 23, 26, 28)),
    RegistryEntry("q2", "A079259", _rule(window=BOTH_ODD_NEXT, name="q2"),
                  "n in q iff q(n) and q(n+1) are both odd", 1,
                  (1, 5, 6, 10, 11, 15, 19, 20, 24, 25)),
    RegistryEntry("golomb", "A001462", closedform.golomb,
                  "G(n) is the number of times n occurs", 1,
                  (1, 2, 2, 3, 3, 4, 4, 4, 5, 5, 5, 6, 6, 6, 6, 7, 7, 7, 7, 8)),
    RegistryEntry("T(triangular)", "A079257", _transform_of(Triangular),
                  "Aronson transform of the triangular numbers", 1,
                  (1, 4, 5, 6, 10, 15, 16, 17, 18, 21)),
    RegistryEntry("T(squares)", "A079258", _transform_of(Squares),
                  "Aronson transform of the squares", 1,
                  (1, 3, 4, 9, 10, 11, 12, 13, 16, 25)),
    RegistryEntry("T(primes)", "A079254", _transform_of(Primes),
                  "Aronson transform of the primes", 1,
                  (4, 6, 8, 11, 12, 13, 14, 17, 18, 20)),
    RegistryEntry("T(wythoff)", "A080760", _transform_of(LowerWythoff),
                  "Aronson transform of the lower Wythoff sequence", 1,
                  (1, 5, 7, 10, 11, 13, 14, 15, 18, 19)),
    RegistryEntry("T(a)", "A079325", _growing(_transform_of_a),
                  "Aronson transform of the sequence a", 1,
                  (1, 3, 4, 6, 10, 11, 12, 14, 22, 23)),
    RegistryEntry("inv(squares)", "A010906", _inverse_of(Squares),
                  "inverse Aronson transform of the squares", 1,
                  (1, 3, 5, 6, 7, 8, 16, 17, 18, 19, 20, 21, 22, 23, 24, 26, 27)),
    RegistryEntry("inv(primes)", "A080759", _inverse_of(Primes),
                  "inverse Aronson transform of the primes", 1,
                  (3, 5, 6, 11, 12, 17, 18, 20, 21, 22)),
    RegistryEntry("inv(wythoff)", "A080746", _inverse_of(LowerWythoff),
                  "inverse Aronson transform of the lower Wythoff sequence", 1,
                  (1, 4, 6, 7, 9, 10, 12, 14, 15, 17)),
    RegistryEntry("inv(a)", "", _growing(_inverse_of_a),
                  "inverse Aronson transform of a: the odd numbers", 1,
                  (1, 3, 5, 7, 9, 11, 13, 15, 17, 19)),
]

REGISTRY = {e.name: e for e in _ENTRIES}
_ALIASES = {"aprime": "a'", "dprime": "d'", "eprime": "e'", "gprime": "g'", "iprime": "i'"}
_F_NAME = re.compile(r"f\((-?\d+),\s*(-?\d+)\)$|f:(-?\d+):(-?\d+)$")


def theorem1_entry(y: int, z: int) -> RegistryEntry:
    closedform.check_theorem1(y, z)
    return RegistryEntry(f"f({y},{z})", "", lambda count: theorem1_sequence(y, z, count),
                         f"f(1)=(y+z+1)/2 and f(f(n)) = {y}n+{z} for n>1", 1)


def registry_lookup(name: str) -> RegistryEntry:
    """Find an entry by name, alias, OEIS id, or ``f(y,z)``."""
    key = _ALIASES.get(name, name)
    if key in REGISTRY:
        return REGISTRY[key]
    for e in _ENTRIES:
        if e.oeis_id and e.oeis_id.lower() == name.lower():
            return e
    m = _F_NAME.match(name.replace(" ", ""))
    if m:
        y, z = (int(g) for g in m.groups() if g is not None)
        return theorem1_entry(y, z)
    raise UnknownSequence(f"no sequence named {name!r}")


def names() -> list[str]:
    return list(REGISTRY)
