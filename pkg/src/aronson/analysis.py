"""Density statistics for the sequence a and a battery of finite-horizon
identity checks spanning the generators, the solver and the closed forms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import closedform
from .core import GeneratedSequence, HorizonExceeded, InvalidParameters, UnknownIdentity
from .engine import RuleSpec, generate, stepper_a
from .oracles import AllIntegers, LowerWythoff, Theorem1Set, Triangular, lower_wythoff
from .registry import REGISTRY
from .squares import SquareConstraint, solve_square, square_defect
from .transform import inverse_aronson, oracle_sequence, sequence_square

# "log" in the density limit is the natural log: 3/4 - ln(32/27)/4 = 0.70753...,
# whereas base 10 would give 0.7315
AVERAGE_DENSITY = 0.75 - 0.25 * math.log(32 / 27)

# a stride of 1 up to this segment; beyond it the mean is sampled
EXACT_MEAN_UP_TO = 18


def average_density_constant() -> float:
    return AVERAGE_DENSITY


def segment_bounds(k: int) -> range:
    """Indices of segment k of a: ``9*2**k - 3 + j`` for ``-3*2**k <= j < 3*2**k``."""
    if k < 0:
        raise InvalidParameters(f"segment number must be >= 0, got {k}")
    return range((6 << k) - 3, (12 << k) - 3)


@dataclass(frozen=True)
class DensityProfile:
    k: int
    indices: range
    min_ratio: Fraction
    max_ratio: Fraction
    argmin: int
    argmax: int
    first_ratio: Fraction
    last_ratio: Fraction
    mean_ratio: float
    stride: int


def _extreme(n: np.ndarray, a: np.ndarray, pick) -> int:
    """Position of the exact max (pick=+1) or min (pick=-1) of n/a."""
    i = int(np.argmax(pick * n / a))
    # exact confirmation by cross-multiplication: n*a[i] vs n[i]*a
    cross = pick * (n * a[i] - n[i] * a)
    if cross.max() > 0:
        i = int(np.argmax(cross))
    return i


def density_profile(seq: GeneratedSequence, k: int, stride: int | None = None) -> DensityProfile:
    """Exact min and max of n/a(n) over segment k, and its mean."""
    idx = segment_bounds(k)
    if idx.stop - 1 > seq.last_index:
        raise HorizonExceeded(f"segment {k} needs index {idx.stop - 1}, prefix ends at {seq.last_index}")
    lo = idx.start - seq.n0
    a = np.asarray(seq.terms[lo:lo + len(idx)], dtype=np.int64)
    n = np.arange(idx.start, idx.stop, dtype=np.int64)
    imax = _extreme(n, a, 1)
    imin = _extreme(n, a, -1)
    if stride is None:
        stride = 1 if k <= EXACT_MEAN_UP_TO else 1 << (k - EXACT_MEAN_UP_TO)
    mean = math.fsum((n[::stride] / a[::stride]).tolist()) / len(n[::stride])
    frac = lambda i: Fraction(int(n[i]), int(a[i]))  # noqa: E731
    return DensityProfile(k, idx, frac(imin), frac(imax), int(n[imin]), int(n[imax]),
                          frac(0), frac(len(n) - 1), mean, stride)


# identity checks: each returns the first failing n (or None) up to a horizon

Check = Callable[[int], "int | None"]


def _first(ns, ok) -> int | None:
    for n in ns:
        if not ok(n):
            return n
    return None


def _seq(name: str, count: int) -> GeneratedSequence:
    return REGISTRY[name].generate(count)


def _c_shift(h):
    c, a = _seq("c", h + 1), _seq("a", h + 2)
    return _first(range(0, h + 1), lambda n: c(n) == a(n + 1) - 1)


def _somos_e(h):
    e = _seq("e", h + 1)
    return _first(range(1, h // 3 + 1),
                  lambda n: e(3 * n) == 3 * e(n) and (3 * n + 1 > h or e(3 * n + 1) == 2 * e(n) + e(n + 1))
                  and (3 * n + 2 > h or e(3 * n + 2) == e(n) + 2 * e(n + 1)))


def _a_odd_membership(h):
    """Odd values: all but 3 and 5. Even values: 4, 6, 8 and the 2m bands."""
    a = _seq("a", h)
    values = set(a.terms)
    evens = {4, 6, 8}
    k = 1
    while 9 * (1 << (k - 1)) - 1 <= a.terms[-1]:
        evens.update(range(2 * (9 * (1 << (k - 1)) - 1), 2 * (6 * (1 << k) - 2) + 1, 2))
        k += 1

    def ok(x):
        if x % 2:
            return (x in values) == (x not in (3, 5))
        return (x in values) == (x in evens)
    return _first(range(1, a.terms[-1] + 1), ok)


def _b_membership(h):
    """Every odd number occurs; the only even values are 2 and 4t, t >= 2."""
    b = _seq("b", 2 * h + 8)
    values = set(b.terms)
    return _first(range(1, h + 1),
                  lambda x: (x in values) == (x % 2 == 1 or x == 2 or (x % 4 == 0 and x >= 8)))


def _b_closed(h):
    b = _seq("b", h)
    return _first(range(1, h + 1), lambda n: b(n) == closedform.b_closed(n))


def _g_halving(h):
    g = _seq("g", h + 1)
    gz = lambda n: 0 if n == 0 else g(n)  # noqa: E731
    return _first(range(1, h // 2 + 1),
                  lambda n: g(2 * n) == gz(n) + gz(n - 1) + 1
                  and (2 * n + 1 > h or g(2 * n + 1) == 2 * g(n) + 1))


def _g_membership(h):
    """n is in g iff g(n) is an odd number >= 3."""
    g = _seq("g", h)
    values = set(g.terms)
    odd3 = Theorem1Set(2, 1)
    return _first(range(1, h + 1), lambda n: (n in values) == odd3.contains(g(n)))


def _g_differences(h):
    """Differences of g run 1, 2, 1^2, 2^2, 1^4, 2^4, ..."""
    g = _seq("g", h + 1)
    expect = []
    k = 0
    while len(expect) < h:
        expect += [1] * (1 << k) + [2] * (1 << k)
        k += 1
    return _first(range(1, h + 1), lambda n: g(n + 1) - g(n) == expect[n - 1])


def _a_from_g(h):
    a, g = _seq("a", 3 * h + 3), _seq("g", h + 1)
    return _first(range(1, h + 1),
                  lambda n: a(3 * n) == 3 * g(n) and a(3 * n + 1) == 2 * g(n) + g(n + 1)
                  and a(3 * n + 2) == g(n) + 2 * g(n + 1))


def _d_from_g(h):
    d, g = _seq("d", h), _seq("g", h + 1)
    return _first(range(1, h + 1), lambda n: d(n) == g(n + 1) - 1)


def _gprime(h):
    """g'(g'(n)) = 2n, and g'(n) = g(n-1) + 1 for n >= 2."""
    gp, g = _seq("g'", h), _seq("g", h)
    solved = solve_square(SquareConstraint(2, 0, 2, ((2, 3),)), h)
    return _first(range(2, h + 1),
                  lambda n: gp(n) == g(n - 1) + 1 == solved(n)
                  and (gp(n) > gp.last_index or gp(gp(n)) == 2 * n))


def _i_shift(h):
    i, ip = _seq("i", h + 2), _seq("i'", h + 1)
    return _first(range(0, h + 1), lambda n: ip(n) == i(n + 1) - 1)


def _e_prime(h):
    ep = _seq("e'", h)
    return _first(range(1, h + 1), lambda n: ep(n) == closedform.e_closed(n) - n)


def _dprime(h):
    """d' is the complement of the triangular numbers; n and d'(d'(n)) differ in parity."""
    dp = _seq("d'", h)
    tri = Triangular()
    missing = [x for x in range(1, dp.terms[-1] + 1) if not tri.contains(x)]

    def ok(n):
        if dp(n) != missing[n - 1]:
            return False
        m = dp(n)
        return m > dp.last_index or dp(m) > dp.last_index or (n - dp(dp(n))) % 2 == 1
    return _first(range(1, h + 1), ok)


def _square_of(name, y, z, start):
    def check(h):
        return square_defect(_seq(name, h), y, z, start)
    return check


def _a_square_set(h):
    """The square of a is {1} together with every odd number >= 7."""
    sq = sequence_square(_seq("a", h))
    values = set(sq.terms)
    return _first(range(1, sq.terms[-1] + 1),
                  lambda x: (x in values) == (x == 1 or (x % 2 == 1 and x >= 7)))


def _c_square_set(h):
    sq = sequence_square(_seq("c", h))
    values = set(sq.terms)
    return _first(range(0, sq.terms[-1] + 1),
                  lambda x: (x in values) == (x == 0 or (x % 2 == 0 and x >= 6)))


def _stepper(h):
    a, s = _seq("a", h), stepper_a(h)
    return _first(range(1, h + 1), lambda n: a(n) == s(n))


def _theorem1_set(name, y, z):
    def check(h):
        f = _seq(name, h)
        g = generate(RuleSpec(oracle=Theorem1Set(y, z), seeds=((y + z + 1) // 2,)), h)
        return _first(range(1, h + 1), lambda n: f(n) == g(n))
    return check


def _wythoff_inverse(h):
    """The inverse transform of lower Wythoff is {L(k)+k-1 : k >= 1} with {2L(k)+k-1 : k >= 2}."""
    inv = inverse_aronson(oracle_sequence(LowerWythoff(), h))
    top = inv.complete_through
    want = {lower_wythoff(k) + k - 1 for k in range(1, top)}
    want |= {2 * lower_wythoff(k) + k - 1 for k in range(2, top)}
    values = set(inv.terms)
    return _first(range(1, top + 1), lambda x: (x in values) == (x in want))


def _golomb_self(h):
    """G(n) counts the occurrences of n."""
    g = closedform.golomb(h).terms
    counts: dict[int, int] = {}
    for v in g:
        counts[v] = counts.get(v, 0) + 1
    # only values whose run has certainly ended inside the prefix
    return _first(range(1, g[-1]), lambda n: counts.get(n, 0) == g[n - 1])


def _fixed_points(h):
    for n0 in (0, 1):
        s = generate(RuleSpec(oracle=AllIntegers(n0), n0=n0), h)
        bad = _first(range(n0, n0 + h), lambda n: s(n) == n)
        if bad is not None:
            return bad
    return None


IDENTITIES: dict[str, Check] = {
    "c_shift": _c_shift,
    "somos_e": _somos_e,
    "a_odd_membership": _a_odd_membership,
    "b_membership": _b_membership,
    "b_closed": _b_closed,
    "g_halving": _g_halving,
    "g_membership": _g_membership,
    "g_differences": _g_differences,
    "a_from_g": _a_from_g,
    "d_from_g": _d_from_g,
    "gprime": _gprime,
    "i_shift": _i_shift,
    "e_prime": _e_prime,
    "dprime": _dprime,
    "a_square": _square_of("a", 2, 3, 2),
    "aprime_square": _square_of("a'", 2, 3, 2),
    "e_square": _square_of("e", 3, 0, 1),
    "i_square": _square_of("i", 4, 0, 0),
    "iprime_square": _square_of("i'", 4, 3, 0),
    "a_square_set": _a_square_set,
    "c_square_set": _c_square_set,
    "a_stepper": _stepper,
    "e_theorem1_set": _theorem1_set("e", 3, 0),
    "g_theorem1_set": _theorem1_set("g", 2, 1),
    "wythoff_inverse": _wythoff_inverse,
    "golomb_self": _golomb_self,
    "fixed_points": _fixed_points,
}


@dataclass(frozen=True)
class IdentityReport:
    name: str
    horizon: int
    failure: int | None

    @property
    def passed(self) -> bool:
        return self.failure is None

    def __str__(self) -> str:
        return f"{self.name}, {self.horizon}, {'PASS' if self.passed else f'FAIL@{self.failure}'}"


def verify_identity(name: str, horizon: int) -> IdentityReport:
    if name.startswith("registry:"):
        entry = REGISTRY.get(name.split(":", 1)[1])
        if entry is None:
            raise UnknownIdentity(name)
        return IdentityReport(name, len(entry.ground_truth), entry.check())
    check = IDENTITIES.get(name)
    if check is None:
        raise UnknownIdentity(f"no identity named {name!r}")
    if horizon < 1:
        raise InvalidParameters("horizon must be positive")
    return IdentityReport(name, horizon, check(horizon))


def all_checks() -> list[str]:
    return list(IDENTITIES) + [f"registry:{n}" for n in REGISTRY if REGISTRY[n].ground_truth]


def verify_all(horizon: int) -> list[IdentityReport]:
    return [verify_identity(name, horizon) for name in all_checks()]
