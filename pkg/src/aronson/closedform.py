"""Direct formulas for several of the sequences, in exact integer arithmetic.

Most of them are piecewise linear on segments that grow geometrically: in
segment k, an offset j from the segment centre adds ``(3j + |j|)/2`` (or a
similar expression) to a base value. Segment numbers come from bit lengths
or exact power comparisons, never from floating-point logarithms.
"""

from __future__ import annotations

from math import isqrt, sqrt

from .core import GeneratedSequence, InvalidParameters, Provenance, check_term
from .squares import check_theorem1

PHI = (1 + sqrt(5)) / 2


def _half(x: int) -> int:
    assert x % 2 == 0, x
    return x // 2


def _positive(n: int) -> None:
    if n < 1:
        raise InvalidParameters(f"index must be >= 1, got {n}")


def a_segment(n: int) -> tuple[int, int]:
    """``(k, j)`` with ``n = 9*2**k - 3 + j`` and ``-3*2**k <= j < 3*2**k``, for n >= 3."""
    if n < 3:
        raise InvalidParameters(f"segments start at n=3, got {n}")
    k = ((n + 3) // 6).bit_length() - 1
    return k, n - (9 << k) + 3


def a_closed(n: int) -> int:
    _positive(n)
    if n <= 2:
        return (1, 4)[n - 1]
    k, j = a_segment(n)
    return check_term((12 << k) - 3 + _half(3 * j + abs(j)))


def a_prime_closed(n: int) -> int:
    _positive(n)
    if n == 1:
        return 1
    k = ((n + 3) // 4).bit_length() - 1
    j = n - (6 << k) + 3
    return check_term((8 << k) - 3 + _half(3 * j + abs(j)))


def e_closed(n: int) -> int:
    _positive(n)
    p = 1
    while 3 * p <= n:
        p *= 3
    j = n - 2 * p
    return check_term(3 * p + 2 * j + abs(j))


def g_closed(n: int) -> int:
    _positive(n)
    k = ((n + 1) // 2).bit_length() - 1
    j = n - (3 << k) + 1
    return check_term((4 << k) - 1 + _half(3 * j + abs(j)))


def f_closed(n: int, y: int, z: int) -> int:
    """The increasing f with f(1) = (y+z+1)/2 and f(f(n)) = y*n+z for n > 1.

    With ``w = (y+z-1)/2``, segment k holds the indices
    ``[(2w*y**k - z)/(y-1), (2w*y**(k+1) - z)/(y-1))`` and is centred on
    ``((y+1)*w*y**k - z)/(y-1)``.
    """
    check_theorem1(y, z)
    _positive(n)
    w = (y + z - 1) // 2
    if w == 0:
        # y + z = 1 leaves every segment empty; only the solver covers this case
        raise InvalidParameters(f"no segment formula for y + z = 1, got ({y}, {z})")
    p = 1
    while 2 * w * p * y <= n * (y - 1) + z:
        p *= y
    centre, r = divmod((y + 1) * w * p - z, y - 1)
    assert r == 0
    j = n - centre
    base, r = divmod(2 * w * p * y - z, y - 1)
    assert r == 0
    return check_term(base + _half((y + 1) * j + (y - 1) * abs(j)))


def b_closed(n: int) -> int:
    _positive(n)
    if n <= 4:
        return (1, 3, 5, 2)[n - 1]
    r = n % 4
    if r == 2:
        return n + 2
    if r == 3:
        return 6 * ((n + 1) // 4) - 3
    if r == 0:
        return 6 * (n // 4) - 1
    return 6 * ((n - 1) // 4) + 1


def dprime_closed(n: int) -> int:
    """``n`` plus the integer nearest to sqrt(2n).

    With ``r = isqrt(2n)`` the root rounds up exactly when ``2n > r*r + r``;
    the halfway point ``r*r + r + 1/4`` is never an integer, so no tie occurs.
    """
    _positive(n)
    r = isqrt(2 * n)
    return n + r + (2 * n > r * r + r)


def closed_sequence(fn, count: int, n0: int = 1, name: str | None = None, **kw) -> GeneratedSequence:
    terms = tuple(fn(n, **kw) for n in range(n0, n0 + count))
    return GeneratedSequence(n0, terms, Provenance(name or fn.__name__, kw))


def golomb(count: int) -> GeneratedSequence:
    """G(1) = 1, G(n) = 1 + G(n - G(G(n-1)))."""
    if count < 1:
        raise InvalidParameters("count must be positive")
    g = [0, 1]
    for n in range(2, count + 1):
        g.append(1 + g[n - g[g[n - 1]]])
    return GeneratedSequence(1, tuple(g[1:]), Provenance("golomb", monotone=False))


def golomb_estimate(n: int) -> float:
    return PHI ** (2 - PHI) * n ** (PHI - 1)
