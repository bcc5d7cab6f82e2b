"""Membership oracles: integer sets queryable by membership and by
"next member / next non-member at or after x".

Every builtin set here is infinite with an infinite complement, except
:class:`AllIntegers` (used for fixed-point checks) whose complement is empty.
Oracles backed by a finite prefix raise :class:`HorizonExceeded` rather than
guess past what they know.
"""

from __future__ import annotations

import threading
from bisect import bisect_left
from math import isqrt

from .core import GeneratedSequence, HorizonExceeded, InvalidParameters


class Oracle:
    """Base class. Subclasses override :meth:`_contains` and, where a direct
    formula exists, the two ``next_*`` searches."""

    n0 = 0
    spec = "?"

    def contains(self, x: int) -> bool:
        if x < self.n0:
            raise ValueError(f"{self}: query {x} below n0={self.n0}")
        return self._contains(x)

    __contains__ = contains

    def _contains(self, x: int) -> bool:
        raise NotImplementedError

    def next_member(self, x: int) -> int:
        x = max(x, self.n0)
        while not self._contains(x):
            x += 1
        return x

    def next_nonmember(self, x: int) -> int:
        x = max(x, self.n0)
        while self._contains(x):
            x += 1
        return x

    def members(self, start: int, count: int) -> list[int]:
        """The first ``count`` members that are >= ``start``."""
        out = []
        x = start
        for _ in range(count):
            x = self.next_member(x)
            out.append(x)
            x += 1
        return out

    def complement(self) -> "Oracle":
        return Complement(self)

    def __repr__(self) -> str:
        return f"<oracle {self.spec}>"


class Odds(Oracle):
    spec = "odds"

    def _contains(self, x):
        return x & 1 == 1

    def next_member(self, x):
        x = max(x, self.n0)
        return x | 1

    def next_nonmember(self, x):
        x = max(x, self.n0)
        return x + (x & 1)


class Evens(Oracle):
    spec = "evens"

    def _contains(self, x):
        return x & 1 == 0

    def next_member(self, x):
        x = max(x, self.n0)
        return x + (x & 1)

    def next_nonmember(self, x):
        x = max(x, self.n0)
        return x | 1


class Multiples(Oracle):
    def __init__(self, m: int):
        if m < 2:
            raise InvalidParameters(f"multiples of {m} leave no infinite complement")
        self.m = m
        self.spec = f"multiples:{m}"

    def _contains(self, x):
        return x % self.m == 0

    def next_member(self, x):
        x = max(x, self.n0)
        return -(-x // self.m) * self.m


class Residue(Oracle):
    """``{i*y + z : i >= 1}``."""

    def __init__(self, y: int, z: int):
        if y < 1:
            raise InvalidParameters(f"residue step must be positive, got {y}")
        self.y, self.z = y, z
        self.spec = f"residue:{y}:{z}"

    def _contains(self, x):
        return x >= self.y + self.z and (x - self.z) % self.y == 0

    def next_member(self, x):
        x = max(x, self.n0, self.y + self.z)
        return x + (-(x - self.z)) % self.y

    def next_nonmember(self, x):
        if self.y == 1 and max(x, self.n0) >= self.z + 1:
            raise InvalidParameters(f"{self.spec} has no non-members >= {x}")
        return super().next_nonmember(x)


class Theorem1Set(Oracle):
    """``[2, (y+z-1)/2]`` together with ``{i*y + z : i >= 1}``.

    Membership in this set drives the greedy form of the ``f(f(n)) = yn+z``
    family; the interval part is empty when ``(y+z-1)/2 <= 1``.
    """

    def __init__(self, y: int, z: int):
        if y < 2:
            raise InvalidParameters(f"y must be >= 2, got {y}")
        self.y, self.z = y, z
        self.top = (y + z - 1) // 2
        self.residue = Residue(y, z)
        self.spec = f"theorem1:{y}:{z}"

    def _contains(self, x):
        return 2 <= x <= self.top or self.residue._contains(x)

    def next_member(self, x):
        x = max(x, self.n0, 2)
        if x <= self.top:
            return x
        return self.residue.next_member(x)


class Squares(Oracle):
    spec = "squares"

    def _contains(self, x):
        r = isqrt(x)
        return r * r == x

    def next_member(self, x):
        x = max(x, self.n0)
        if x <= 0:
            return 0
        r = isqrt(x - 1) + 1
        return r * r


class Triangular(Oracle):
    spec = "triangular"

    def _contains(self, x):
        r = isqrt(8 * x + 1)
        return r * r == 8 * x + 1

    def next_member(self, x):
        x = max(x, self.n0, 0)
        m = (isqrt(8 * x + 1) - 1) // 2
        t = m * (m + 1) // 2
        return t if t == x else t + m + 1


class Primes(Oracle):
    """Primes from an incremental sieve that doubles on demand.

    Growth is guarded by a lock so concurrent readers see a consistent table.
    """

    spec = "primes"

    def __init__(self, initial: int = 1 << 12):
        self._lock = threading.Lock()
        self._sieve = bytearray()
        self._grow(initial)

    def _grow(self, limit: int) -> None:
        with self._lock:
            if limit < len(self._sieve):
                return
            size = max(limit + 1, 2 * len(self._sieve))
            s = bytearray([1]) * size
            s[0:2] = b"\x00\x00"
            for p in range(2, isqrt(size - 1) + 1):
                if s[p]:
                    s[p * p::p] = bytes(len(range(p * p, size, p)))
            self._sieve = s

    def _contains(self, x):
        if x >= len(self._sieve):
            self._grow(x)
        return self._sieve[x] == 1

    def next_member(self, x):
        x = max(x, self.n0)
        while True:
            i = self._sieve.find(1, x)
            if i >= 0:
                return i
            self._grow(2 * len(self._sieve))


def lower_wythoff(n: int) -> int:
    """``floor(n*phi)`` in exact integer arithmetic.

    ``n*phi = (n + n*sqrt(5))/2`` and ``floor(n*sqrt(5)) = isqrt(5n^2)`` since
    the root is irrational for n > 0.
    """
    return (n + isqrt(5 * n * n)) // 2


class LowerWythoff(Oracle):
    spec = "wythoff"

    @staticmethod
    def _index_below(x: int) -> int:
        # floor(x/phi) - 1, never above the true preimage
        return max(1, (isqrt(5 * x * x) - x) // 2 - 1)

    def _contains(self, x):
        if x < 1:
            return False
        return self.next_member(x) == x

    def next_member(self, x):
        x = max(x, self.n0, 1)
        n = self._index_below(x)
        w = lower_wythoff(n)
        while w < x:
            n += 1
            w = lower_wythoff(n)
        return w


class AllIntegers(Oracle):
    """Every integer >= n0. Its complement is empty."""

    def __init__(self, n0: int = 0):
        self.n0 = n0
        self.spec = f"all:{n0}"

    def _contains(self, x):
        return True

    def next_member(self, x):
        return max(x, self.n0)

    def next_nonmember(self, x):
        raise InvalidParameters("the set of all integers has no non-members")


class Complement(Oracle):
    def __init__(self, inner: Oracle):
        self.inner = inner
        self.n0 = inner.n0
        self.spec = f"complement:{inner.spec}"

    def _contains(self, x):
        return not self.inner._contains(x)

    def next_member(self, x):
        return self.inner.next_nonmember(x)

    def next_nonmember(self, x):
        return self.inner.next_member(x)

    def complement(self):
        return self.inner


class FromSequence(Oracle):
    """The value set of a monotone :class:`GeneratedSequence`.

    Queries above ``seq.complete_through`` raise :class:`HorizonExceeded`.
    """

    def __init__(self, seq: GeneratedSequence, spec: str | None = None):
        if not seq.monotone:
            raise InvalidParameters("membership oracle needs a monotone sequence")
        self.seq = seq
        self.terms = seq.terms
        self.horizon = seq.complete_through if seq.complete_through is not None else -1
        self.spec = spec or f"seq:{seq.provenance.name}"

    def _check(self, x):
        if x > self.horizon:
            raise HorizonExceeded(f"{self.spec}: membership of {x} unknown "
                                  f"(known through {self.horizon})")

    def _contains(self, x):
        self._check(x)
        i = bisect_left(self.terms, x)
        return i < len(self.terms) and self.terms[i] == x

    def next_member(self, x):
        x = max(x, self.n0)
        self._check(x)
        i = bisect_left(self.terms, x)
        if i == len(self.terms):
            raise HorizonExceeded(f"{self.spec}: no member known at or after {x}")
        return self.terms[i]

    def next_nonmember(self, x):
        x = max(x, self.n0)
        terms = self.terms
        i = bisect_left(terms, x)
        while i < len(terms) and terms[i] == x:
            i += 1
            x += 1
        self._check(x)
        return x


class FromBFile(FromSequence):
    def __init__(self, path):
        from .bfile import read_bfile

        super().__init__(read_bfile(path), spec=f"bfile:{path}")


_SIMPLE = {"odds": Odds, "evens": Evens, "squares": Squares, "triangular": Triangular,
           "primes": Primes, "wythoff": LowerWythoff}


def parse_oracle(spec: str) -> Oracle:
    """Build an oracle from a string such as ``odds``, ``multiples:6``,
    ``residue:3:0``, ``theorem1:2:1``, ``all:0``, ``complement:evens`` or
    ``bfile:PATH``."""
    kind, _, rest = spec.strip().partition(":")
    kind = kind.lower()
    if kind == "complement":
        return Complement(parse_oracle(rest))
    if kind == "bfile":
        return FromBFile(rest)
    try:
        args = [int(x) for x in rest.split(":")] if rest else []
    except ValueError:
        raise InvalidParameters(f"bad oracle parameters in {spec!r}") from None
    factories = {**_SIMPLE, "multiples": Multiples, "residue": Residue,
                 "theorem1": Theorem1Set, "all": AllIntegers}
    if kind not in factories:
        raise InvalidParameters(f"unknown oracle kind {kind!r}")
    try:
        return factories[kind](*args)
    except TypeError:
        raise InvalidParameters(f"wrong number of parameters in {spec!r}") from None
