"""Lexicographically least increasing solutions of s(s(n)) = y*n + z.

The solver walks the indices in order. Every known pair ``s(i) = v``
propagates two consequences:

* forward: ``s(v) = y*i + z`` (when the constraint applies at ``i``);
* backward: if ``v = y*k + z`` then ``s(k) = i``, by injectivity.

Every value ``y*k + z`` must be hit by some index, so a gap between two
known points can only hold as many of them as it has free slots. A free
index takes the smallest candidate whose propagated consequences pass
these order and counting checks; failed trials are rolled back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (Contradiction, GeneratedSequence, HorizonExceeded, InvalidParameters,
                   Provenance)

# parameter pairs of equal parity whose least solutions are known to exist
EQUAL_PARITY_OK = frozenset({(4, 0), (4, 3), (2, 0), (2, 3)})


@dataclass(frozen=True)
class SquareConstraint:
    """``s(s(n)) = y*n + z`` for ``n >= start``, indices from ``n0``.

    ``start`` defaults to ``n0``. ``forced`` lists ``(index, value)`` seeds.
    """

    y: int
    z: int
    n0: int = 1
    forced: tuple[tuple[int, int], ...] = ()
    start: int | None = None

    @property
    def first_constrained(self) -> int:
        return self.n0 if self.start is None else self.start

    def validate(self) -> None:
        if self.y < 2:
            raise InvalidParameters(f"y must be >= 2, got {self.y}")
        if (self.y - self.z) % 2 == 0 and not self.forced \
                and (self.y, self.z) not in EQUAL_PARITY_OK:
            raise InvalidParameters(
                f"y={self.y}, z={self.z} have equal parity; supply seeds")
        if self.first_constrained < self.n0:
            raise InvalidParameters("start must not precede n0")


class _Solver:
    """Known values live in a flat list over ``[0, horizon]`` with a parallel
    byte mask, so nearest known neighbours are found by C-level scans."""

    def __init__(self, con: SquareConstraint, horizon: int):
        self.y, self.z, self.n0 = con.y, con.z, con.n0
        self.start = con.first_constrained
        self.horizon = horizon
        self.vals: list[int] = [-1] * (horizon + 1)
        self.known = bytearray(horizon + 1)
        self.cursor = self.n0  # every index below this is known

    def _must(self, lo: int, hi: int) -> int:
        """How many values y*k+z with k >= start lie strictly between lo and hi."""
        y, z = self.y, self.z
        first = max(self.start, (lo - z) // y + 1)
        last = -((z - hi) // y) - 1  # ceil((hi - z) / y) - 1
        return max(0, last - first + 1)

    def _assign(self, i: int, v: int, log: list[range]) -> bool:
        y, z, n0, start = self.y, self.z, self.n0, self.start
        vals, known, horizon = self.vals, self.known, self.horizon
        todo = [(i, v)]
        while todo:
            i, v = todo.pop()
            if i > horizon:
                continue
            if i < n0 or v < n0:
                return False
            if known[i]:
                if vals[i] != v:
                    return False
                continue
            lo = known.rfind(1, 0, i)
            if lo < n0:
                lo = lv = n0 - 1
            else:
                lv = vals[lo]
            if v - lv < i - lo or self._must(lv, v) > i - lo - 1:
                return False
            hi = known.find(1, i + 1)
            if hi >= 0:
                hv = vals[hi]
                if hv - v < hi - i or self._must(v, hv) > hi - i - 1:
                    return False
            # a gap exactly as wide as its value range is forced; those
            # entries sit between known neighbours, so only their
            # consequences need checking
            run = range(max(lo + 1, n0), i + 1) if v - lv == i - lo else range(i, i + 1)
            shift = v - i
            known[run.start:run.stop] = b"\x01" * len(run)
            log.append(run)
            for j in run:
                w = j + shift
                vals[j] = w
                if j >= start:
                    todo.append((w, y * j + z))
                k, r = divmod(w - z, y)
                if r == 0 and k >= start:
                    todo.append((k, j))
        return True

    def _rollback(self, log: list[range]) -> None:
        for run in log:
            self.known[run.start:run.stop] = bytes(len(run))

    def place(self, i: int, v: int) -> bool:
        log: list[range] = []
        if self._assign(i, v, log):
            return True
        self._rollback(log)
        return False

    def advance(self) -> int:
        """Settle s(cursor) and move past it."""
        n = self.cursor
        if n > self.horizon:
            raise HorizonExceeded(f"index {n} is past the solver horizon {self.horizon}")
        if not self.known[n]:
            lv = self.vals[n - 1] if n > self.n0 else self.n0 - 1
            top = lv + 1 + self.y * (n + 1) + abs(self.z) + 64
            hi = self.known.find(1, n + 1)
            if hi >= 0:
                top = min(top, self.vals[hi] - (hi - n))
            for c in range(lv + 1, top + 1):
                if self.place(n, c):
                    break
            else:
                raise Contradiction(f"no value for s({n}) is consistent")
        self.cursor = n + 1
        return self.vals[n]


def solve_square(con: SquareConstraint, count: int, horizon: int | None = None) -> GeneratedSequence:
    """First ``count`` terms of the least increasing solution of ``con``."""
    con.validate()
    if count < 1:
        raise InvalidParameters("count must be positive")
    last = con.n0 + count - 1
    if horizon is None:
        horizon = con.y * (last + 1) + abs(con.z) + 16
    solver = _Solver(con, horizon)
    for i, v in sorted(con.forced):
        if not solver.place(i, v):
            raise Contradiction(f"seed s({i}) = {v} is inconsistent")
    terms = [solver.advance() for _ in range(count)]
    params = {"y": con.y, "z": con.z, "n0": con.n0}
    if con.forced:
        params["forced"] = con.forced
    if con.start is not None:
        params["start"] = con.start
    return GeneratedSequence(con.n0, tuple(terms), Provenance("solve_square", params))


def check_theorem1(y: int, z: int) -> None:
    if y < 2 or y + z < 1 or 2 * y + z < 4:
        raise InvalidParameters(f"(y, z) = ({y}, {z}) violates y>=2, y+z>=1, 2y+z>=4")
    if (y + z) % 2 == 0:
        raise InvalidParameters(f"(y, z) = ({y}, {z}) must have opposite parity")


def theorem1_sequence(y: int, z: int, count: int) -> GeneratedSequence:
    """Increasing f with f(1) = (y+z+1)/2 and f(f(n)) = y*n+z for n > 1."""
    check_theorem1(y, z)
    con = SquareConstraint(y, z, n0=1, forced=((1, (y + z + 1) // 2),), start=2)
    seq = solve_square(con, count)
    return GeneratedSequence(1, seq.terms, Provenance("theorem1", {"y": y, "z": z}))


def square_defect(seq: GeneratedSequence, y: int, z: int, start: int | None = None) -> int | None:
    """First n >= start where s(s(n)) != y*n+z (both sides in range), else None."""
    start = seq.n0 if start is None else start
    for n, v in seq.items():
        if n < start:
            continue
        if v > seq.last_index:
            break
        if seq(v) != y * n + z:
            return n
    return None
