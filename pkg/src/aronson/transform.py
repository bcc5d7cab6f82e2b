"""The Aronson transform, its inverse, and the square of a sequence."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field

from .core import GeneratedSequence, HorizonExceeded, NonMonotoneInput, Provenance
from .engine import _DEMANDS, Mode, RuleSpec, _monotone
from .oracles import Oracle


def aronson_transform(beta: Oracle, n0: int = 1, count: int = 10,
                      seeds: tuple[int, ...] = ()) -> GeneratedSequence:
    """The increasing sequence alpha with "n in alpha iff alpha(n) in beta"."""
    rule = RuleSpec(oracle=beta, n0=n0, seeds=tuple(seeds), name="aronson_transform")
    return _monotone(rule, beta, _DEMANDS[Mode.IFF], count)


def oracle_sequence(oracle: Oracle, count: int, n0: int = 1, start: int | None = None,
                    name: str | None = None) -> GeneratedSequence:
    """The first ``count`` members of ``oracle`` (those >= ``start``) indexed from ``n0``."""
    start = n0 if start is None else start
    return GeneratedSequence(n0, tuple(oracle.members(start, count)),
                             Provenance(name or oracle.spec))


@dataclass
class InverseTable:
    """Hot and cold rows of the inverse construction, one entry per column.

    Each slot holds a list of ``range`` objects so long runs stay cheap.
    """

    n0: int
    alpha: list[int] = field(default_factory=list)
    hot: list[list[range]] = field(default_factory=list)
    cold: list[list[range]] = field(default_factory=list)
    largest: int = 0  # l_n for the next column

    def hot_values(self):
        for slot in self.hot:
            for r in slot:
                yield from r


def inverse_table(alpha: GeneratedSequence, columns: int | None = None) -> InverseTable:
    if not alpha.monotone:
        raise NonMonotoneInput(f"{alpha.provenance}: inverse transform needs an increasing sequence")
    n0 = alpha.n0
    if alpha.terms and alpha.terms[0] < n0:
        raise NonMonotoneInput(f"{alpha.provenance}: first term {alpha.terms[0]} below n0={n0}")
    columns = len(alpha) if columns is None else columns
    if columns > len(alpha):
        raise HorizonExceeded(f"{alpha.provenance}: {columns} columns need {columns} terms")
    table = InverseTable(n0, largest=n0 - 1)
    p = 0
    for i in range(columns):
        n = n0 + i
        an = alpha.terms[i]
        while alpha.terms[p] < n:
            p += 1
        inside = alpha.terms[p] == n
        fill = range(table.largest + 1, an)
        if inside:
            hot, cold = [range(an, an + 1)], [fill]
        elif table.largest == n - 1:
            hot, cold = [range(n + 1, an)], [range(n, n + 1), range(an, an + 1)]
        else:
            hot, cold = [fill], [range(an, an + 1)]
        table.alpha.append(an)
        table.hot.append([r for r in hot if r])
        table.cold.append([r for r in cold if r])
        table.largest = an
    return table


def inverse_aronson(alpha: GeneratedSequence, count: int | None = None) -> GeneratedSequence:
    """The unique beta whose Aronson transform is ``alpha``.

    Every integer up to ``alpha(last)`` is classified, so that is the
    horizon of the result. ``count`` caps the number of terms returned.
    """
    table = inverse_table(alpha)
    terms = list(table.hot_values())
    through = table.largest
    if count is not None:
        if count > len(terms):
            raise HorizonExceeded(
                f"{alpha.provenance}: only {len(terms)} inverse terms determined, asked for {count}")
        if count < len(terms):
            terms = terms[:count]
            through = terms[-1]
    return GeneratedSequence(alpha.n0, tuple(terms),
                             Provenance("inverse_aronson", {"alpha": str(alpha.provenance)}),
                             complete_through=through)


class InverseOracle(Oracle):
    """Membership in the inverse transform of ``alpha``, answered from the
    hot ranges without expanding them. Known through ``alpha(last)``."""

    def __init__(self, alpha: GeneratedSequence):
        table = inverse_table(alpha)
        self.n0 = alpha.n0
        self.horizon = table.largest
        self.spec = f"inverse:{alpha.provenance.name}"
        starts, stops = [], []
        for slot in table.hot:
            for r in slot:
                if stops and stops[-1] == r.start:
                    stops[-1] = r.stop
                else:
                    starts.append(r.start)
                    stops.append(r.stop)
        self.starts, self.stops = starts, stops

    def _check(self, x):
        if x > self.horizon:
            raise HorizonExceeded(f"{self.spec}: membership of {x} unknown "
                                  f"(known through {self.horizon})")

    def _run(self, x):
        i = bisect_right(self.starts, x) - 1
        return i if i >= 0 and x < self.stops[i] else None

    def _contains(self, x):
        self._check(x)
        return self._run(x) is not None

    def next_member(self, x):
        x = max(x, self.n0)
        self._check(x)
        if self._run(x) is not None:
            return x
        i = bisect_right(self.starts, x)
        if i == len(self.starts):
            raise HorizonExceeded(f"{self.spec}: no member known at or after {x}")
        return self.starts[i]

    def next_nonmember(self, x):
        x = max(x, self.n0)
        i = self._run(x)
        if i is not None:
            x = self.stops[i]
        self._check(x)
        return x


def sequence_square(s: GeneratedSequence, count: int | None = None) -> GeneratedSequence:
    """``{s(s(n))}`` for every n whose inner value lies inside the prefix."""
    out = []
    for n, v in s.items():
        if count is not None and len(out) == count:
            break
        if v < s.n0:
            raise HorizonExceeded(f"{s.provenance}: s({n}) = {v} is below n0={s.n0}")
        if v > s.last_index:
            if count is not None or not s.monotone:
                raise HorizonExceeded(f"{s.provenance}: s(s({n})) needs s({v})")
            break
        out.append(s(v))
    return GeneratedSequence(s.n0, tuple(out),
                             Provenance("square", {"of": str(s.provenance)}, s.monotone))
