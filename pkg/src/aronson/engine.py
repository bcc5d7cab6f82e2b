"""Greedy generators for self-referential rules of the form
"n is in the sequence <relation> s(n) is in beta".

The monotone generators never search: once ``s(n) = k`` is known, the
membership of ``n+1`` is either already settled (``k > n``) or can be
settled by the choice of ``s(n+1)`` itself (``k == n``), and the next term is
the smallest member / non-member of beta that the relation demands.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .core import (BacktrackExhausted, ContradictionAtStart, GeneratedSequence,
                   InvalidParameters, NoCandidate, Provenance)
from .oracles import Complement, Oracle


class Mode(Enum):
    IFF = "iff"
    ONLY_IF = "onlyif"
    IF = "if"
    NEGATED_IFF = "negated"


HOT, COLD, ANY = "hot", "cold", "any"

# what membership of the index n demands of the value s(n)
_DEMANDS = {
    Mode.IFF: {True: HOT, False: COLD},
    Mode.ONLY_IF: {True: HOT, False: ANY},
    Mode.IF: {True: ANY, False: COLD},
    Mode.NEGATED_IFF: {True: COLD, False: HOT},
}


@dataclass(frozen=True)
class Window:
    """A condition on two neighbouring terms.

    ``offset=-1`` evaluates ``predicate(s(n-1), s(n))`` and
    ``offset=+1`` evaluates ``predicate(s(n), s(n+1))``. For a backward
    window ``before_start`` stands in for the missing ``s(n0-1)``. Set
    ``modulus`` when the predicate depends only on residues modulo it.
    """

    name: str
    predicate: Callable[[int, int], bool]
    offset: int
    before_start: int = 0
    modulus: int | None = None


ODD_AFTER_EVEN = Window("odd-after-even", lambda p, c: c % 2 == 1 and p % 2 == 0, -1, modulus=2)
ODD_BEFORE_EVEN = Window("odd-before-even", lambda c, nx: c % 2 == 1 and nx % 2 == 0, +1, modulus=2)
BOTH_ODD_NEXT = Window("both-odd-next", lambda c, nx: c % 2 == 1 and nx % 2 == 1, +1, modulus=2)
WINDOWS = {w.name: w for w in (ODD_AFTER_EVEN, ODD_BEFORE_EVEN, BOTH_ODD_NEXT)}


@dataclass(frozen=True)
class RuleSpec:
    oracle: Oracle | None = None
    mode: Mode = Mode.IFF
    monotone: bool = True
    n0: int = 1
    seeds: tuple[int, ...] = ()
    window: Window | None = None
    name: str = "rule"

    def provenance(self) -> Provenance:
        params = {"mode": self.mode.value, "n0": self.n0}
        if self.oracle is not None:
            params["oracle"] = self.oracle.spec
        if self.seeds:
            params["seeds"] = self.seeds
        if self.window is not None:
            params["window"] = self.window.name
        return Provenance(self.name, params, monotone=self.monotone)


def _pick(oracle: Oracle, demand: str, x: int) -> int:
    if demand is HOT:
        return oracle.next_member(x)
    if demand is COLD:
        return oracle.next_nonmember(x)
    return x


def _satisfies(oracle: Oracle, demand: str, value: int) -> bool:
    return demand is ANY or oracle.contains(value) == (demand is HOT)


def _validate_seeds(rule: RuleSpec, demands) -> list[int]:
    seeds = list(rule.seeds)
    if not seeds:
        return seeds
    if seeds[0] < rule.n0:
        raise ContradictionAtStart(f"seed {seeds[0]} below n0={rule.n0}")
    if any(v <= u for u, v in zip(seeds, seeds[1:])):
        raise ContradictionAtStart(f"seeds {seeds} are not strictly increasing")
    # the first seed is forced; every later seeded index must obey the rule
    values = set(seeds)
    for i, v in enumerate(seeds[1:], 1):
        n = rule.n0 + i
        if not _satisfies(rule.oracle, demands[n in values], v):
            raise ContradictionAtStart(f"seed s({n}) = {v} violates the rule")
    return seeds


def _monotone(rule: RuleSpec, oracle: Oracle, demands, count: int) -> GeneratedSequence:
    values = _validate_seeds(rule, demands)[:count]
    n0 = rule.n0
    p = 0  # values[p] is the smallest value >= the last index examined
    while len(values) < count:
        n = n0 + len(values) - 1
        k = values[-1] if values else n0 - 1
        if k > n:
            m = n + 1
            while values[p] < m:
                p += 1
            values.append(_pick(oracle, demands[values[p] == m], k + 1))
        elif _satisfies(oracle, demands[True], n + 1):
            values.append(n + 1)
        else:
            values.append(_pick(oracle, demands[False], n + 2))
    return GeneratedSequence(n0, tuple(values), rule.provenance())


def generate_monotone_iff(rule: RuleSpec, count: int) -> GeneratedSequence:
    """Smallest increasing sequence with "n in s iff s(n) in beta"."""
    if rule.mode is not Mode.IFF or not rule.monotone:
        raise InvalidParameters("generate_monotone_iff needs a monotone iff rule")
    return _monotone(rule, rule.oracle, _DEMANDS[Mode.IFF], count)


def generate_negated(rule: RuleSpec, count: int) -> GeneratedSequence:
    """The "lying" version: the iff statement must be false at every n.

    Identical to the iff rule over the complement of beta.
    """
    if rule.mode is not Mode.NEGATED_IFF or not rule.monotone:
        raise InvalidParameters("generate_negated needs a monotone negated rule")
    return _monotone(rule, Complement(rule.oracle), _DEMANDS[Mode.IFF], count)


def generate_one_directional(rule: RuleSpec, count: int) -> GeneratedSequence:
    if rule.mode not in (Mode.IF, Mode.ONLY_IF) or not rule.monotone:
        raise InvalidParameters("generate_one_directional needs an 'if' or 'only if' rule")
    return _monotone(rule, rule.oracle, _DEMANDS[rule.mode], count)


def step_epsilon(prev: int, n_in_sequence: bool) -> int:
    """One step of the parity stepper for the odd-number sequence (n >= 3)."""
    even = prev % 2 == 0
    return prev + (1 if even == n_in_sequence else 2)


def stepper_a(count: int) -> GeneratedSequence:
    """The sequence "n in a iff a(n) odd" from a(1)=1, a(2)=4 and the stepper."""
    values = [1, 4][:count]
    p = 0
    while len(values) < count:
        n = len(values) + 1
        while values[p] < n:
            p += 1
        values.append(step_epsilon(values[-1], values[p] == n))
    return GeneratedSequence(1, tuple(values), Provenance("stepper_a"))


class Status(Enum):
    UNDECIDED = 0
    IN = 1
    OUT = 2


class StatusLedger:
    """Write-once IN / OUT marks for integers; anything unmarked is UNDECIDED."""

    def __init__(self):
        self._marks: dict[int, Status] = {}

    def __getitem__(self, x: int) -> Status:
        return self._marks.get(x, Status.UNDECIDED)

    def __setitem__(self, x: int, status: Status) -> None:
        old = self._marks.get(x, Status.UNDECIDED)
        if old is not Status.UNDECIDED and old is not status:
            raise ContradictionAtStart(f"status of {x} flipped from {old.name} to {status.name}")
        self._marks[x] = status


def generate_nonmonotone(rule: RuleSpec, count: int, max_gap: int = 64) -> GeneratedSequence:
    """Smallest unused value consistent with "n in s iff s(n) in beta".

    An integer marked IN must eventually be used as a value, one marked OUT
    never may be. Choosing ``s(n) = c`` marks ``c`` IN and settles the status
    of ``n`` if it was still open.
    """
    if rule.monotone or rule.mode not in (Mode.IFF, Mode.NEGATED_IFF):
        raise InvalidParameters("generate_nonmonotone needs a non-monotone iff rule")
    oracle = rule.oracle if rule.mode is Mode.IFF else Complement(rule.oracle)
    ledger = StatusLedger()
    used: set[int] = set()
    values: list[int] = []
    high = rule.n0 - 1
    # one lazy union-find per demand: skips[d] links every integer already
    # known to be unusable for demand d (used, OUT, or of the wrong kind)
    # to its successor; unusable never becomes usable again
    skips: dict[str, dict[int, int]] = {ANY: {}, HOT: {}, COLD: {}}

    def usable(demand: str, c: int) -> bool:
        if c in used or ledger[c] is Status.OUT:
            return False
        return demand is ANY or oracle.contains(c) == (demand is HOT)

    def smallest(demand: str, x: int) -> int:
        skip = skips[demand]
        while True:
            root = x
            while root in skip:
                root = skip[root]
            while x in skip:
                skip[x], x = root, skip[x]
            if usable(demand, root):
                return root
            skip[root] = root + 1
            x = root + 1

    def accept(n: int, c: int) -> bool:
        hot = oracle.contains(c)
        st = ledger[n]
        if c == n:
            return hot and st is not Status.OUT
        if st is Status.IN:
            return hot
        if st is Status.OUT:
            return not hot
        return True

    def commit(n: int, c: int) -> None:
        nonlocal high
        st = ledger[n]
        used.add(c)
        ledger[c] = Status.IN
        if st is Status.UNDECIDED and c != n:
            ledger[n] = Status.IN if oracle.contains(c) else Status.OUT
        values.append(c)
        high = max(high, c)

    if len(set(rule.seeds)) != len(rule.seeds) or any(s < rule.n0 for s in rule.seeds):
        raise ContradictionAtStart(f"bad seeds {rule.seeds}")
    for i, c in enumerate(rule.seeds[:count]):
        n = rule.n0 + i
        if ledger[c] is Status.OUT or (i > 0 and not accept(n, c)):
            raise ContradictionAtStart(f"seed s({n}) = {c} violates the rule")
        commit(n, c)

    while len(values) < count:
        n = rule.n0 + len(values)
        st = ledger[n]
        demand = HOT if st is Status.IN else COLD if st is Status.OUT else ANY
        c = smallest(demand, rule.n0)
        if c == n and not accept(n, c):
            c = smallest(demand, n + 1)
        if c > high + max_gap:
            raise NoCandidate(f"no value for s({n}) within {max_gap} of {high}")
        commit(n, c)
    return GeneratedSequence(rule.n0, tuple(values), rule.provenance())


class _RelationQueue:
    """FIFO of residue relations with O(1) amortized product of the contents.

    A relation over Z_M is a tuple of M bitmasks: bit ``b`` of row ``a`` is
    set when residue ``a`` may be followed by residue ``b``.
    """

    def __init__(self):
        self._front: list[tuple[tuple, tuple]] = []  # (relation, product from here to bottom)
        self._back: list[tuple] = []
        self._back_product = None

    def __bool__(self):
        return bool(self._front or self._back)

    def push(self, rel):
        self._back.append(rel)
        self._back_product = rel if self._back_product is None else _compose(self._back_product, rel)

    def pop(self):
        if not self._front:
            acc = None
            for rel in reversed(self._back):
                acc = rel if acc is None else _compose(rel, acc)
                self._front.append((rel, acc))
            self._back.clear()
            self._back_product = None
        return self._front.pop()[0]

    def product(self):
        if not self._front:
            return self._back_product
        head = self._front[-1][1]
        return head if self._back_product is None else _compose(head, self._back_product)


def _apply(v: int, rel: tuple) -> int:
    out, r = 0, 0
    while v:
        if v & 1:
            out |= rel[r]
        v >>= 1
        r += 1
    return out


def _compose(first: tuple, then: tuple) -> tuple:
    return tuple(_apply(row, then) for row in first)


def _residue_relations(w: Window) -> dict[bool, tuple]:
    m = w.modulus
    return {member: tuple(sum(1 << b for b in range(m) if w.predicate(a, b + m) == member)
                          for a in range(m))
            for member in (True, False)}


def generate_windowed(rule: RuleSpec, count: int, max_gap: int = 64) -> GeneratedSequence:
    """Smallest increasing sequence with "n in s iff window(n) holds".

    Once ``s(n)`` is fixed, membership is known for every index up to
    ``s(n)``, so each of those indices constrains a pair of future terms.
    A candidate is accepted only if that whole chain of pair constraints can
    still be met. For windows whose predicate depends only on residues mod
    ``window.modulus`` this is an exact path question over residues, answered
    from a running product of relation matrices.
    """
    w = rule.window
    if w is None or not rule.monotone or rule.mode is not Mode.IFF:
        raise InvalidParameters("generate_windowed needs a monotone iff rule with a window")
    if w.modulus is None:
        raise InvalidParameters(f"window {w.name!r} declares no modulus")
    m = w.modulus
    rel = _residue_relations(w)
    n0 = rule.n0
    backward = w.offset < 0
    q: list[int] = []
    present: set[int] = set()
    queue = _RelationQueue()
    known = n0 - 1       # membership is settled for every index <= known
    pushed = n0 - 2      # last edge in the queue; edge t joins terms t and t+1

    def index_of(t):
        return t + 1 if backward else t

    def last_edge(h):
        return h - 1 if backward else h

    seeds = list(rule.seeds[:count])
    while len(q) < count:
        n = n0 + len(q)
        base = q[-1] if q else n0 - 1
        has_pending = backward or n > n0
        pending = queue.pop() if has_pending and n - 1 <= pushed else None
        tail = queue.product() if queue else None
        start = (q[-1] if q else w.before_start) % m
        forced = seeds[len(q)] if len(q) < len(seeds) else None
        if forced is not None and forced <= base:
            raise ContradictionAtStart(f"seed {forced} is not above {base}")
        candidates = [forced] if forced is not None else range(base + 1, base + 1 + max_gap)
        for c in candidates:
            r = c % m
            if has_pending:
                p_rel = pending if pending is not None else rel[index_of(n - 1) == c]
                if not (p_rel[start] >> r) & 1:
                    continue
            v = 1 << r
            if tail is not None:
                v = _apply(v, tail)
            for t in range(max(pushed + 1, n), last_edge(c) + 1):
                if not v:
                    break
                i = index_of(t)
                v = _apply(v, rel[i in present if i <= known else i == c])
            if v:
                break
        else:
            if forced is not None:
                raise ContradictionAtStart(f"seed s({n}) = {forced} violates the window condition")
            raise BacktrackExhausted(
                f"no consistent value for s({n}) within {max_gap} of {base}")
        q.append(c)
        present.add(c)
        for t in range(max(pushed + 1, n), last_edge(c) + 1):
            queue.push(rel[index_of(t) in present])
        pushed = max(pushed, last_edge(c))
        known = c
    return GeneratedSequence(n0, tuple(q), rule.provenance())


def generate(rule: RuleSpec, count: int) -> GeneratedSequence:
    if count < 1:
        raise InvalidParameters("count must be positive")
    if rule.window is not None:
        return generate_windowed(rule, count)
    if not rule.monotone:
        return generate_nonmonotone(rule, count)
    if rule.mode is Mode.IFF:
        return generate_monotone_iff(rule, count)
    if rule.mode is Mode.NEGATED_IFF:
        return generate_negated(rule, count)
    return generate_one_directional(rule, count)

