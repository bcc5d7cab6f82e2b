"""Basic value types shared by every generator: errors, term checks and
the immutable :class:`GeneratedSequence` container."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Mapping

INT64_MAX = 2**63 - 1


class AronsonError(Exception):
    """Base class for all errors raised by this package."""


class TermOverflow(AronsonError):
    pass


class HorizonExceeded(AronsonError):
    """A query needed information beyond a materialized prefix."""


class ContradictionAtStart(AronsonError):
    pass


class NoCandidate(AronsonError):
    pass


class BacktrackExhausted(AronsonError):
    pass


class Contradiction(AronsonError):
    pass


class InvalidParameters(AronsonError):
    pass


class NonMonotoneInput(AronsonError):
    pass


class MissingRule(AronsonError):
    pass


class UnknownSequence(AronsonError):
    pass


class UnknownIdentity(AronsonError):
    pass


def check_term(x: int) -> int:
    """Return ``x`` unchanged, raising :class:`TermOverflow` outside [0, 2**63)."""
    if x < 0 or x > INT64_MAX:
        raise TermOverflow(f"term {x} outside the 64-bit nonnegative range")
    return x


@dataclass(frozen=True)
class Provenance:
    name: str
    params: Mapping[str, Any] = field(default_factory=dict)
    monotone: bool = True

    def __str__(self) -> str:
        if not self.params:
            return self.name
        inner = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name}({inner})"


@dataclass(frozen=True, eq=False)
class GeneratedSequence:
    """A finite, indexed prefix ``s(n0), s(n0+1), ...`` of a sequence.

    ``s(n)`` is available through call syntax. ``complete_through`` is the
    largest integer whose membership in the (infinite) sequence is settled by
    this prefix; for a monotone prefix it defaults to the last term.
    """

    n0: int
    terms: tuple[int, ...]
    provenance: Provenance = Provenance("anonymous")
    complete_through: int | None = None

    def __post_init__(self):
        terms = tuple(int(t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        if terms:
            check_term(min(terms))
            check_term(max(terms))
        if self.provenance.monotone:
            for u, v in zip(terms, terms[1:]):
                if v <= u:
                    raise NonMonotoneInput(
                        f"{self.provenance}: terms not strictly increasing ({u}, {v})")
            if self.complete_through is None and terms:
                object.__setattr__(self, "complete_through", terms[-1])

    @classmethod
    def from_values(cls, values: Iterable[int], n0: int = 1, name: str = "anonymous",
                    monotone: bool = True, **params) -> "GeneratedSequence":
        return cls(n0, tuple(values), Provenance(name, params, monotone))

    def __call__(self, n: int) -> int:
        i = n - self.n0
        if i < 0:
            raise IndexError(f"index {n} below n0={self.n0}")
        if i >= len(self.terms):
            raise HorizonExceeded(
                f"{self.provenance}: index {n} beyond materialized prefix "
                f"(last index {self.last_index})")
        return self.terms[i]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __eq__(self, other):
        if not isinstance(other, GeneratedSequence):
            return NotImplemented
        return self.n0 == other.n0 and self.terms == other.terms

    def __hash__(self):
        return hash((self.n0, self.terms))

    def __repr__(self) -> str:
        head = ", ".join(map(str, self.terms[:10]))
        more = ", ..." if len(self.terms) > 10 else ""
        return f"<{self.provenance} n0={self.n0}: {head}{more} ({len(self)} terms)>"

    @property
    def monotone(self) -> bool:
        return self.provenance.monotone

    @property
    def last_index(self) -> int:
        return self.n0 + len(self.terms) - 1

    def indices(self) -> range:
        return range(self.n0, self.n0 + len(self.terms))

    def items(self) -> Iterator[tuple[int, int]]:
        return zip(self.indices(), self.terms)

    def head(self, count: int) -> "GeneratedSequence":
        if count > len(self.terms):
            raise HorizonExceeded(f"{self.provenance}: asked for {count} of {len(self)} terms")
        return GeneratedSequence(self.n0, self.terms[:count], self.provenance)

    def has_value(self, x: int) -> bool:
        """Membership of ``x`` among the values; exact only up to ``complete_through``."""
        if self.monotone:
            if self.complete_through is None or x > self.complete_through:
                raise HorizonExceeded(
                    f"{self.provenance}: membership of {x} unknown past {self.complete_through}")
            i = bisect_left(self.terms, x)
            return i < len(self.terms) and self.terms[i] == x
        return x in set(self.terms)
