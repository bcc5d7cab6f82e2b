"""Self-referential integer sequences, the Aronson transform and its inverse,
square constraints s(s(n)) = yn+z, closed forms and difference words."""

from .core import (AronsonError, BacktrackExhausted, Contradiction, ContradictionAtStart,
                   GeneratedSequence, HorizonExceeded, InvalidParameters, MissingRule,
                   NoCandidate, NonMonotoneInput, Provenance, TermOverflow, UnknownIdentity,
                   UnknownSequence)
from .engine import Mode, RuleSpec, Window, generate
from .oracles import parse_oracle
from .registry import REGISTRY, registry_lookup
from .squares import SquareConstraint, solve_square, theorem1_sequence
from .transform import InverseOracle, aronson_transform, inverse_aronson, sequence_square

__all__ = [
    "AronsonError", "BacktrackExhausted", "Contradiction", "ContradictionAtStart",
    "GeneratedSequence", "HorizonExceeded", "InvalidParameters", "MissingRule", "NoCandidate",
    "NonMonotoneInput", "Provenance", "TermOverflow", "UnknownIdentity", "UnknownSequence",
    "Mode", "RuleSpec", "Window", "generate", "parse_oracle", "REGISTRY", "registry_lookup",
    "SquareConstraint", "solve_square", "theorem1_sequence", "aronson_transform", "InverseOracle",
    "inverse_aronson", "sequence_square",
]
