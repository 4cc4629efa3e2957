"""Activation-based conditional inference over conditional belief bases."""

from ._core import (
    BeliefBase,
    CapacityError,
    Conditional,
    Error,
    IdError,
    InconsistentBase,
    KnowledgeBase,
    RangeError,
    Session,
    SignatureMismatch,
    SyntaxError,
    answer,
    focus,
    is_consistent,
    parse_belief_base,
    parse_conditional,
    parse_formula,
    system_p_infers,
    z_partition,
)

__all__ = [
    "BeliefBase",
    "CapacityError",
    "Conditional",
    "Error",
    "IdError",
    "InconsistentBase",
    "KnowledgeBase",
    "RangeError",
    "Session",
    "SignatureMismatch",
    "SyntaxError",
    "answer",
    "focus",
    "is_consistent",
    "parse_belief_base",
    "parse_conditional",
    "parse_formula",
    "system_p_infers",
    "z_partition",
]
