"""Polynomial ansatz, Newton refinement and algebraic recognition."""

from .ansatz import AnsatzError, AnsatzSystem, FiberClass, build_system, system_for_profile
from .lll import AlgebraicGuess, PrecisionTooLow, best_rational, integer_relation, lll_recognize
from .newton import NewtonError, NewtonResult, PrecisionContext, newton_refine
from .reconstruct import (
    ReconstructionError,
    compose_moebius,
    equivalent_up_to_gauge,
    gauge_forms,
    rationalize,
    recognize_coefficients,
    reconstruct_over_field,
    same_map,
)

__all__ = [
    "AlgebraicGuess",
    "AnsatzError",
    "AnsatzSystem",
    "FiberClass",
    "NewtonError",
    "NewtonResult",
    "PrecisionContext",
    "PrecisionTooLow",
    "ReconstructionError",
    "best_rational",
    "build_system",
    "compose_moebius",
    "equivalent_up_to_gauge",
    "gauge_forms",
    "integer_relation",
    "lll_recognize",
    "newton_refine",
    "rationalize",
    "recognize_coefficients",
    "reconstruct_over_field",
    "same_map",
    "system_for_profile",
]
