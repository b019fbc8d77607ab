"""Checks on Belyi candidates and the evidence needed to identify their monodromy."""

from .conclude import Decision, MonodromyEvidence, conclude_monodromy
from .decompose import DecompositionResult, WildDecompositionError, indecomposability_test, is_composition
from .frobenius import FrobeniusSample, frobenius_sample
from .numerical import ContinuationError, numerical_monodromy
from .ramification import (
    NotReducedError,
    RamificationProfile,
    WildRamificationError,
    check_belyi,
    ramification_profile,
)
from .report import FAIL, PASS, SKIP, Report
from .twotrans import BivariateFactor, InterpolationError, twotrans_obstruction

__all__ = [
    "FAIL",
    "PASS",
    "SKIP",
    "BivariateFactor",
    "ContinuationError",
    "Decision",
    "DecompositionResult",
    "FrobeniusSample",
    "InterpolationError",
    "MonodromyEvidence",
    "NotReducedError",
    "RamificationProfile",
    "Report",
    "WildDecompositionError",
    "WildRamificationError",
    "check_belyi",
    "conclude_monodromy",
    "frobenius_sample",
    "indecomposability_test",
    "is_composition",
    "numerical_monodromy",
    "ramification_profile",
    "twotrans_obstruction",
]
