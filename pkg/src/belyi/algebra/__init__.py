"""Exact arithmetic: prime fields, number fields, polynomials over both."""

import random

from . import gfpoly
from .fields import QQ, FieldElement, NumberField, PrimeField, RationalField, certify_irreducible
from .gfpoly import FactoredPolynomial
from .reduction import NotIntegralError, PrimeIdealSpec, degree_one_primes, reduce_element, reduce_map_mod_prime


def factor_univariate_ff(f, p, rng=None):
    """Irreducible factorization of ``f`` (ascending integer coefficients) over F_p.

    ``rng`` drives the equal-degree splitting; pass a seeded
    ``random.Random`` for reproducibility. Defaults to seed 0.
    """
    return gfpoly.factor(f, p, rng if rng is not None else random.Random(0))


__all__ = [
    "QQ",
    "FactoredPolynomial",
    "FieldElement",
    "NotIntegralError",
    "NumberField",
    "PrimeField",
    "PrimeIdealSpec",
    "RationalField",
    "certify_irreducible",
    "degree_one_primes",
    "factor_univariate_ff",
    "gfpoly",
    "reduce_element",
    "reduce_map_mod_prime",
]
