"""Degree-one prime ideals of Q(alpha) and reduction of maps modulo them."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import gfpoly
from .fields import NumberField, PrimeField, RationalField


class NotIntegralError(ArithmeticError):
    pass


@dataclass(frozen=True)
class PrimeIdealSpec:
    """The prime (p, alpha - root) of norm p."""

    p: int
    root: int

    def validate(self, K):
        PrimeField(self.p)
        if not 0 <= self.root < self.p:
            raise ValueError(f"root {self.root} not in [0, {self.p})")
        mp = _min_poly(K)
        if gfpoly.evaluate(list(mp), self.root, self.p) != 0:
            raise ValueError(f"min_poly({self.root}) != 0 mod {self.p}: ({self.p}, alpha - {self.root}) is not a prime ideal")
        return self

    def __str__(self):
        return f"({self.p}, alpha - {self.root})"


def _min_poly(K):
    if isinstance(K, RationalField):
        return (0, 1)
    return K.min_poly


def degree_one_primes(K, p: int) -> list[PrimeIdealSpec]:
    """All primes of K above p with residue degree one, i.e. roots of min_poly mod p."""
    PrimeField(p)
    mp = gfpoly.normalize(list(_min_poly(K)), p)
    if gfpoly.degree(mp) != len(_min_poly(K)) - 1:
        raise ValueError(f"{p} divides the leading coefficient of the minimal polynomial")
    return [PrimeIdealSpec(p, r) for r in gfpoly.roots(mp, p, random.Random(0))]


def reduce_element(x, spec: PrimeIdealSpec, label="coefficient"):
    """Image of a rational or number-field element in F_p under alpha -> root."""
    p = spec.p
    coords = (x,) if not hasattr(x, "coords") else x.coords
    acc = 0
    power = 1
    for c in coords:
        c = Fraction(c)
        if c.denominator % p == 0:
            raise NotIntegralError(f"{label} {x} is not {p}-integral")
        acc = (acc + c.numerator * pow(c.denominator, -1, p) * power) % p
        power = power * spec.root % p
    return acc


def reduce_map_mod_prime(m, spec: PrimeIdealSpec):
    """Reduce every coefficient of a map over Q or K modulo ``spec``.

    Degrees are preserved: a leading coefficient vanishing mod p is an error,
    because the reduction would then no longer describe a map of the same degree.
    """
    from ..candidate import BelyiCandidate

    K = m.field
    if isinstance(K, NumberField):
        spec.validate(K)
    elif not isinstance(K, RationalField):
        raise TypeError("map must be defined over Q or a number field")
    Fp = PrimeField(spec.p)
    num = [reduce_element(c, spec, f"num[{i}]") for i, c in enumerate(m.num)]
    den = [reduce_element(c, spec, f"den[{i}]") for i, c in enumerate(m.den)]
    if num[-1] == 0 or den[-1] == 0:
        raise NotIntegralError(f"leading coefficient vanishes modulo {spec}; degree would drop")
    return BelyiCandidate(Fp, tuple(num), tuple(den))
