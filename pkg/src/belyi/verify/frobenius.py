"""Frobenius cycle types from specializations p(X) - t0*q(X) over F_p."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..algebra import gfpoly
from ..algebra.fields import PrimeField
from ..perm import CycleType


@dataclass
class FrobeniusSample:
    """Factor-degree multisets of admissible specializations.

    Behaves like the list of types; ``partial`` is set when the field ran
    out of admissible parameters before ``requested`` were found.
    """

    types: list
    t_values: list
    skipped: list = field(default_factory=list)
    requested: int = 0
    partial: bool = False

    def __iter__(self):
        return iter(self.types)

    def __len__(self):
        return len(self.types)

    def __getitem__(self, i):
        return self.types[i]


def specialization(m, t0):
    """p - t0*q as an F_p coefficient list."""
    p = m.field.p
    return gfpoly.sub(list(m.num), gfpoly.scale(list(m.den), t0, p), p)


def admissibility(m, t0):
    """None if t0 is admissible, else the reason it is skipped."""
    if t0 in (0, 1):
        return "ramified value"
    f = specialization(m, t0)
    if gfpoly.degree(f) != m.degree:
        return "degree drop"
    if not gfpoly.is_squarefree(f, m.field.p):
        return "not squarefree"
    return None


def frobenius_sample(m, count: int, seed=0) -> FrobeniusSample:
    if not isinstance(m.field, PrimeField):
        raise TypeError("frobenius_sample needs a map over a prime field")
    if count < 1:
        raise ValueError("count must be >= 1")
    p = m.field.p
    rng = random.Random(seed)
    order = list(range(2, p))
    rng.shuffle(order)
    types, ts, skipped = [], [], []
    for t0 in order:
        if len(types) == count:
            break
        why = admissibility(m, t0)
        if why:
            skipped.append((t0, why))
            continue
        degs = gfpoly.factor_degrees(specialization(m, t0), p)
        types.append(CycleType(tuple(degs)))
        ts.append(t0)
    return FrobeniusSample(types, ts, skipped, count, len(types) < count)
