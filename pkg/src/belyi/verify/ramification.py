"""Ramification profile of p/q over 0, 1 and infinity, and the Belyi check."""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..algebra import gfpoly, poly
from ..algebra.fields import PrimeField
from ..perm import CycleType
from .report import Report


class NotReducedError(ValueError):
    pass


class WildRamificationError(ValueError):
    pass


@dataclass(frozen=True)
class RamificationProfile:
    over0: CycleType
    over1: CycleType
    overInf: CycleType

    def __post_init__(self):
        if not (self.over0.degree == self.over1.degree == self.overInf.degree):
            raise ValueError("fibers have different degrees")

    @classmethod
    def parse(cls, text):
        """'7^38 / 2^128.1^10 / 3^87.1^5' (also accepts commas or '|')."""
        for sep in ("|", "/", ","):
            if sep in text:
                parts = text.split(sep)
                break
        else:
            parts = text.split()
        if len(parts) != 3:
            raise ValueError(f"expected three cycle types, got {text!r}")
        return cls(*(CycleType.parse(p) for p in parts))

    @property
    def degree(self):
        return self.over0.degree

    def types(self):
        return (self.over0, self.over1, self.overInf)

    def cycle_count_sum(self):
        return sum(t.count for t in self.types())

    def genus(self):
        d = self.degree
        return (sum(d - t.count for t in self.types()) - 2 * d + 2) // 2

    def __str__(self):
        return f"{self.over0} | {self.over1} | {self.overInf}"


def _multiplicities(F, f):
    """Root multiplicities of f over the algebraic closure of F."""
    if isinstance(F, PrimeField):
        fac = gfpoly.factor(list(f), F.p, random.Random(0))
        out = []
        for g, e in fac.factors:
            if e % F.p == 0:
                raise WildRamificationError(f"wild ramification unsupported (multiplicity {e} in characteristic {F.p})")
            out.extend([e] * (len(g) - 1))
        return out
    return poly.root_multiplicities(F, list(f))


def ramification_profile(m) -> RamificationProfile:
    F = m.field
    num, den = list(m.num), list(m.den)
    if not m.is_reduced():
        raise NotReducedError("gcd(p, q) != 1")
    dp, dq = len(num) - 1, len(den) - 1
    d = max(dp, dq)
    r = poly.sub(F, num, den)
    over0 = _multiplicities(F, num)
    overinf = _multiplicities(F, den)
    over1 = _multiplicities(F, r)
    # the point X = infinity
    if dp > dq:
        overinf.append(dp - dq)
    elif dq > dp:
        over0.append(dq - dp)
    else:
        lead = F.mul(num[-1], F.inv(den[-1]))
        if lead == F.one and d - (len(r) - 1) > 0:
            over1.append(d - (len(r) - 1))
    for e in (over0[-1:] + over1[-1:] + overinf[-1:]):
        if isinstance(F, PrimeField) and e % F.p == 0:
            raise WildRamificationError(f"wild ramification unsupported (multiplicity {e} at infinity)")
    return RamificationProfile(CycleType(tuple(over0)), CycleType(tuple(over1)), CycleType(tuple(overinf)))


def check_belyi(m, expected: RamificationProfile) -> Report:
    rep = Report()
    d = m.degree
    rep.check("reduced", m.is_reduced(), "gcd(p, q) = 1" if m.is_reduced() else "p and q share a factor")
    if not m.is_reduced():
        return rep
    prof = ramification_profile(m)
    rep.check("degree", prof.degree == expected.degree == d, f"computed {prof.degree}, expected {expected.degree}")
    for name, got, want in zip(("over0", "over1", "overInf"), prof.types(), expected.types()):
        rep.check(name, got == want, f"computed {got}, expected {want}")
    total = prof.cycle_count_sum()
    rep.check(
        "riemann_hurwitz",
        total == d + 2,
        f"cycle counts {prof.over0.count}+{prof.over1.count}+{prof.overInf.count} = {total}, d+2 = {d + 2}, genus {prof.genus()}",
    )
    return rep
