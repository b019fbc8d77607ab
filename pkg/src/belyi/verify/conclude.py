"""Fixed inference rules turning collected evidence into a group identification."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

# primitive groups of degree 266, hard-coded (the artifact does not enumerate primitive groups)
PRIMITIVE_GROUPS = {266: ("J1", "A266", "S266")}
TWO_TRANSITIVE = {"A266", "S266"}
CLASSIFICATION_CITATION = "table of primitive groups of degree 266: J1 (rank 5), A266, S266"
# element orders of J1, used to reject inconsistent Frobenius samples
J1_ELEMENT_ORDERS = frozenset({1, 2, 3, 5, 6, 7, 10, 11, 15, 19})


@dataclass
class MonodromyEvidence:
    degree: int
    primitive: Optional[bool] = None
    primitive_provenance: str = ""
    two_transitive_obstruction: Optional[int] = None
    sampled_frobenius_types: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be >= 1")


@dataclass
class Decision:
    verdict: str  # a group name or "inconclusive"
    chain: list
    missing: list

    @property
    def conclusive(self):
        return self.verdict != "inconclusive"

    def lines(self):
        out = [f"VERDICT {self.verdict}"]
        out += [f"  because {c}" for c in self.chain]
        out += [f"  missing {m}" for m in self.missing]
        return out

    def __str__(self):
        return "\n".join(self.lines())


def conclude_monodromy(ev: MonodromyEvidence) -> Decision:
    chain, missing = [], []
    d = ev.degree
    if d not in PRIMITIVE_GROUPS:
        orders = sorted({t.lcm() for t in ev.sampled_frobenius_types})
        hint = f"; sampled element orders {orders}" if orders else ""
        return Decision("inconclusive", [f"degree {d} is outside the rule set (only degree 266 is encoded){hint}"], [])
    if ev.primitive is True:
        chain.append(f"monodromy is primitive ({ev.primitive_provenance or 'no provenance given'})")
    elif ev.primitive is False:
        return Decision("inconclusive", ["monodromy is imprimitive; the rule set only covers primitive groups"], [])
    else:
        missing.append("primitivity (run the indecomposability test)")
    k = ev.two_transitive_obstruction
    if k is not None and 1 <= k < d - 1:
        chain.append(f"(p(t)q(X) - q(t)p(X))/(X - t) has a factor of X-degree {k}, so the point stabilizer is not transitive on the remaining points: not 2-transitive")
    else:
        missing.append("2-transitivity obstruction (a proper factor of (p(t)q(X) - q(t)p(X))/(X - t))")
    bad = sorted({t.lcm() for t in ev.sampled_frobenius_types} - J1_ELEMENT_ORDERS)
    if missing:
        return Decision("inconclusive", chain, missing)
    chain.append(CLASSIFICATION_CITATION)
    chain.append("A266 and S266 are 2-transitive, leaving J1")
    if bad:
        return Decision("inconclusive", chain + [f"sampled Frobenius orders {bad} do not occur in J1: evidence is inconsistent"], [])
    if ev.sampled_frobenius_types:
        chain.append(f"{len(ev.sampled_frobenius_types)} sampled Frobenius types have orders occurring in J1")
    chain.append("remark: the geometric monodromy group is normal in the arithmetic one and J1 is simple, so both equal J1")
    return Decision("J1", chain, [])
