"""Triple -> Belyi map: kites, zipper, welding, Newton, lattice recognition."""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath
import numpy as np

from .perm import PermutationTriple
from .solver_conformal.domain import FundamentalDomain, coset_table, fundamental_domain, geodesic_points
from .solver_conformal.preimages import approximate_preimages
from .solver_conformal.triangle import TriangleGroupEmbedding, choose_orders, embed_triangle_group
from .solver_conformal.weld import WeldingResult, weld_h2
from .solver_conformal.zipper import ZipperMap, zipper_h1
from .solver_newton.ansatz import build_system
from .solver_newton.newton import NewtonResult, PrecisionContext, newton_refine
from .solver_newton.reconstruct import recognize_coefficients, reconstruct_over_field
from .verify.ramification import RamificationProfile


@dataclass
class SolveResult:
    triple: PermutationTriple
    emb: TriangleGroupEmbedding
    lift: int  # orders were multiplied by this to make the signature hyperbolic
    domain: FundamentalDomain
    h1: ZipperMap
    welding: WeldingResult
    preimages: dict
    newton: NewtonResult | None = None
    coefficients: tuple = ()
    guesses: list = field(default_factory=list)
    map: object = None

    def geometry_text(self):
        return self.domain.to_text(self.welding.tree)


def profile_of(t: PermutationTriple) -> RamificationProfile:
    return RamificationProfile(*t.cycle_types())


def conformal_stage(t: PermutationTriple, samples_per_edge: int = 24):
    """Approximate preimages from the kite domain (double precision)."""
    (a, b, c), k = choose_orders(t)
    emb = embed_triangle_group(a, b, c)
    ct = coset_table(t)
    dom = fundamental_domain(ct, emb)
    N = samples_per_edge
    pts = np.concatenate([geodesic_points(s.start, s.end, N) for s in dom.sides])
    centre = complex(np.mean(dom.corners(1)))
    h1 = zipper_h1(pts, centre)
    # corners on the boundary are side starts; the rest go through h1
    starts = {}
    for n, s in enumerate(dom.sides):
        starts.setdefault((s.kite, s.side), n)
    boundary_key, interior_key, interior_pts = {}, [], []
    for j in sorted(dom.reps):
        cs = dom.corners(j)
        for c in range(4):
            hit = next((n for n, s in enumerate(dom.sides) if abs(s.start - cs[c]) < 1e-9 * max(1, abs(cs[c]))), None)
            if hit is not None:
                boundary_key[(j, c)] = hit * N
            else:
                interior_key.append((j, c))
                interior_pts.append(cs[c])
    extra = h1.forward(np.array(interior_pts, dtype=complex)) if interior_pts else np.zeros(0, complex)
    w = weld_h2(h1.boundary, N, dom.pairing(), extra)
    images = {key: w.samples[i] for key, i in boundary_key.items()}
    images.update({key: w.extra[n] for n, key in enumerate(interior_key)})
    pre = approximate_preimages(images, dom.corner_class, ct)
    w.preimages0, w.preimages1, w.preimagesInf = pre["0"], pre["1"], pre["oo"]
    return emb, k, dom, h1, w, pre


def solve_triple(
    t: PermutationTriple,
    samples_per_edge: int = 24,
    digits: int = 30,
    target_digits: int = 120,
    max_alg_degree: int = 8,
    recognize: bool = True,
) -> SolveResult:
    emb, k, dom, h1, w, pre = conformal_stage(t, samples_per_edge)
    res = SolveResult(t, emb, k, dom, h1, w, pre)
    profile = profile_of(t)
    ctx = PrecisionContext(digits, target_digits)
    with mpmath.workdps(digits):
        sys, u0 = build_system(profile, {key: [(None if z is None else mpmath.mpc(z), m) for z, m in v] for key, v in pre.items()})
    res.newton = newton_refine(sys, u0, ctx)
    with mpmath.workdps(target_digits + 10):
        num, den = sys.to_map(res.newton.values)
    res.coefficients = (tuple(num), tuple(den))
    if recognize:
        with mpmath.workdps(target_digits + 10):
            ng = recognize_coefficients(num, max_alg_degree, target_digits)
            dg = recognize_coefficients(den, max_alg_degree, target_digits)
            res.guesses = ng + dg
            res.map = reconstruct_over_field(ng, dg, digits=target_digits, expected=profile)
    return res
