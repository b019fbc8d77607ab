"""Approximate preimages of 0, 1 and infinity from the welded picture."""

from __future__ import annotations

import numpy as np

from ..perm import CycleType
from .domain import CosetTable
from .weld import WeldingError, chordal

FIBER_OF = {"x": "0", "y": "1", "z": "oo"}
BIG = 1e12


class PreimageError(WeldingError):
    pass


def _merge(points, tol):
    """One representative for glued copies of a vertex; None for infinity."""
    pts = np.asarray(points, dtype=complex)
    far = ~np.isfinite(pts) | (np.abs(np.nan_to_num(pts, nan=np.inf)) > BIG)
    spread = max((float(chordal(u, v)) for u in pts for v in pts), default=0.0)
    if spread > tol:
        raise PreimageError(f"glued copies of a vertex disagree (chordal spread {spread:.3g})")
    if far.any():
        return None
    return complex(pts.mean())


def approximate_preimages(corner_images: dict, corner_class: dict, ct: CosetTable, tol: float = 1e-3, collide: float = 1e-10):
    """Labeled preimage lists {"0": [(point, mult)], "1": ..., "oo": ...}.

    ``corner_images`` sends (kite, corner) to its welded image and
    ``corner_class`` sends (kite, corner) to (generator, cycle index). The
    multiplicity of a class is the length of its cycle.
    """
    cycles = {g: ct.cycles(g) for g in "xyz"}
    groups = {}
    for key, cls in corner_class.items():
        groups.setdefault(cls, []).append(corner_images[key])
    out = {"0": [], "1": [], "oo": []}
    for (g, n), pts in sorted(groups.items()):
        out[FIBER_OF[g]].append((_merge(pts, tol), len(cycles[g][n])))
    for g in "xyz":
        want = CycleType(tuple(len(c) for c in cycles[g]))
        got = CycleType(tuple(m for _, m in out[FIBER_OF[g]]))
        if want != got:
            raise PreimageError(f"multiplicity mismatch over {FIBER_OF[g]}: {got} vs {want}")
    # conformal crowding can put classes close together, but never on top of each other
    flat = [(f, z) for f, lst in out.items() for z, _ in lst]
    for i, (f, z) in enumerate(flat):
        for f2, z2 in flat[i + 1 :]:
            zz = np.inf if z is None else z
            ww = np.inf if z2 is None else z2
            if float(chordal(zz, ww)) < collide:
                raise PreimageError(f"preimages over {f} and {f2} coalesce at {z}")
    return out
