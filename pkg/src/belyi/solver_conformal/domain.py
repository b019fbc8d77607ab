"""Coset table and a fundamental domain made of d kites with its edge pairing.

Conventions: cosets are numbered 1..d with coset 1 the stabilizer of the
point 1, and the triangle group acts on the right, so coset j times gen_a is
coset x(j). Kite j is g_j(K) with g_j a representative of coset j; the base
kite K has corners (i, P1, mu*i, P2) and sides

    0: i -> P1     shared with gen_a^-1 K
    1: P1 -> mu*i  shared with gen_b K
    2: mu*i -> P2  shared with gen_b^-1 K
    3: P2 -> i     shared with gen_a K
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from ..perm import NotTransitiveError, PermutationTriple, is_transitive
from .triangle import TriangleGroupEmbedding, moebius, pm_distance


class DomainError(RuntimeError):
    pass


# ------------------------------------------------------------------ cosets


@dataclass(frozen=True)
class CosetTable:
    index: int
    act_a: tuple  # images of cosets 1..d under gen_a
    act_b: tuple

    def x(self, j):
        return self.act_a[j - 1]

    def y(self, j):
        return self.act_b[j - 1]

    def x_inv(self, j):
        return self.act_a.index(j) + 1

    def y_inv(self, j):
        return self.act_b.index(j) + 1

    def cycles(self, which):
        """Cycles of gen_a ('x'), gen_b ('y') or gen_a*gen_b ('z')."""
        if which == "x":
            f = self.x
        elif which == "y":
            f = self.y
        else:
            f = lambda j: self.y(self.x(j))  # noqa: E731
        seen, out = set(), []
        for j in range(1, self.index + 1):
            if j in seen:
                continue
            cyc = [j]
            seen.add(j)
            k = f(j)
            while k != j:
                cyc.append(k)
                seen.add(k)
                k = f(k)
            out.append(tuple(cyc))
        return out


def coset_table(t: PermutationTriple) -> CosetTable:
    if not is_transitive(t):
        raise NotTransitiveError("triple is not transitive; the coset action needs a transitive group")
    return CosetTable(t.degree, tuple(t.x.images), tuple(t.y.images))


# ------------------------------------------------------------------ kites

SIDE_NAMES = ("a-", "b+", "b-", "a+")
# side -> (neighbour side, generator taking kite j to its neighbour across the side)
_ACROSS = {0: (3, "A^-1"), 1: (2, "B"), 2: (1, "B^-1"), 3: (0, "A")}


def _neighbour(ct, j, side):
    if side == 0:
        return ct.x_inv(j)
    if side == 1:
        return ct.y(j)
    if side == 2:
        return ct.y_inv(j)
    return ct.x(j)


@dataclass
class BoundarySide:
    kite: int
    side: int
    start: complex
    end: complex
    partner: int = -1  # index into FundamentalDomain.sides
    element: np.ndarray | None = None  # maps the partner side onto this one


@dataclass
class FundamentalDomain:
    emb: TriangleGroupEmbedding
    table: CosetTable
    reps: dict  # coset -> 2x2 matrix
    parent: dict  # coset -> (parent coset, generator name) or None
    sides: list  # boundary sides in counterclockwise order
    corner_class: dict = field(default_factory=dict)  # (kite, corner) -> ("x"|"y"|"z", cycle index)
    strategy: str = ""

    @property
    def degree(self):
        return self.table.index

    def corners(self, j):
        return tuple(complex(v) for v in moebius(self.reps[j], np.array(self.emb.kite)))

    def kite_area(self):
        return self.emb.kite_area()

    def area(self):
        """Hyperbolic area of the boundary polygon by Gauss-Bonnet."""
        n = len(self.sides)
        angles = 0.0
        for k, s in enumerate(self.sides):
            prev = self.sides[k - 1]
            angles += interior_angle(prev.start, s.start, s.end)
        return (n - 2) * math.pi - angles

    def euler_characteristic(self, tol=1e-8):
        order = sorted(self.reps)
        pts = []
        for j in order:
            pts.extend(self.corners(j))
        labels = _cluster(pts, tol)
        V = len(set(labels))
        edges = set()
        for n, _ in enumerate(order):
            idx = [labels[4 * n + c] for c in range(4)]
            for c in range(4):
                edges.add(frozenset((idx[c], idx[(c + 1) % 4])))
        return V - len(edges) + len(self.reps)

    def pairing(self):
        return [s.partner for s in self.sides]

    def to_text(self, tree=None):
        lines = [f"# fundamental domain: degree {self.degree}, orders {self.emb.a} {self.emb.b} {self.emb.c}"]
        for j in sorted(self.reps):
            c = self.corners(j)
            lines.append(f"kite {j} " + " ".join(f"{z.real:.12g} {z.imag:.12g}" for z in c))
        for k, s in enumerate(self.sides):
            lines.append(
                f"edge {k} kite {s.kite} side {SIDE_NAMES[s.side]} "
                f"{s.start.real:.12g} {s.start.imag:.12g} {s.end.real:.12g} {s.end.imag:.12g} pair {s.partner}"
            )
        if tree is not None:
            for v, z in enumerate(tree.vertices):
                lines.append(f"tree_vertex {v} {_fmt(z)}")
            for u, v in tree.edges:
                lines.append(f"tree_edge {u} {v}")
        return "\n".join(lines) + "\n"


def _fmt(z):
    if not np.isfinite(z):
        return "inf inf"
    return f"{z.real:.12g} {z.imag:.12g}"


def _cluster(pts, tol):
    labels, reps = [], []
    for z in pts:
        for k, r in enumerate(reps):
            if abs(z - r) <= tol * max(1.0, abs(r)):
                labels.append(k)
                break
        else:
            reps.append(z)
            labels.append(len(reps) - 1)
    return labels


def _disk(v, z):
    """Image of z in the disk model centred at v."""
    return (z - v) / (z - v.conjugate())


def interior_angle(u, v, w):
    """Angle at v, measured counterclockwise from the geodesic v->w to v->u."""
    t = np.angle(_disk(v, u) / _disk(v, w))
    return t if t > 0 else t + 2 * math.pi


def hyperbolic_distance(z, w):
    return 2 * math.atanh(min(abs(_disk(z, w)), 1 - 1e-16))


def geodesic_points(z, w, n):
    """n points from z toward w (z included, w excluded), equally spaced in hyperbolic length."""
    d = hyperbolic_distance(z, w)
    u = _disk(z, w)
    direction = u / abs(u)
    out = []
    for k in range(n):
        r = math.tanh(d * k / n / 2) * direction
        out.append((z - z.conjugate() * r) / (1 - r))
    return np.array(out, dtype=complex)


def _spanning_tree(ct, emb, order):
    gens = {"A": emb.gen_a, "A^-1": np.linalg.inv(emb.gen_a), "B": emb.gen_b, "B^-1": np.linalg.inv(emb.gen_b)}
    step = {"A": ct.x, "A^-1": ct.x_inv, "B": ct.y, "B^-1": ct.y_inv}
    reps, parent = {1: np.eye(2)}, {1: None}
    queue = deque([1])
    while queue:
        j = queue.popleft()
        for g in order:
            k = step[g](j)
            if k not in reps:
                reps[k] = reps[j] @ gens[g]
                parent[k] = (j, g)
                queue.append(k)
    return reps, parent, gens


def _build(ct, emb, order, tol):
    reps, parent, gens = _spanning_tree(ct, emb, order)
    d = ct.index

    def interior(j, s):
        k = _neighbour(ct, j, s)
        return pm_distance(reps[j] @ gens[_ACROSS[s][1]], reps[k]) < 1e-8 * max(1.0, np.abs(reps[k]).max())

    def across(j, s):
        return _neighbour(ct, j, s), _ACROSS[s][0]

    start = next(((j, s) for j in range(1, d + 1) for s in range(4) if not interior(j, s)), None)
    if start is None:
        raise DomainError("no boundary sides found")
    walk = []
    cur = start
    while True:
        walk.append(cur)
        j, s = cur
        cand = (j, (s + 1) % 4)
        guard = 0
        while interior(*cand):
            k, s2 = across(*cand)
            cand = (k, (s2 + 1) % 4)
            guard += 1
            if guard > 8 * d:
                raise DomainError("boundary walk did not close")
        cur = cand
        if cur == start:
            break
        if len(walk) > 4 * d:
            raise DomainError("boundary walk did not close")
    corners = {j: moebius(reps[j], np.array(emb.kite)) for j in reps}
    sides = []
    index = {}
    for n, (j, s) in enumerate(walk):
        c = corners[j]
        sides.append(BoundarySide(j, s, complex(c[s]), complex(c[(s + 1) % 4])))
        index[(j, s)] = n
    for n, (j, s) in enumerate(walk):
        k, s2 = across(j, s)
        sides[n].partner = index[(k, s2)]
        sides[n].element = reps[j] @ gens[_ACROSS[s][1]] @ np.linalg.inv(reps[k])
    return reps, parent, sides


def _has_pinch(sides, tol):
    pts = [s.start for s in sides]
    for u, v in itertools.combinations(range(len(pts)), 2):
        if abs(pts[u] - pts[v]) <= tol * max(1.0, abs(pts[u])):
            return True
    return False


def _corner_classes(ct):
    out = {}
    for name in ("x", "y", "z"):
        for n, cyc in enumerate(ct.cycles(name)):
            for j in cyc:
                out[(name, j)] = n
    classes = {}
    for j in range(1, ct.index + 1):
        classes[(j, 0)] = ("x", out[("x", j)])
        classes[(j, 2)] = ("y", out[("y", j)])
        classes[(j, 3)] = ("z", out[("z", j)])
        # P1 = gen_b(P2), so this corner is the P2 corner of coset y(j)
        classes[(j, 1)] = ("z", out[("z", ct.y(j))])
    return classes


ORDERS = [
    ("A", "A^-1", "B", "B^-1"),
    ("A", "B", "A^-1", "B^-1"),
    ("B", "B^-1", "A", "A^-1"),
    ("A", "B"),
    ("B", "A"),
    ("A^-1", "B^-1", "A", "B"),
]


def fundamental_domain(ct: CosetTable, emb: TriangleGroupEmbedding, tol: float = 1e-9) -> FundamentalDomain:
    """Union of d kites along a breadth-first spanning tree of the coset graph.

    gen_a moves are tried before gen_b moves. If the boundary touches itself
    the next generator order is tried, so the boundary is a Jordan curve.
    """
    pts = np.array(emb.kite)
    seps = [abs(u - v) for u, v in itertools.combinations(pts, 2)]
    if min(seps) < tol:
        raise DomainError("kite vertices coincide within tolerance; increase precision")
    last = None
    for order in ORDERS:
        reps, parent, sides = _build(ct, emb, order, tol)
        if not _has_pinch(sides, 1e-7):
            dom = FundamentalDomain(emb, ct, reps, parent, sides, _corner_classes(ct), " ".join(order))
            return dom
        last = order
    raise DomainError(f"every spanning-tree order produced a pinched boundary (last tried {last})")
