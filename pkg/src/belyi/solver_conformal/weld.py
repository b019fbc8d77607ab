"""Conformal welding of paired boundary arcs of H onto the complement of a tree.

The boundary of H is cut into sides (consecutive runs of N samples) and the
sides are paired. A pair of adjacent sides meeting at a fold is zipped sample
pair by sample pair with the slit map

    G(z) = (z - A)^alpha (z - B)^(1 - alpha),   alpha = (F - A) / (B - A),

which sends A and B to 0 and raises the fold F to the tip of a slit. Leaves
are zipped shortest first (ties to the leftmost). The last pair is zipped up
to its final samples, after which a real Moebius map and z -> z^2 close the
sphere. Paired samples land on the same point, so the zipped arcs form a
tree T with d + 2 vertices and d + 1 edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class WeldingError(RuntimeError):
    pass


@dataclass
class Tree:
    vertices: list
    edges: list

    def is_tree(self):
        n = len(self.vertices)
        if len(self.edges) != n - 1:
            return False
        parent = list(range(n))

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True


@dataclass
class WeldingResult:
    samples: np.ndarray  # final images of the boundary samples (inf allowed)
    extra: np.ndarray  # final images of the tracked interior points
    tree: Tree
    vertex_of_sample: dict  # vertex sample index -> tree vertex
    residuals: np.ndarray  # chordal distance of each sample pair
    order: list = field(default_factory=list)  # zipping order of side pairs
    preimages0: list = field(default_factory=list)
    preimages1: list = field(default_factory=list)
    preimagesInf: list = field(default_factory=list)

    @property
    def max_residual(self):
        return float(self.residuals.max()) if len(self.residuals) else 0.0

    def worst_pair(self):
        return int(np.argmax(self.residuals))


def chordal(z, w):
    """Chordal distance on the Riemann sphere (infinite values allowed)."""
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    zi, wi = ~np.isfinite(z), ~np.isfinite(w)
    zz = np.where(zi, 0, z)
    ww = np.where(wi, 0, w)
    both = np.abs(zz - ww) / np.sqrt((1 + np.abs(zz) ** 2) * (1 + np.abs(ww) ** 2))
    one_z = 1 / np.sqrt(1 + np.abs(ww) ** 2)
    one_w = 1 / np.sqrt(1 + np.abs(zz) ** 2)
    return np.where(zi & wi, 0.0, np.where(zi, one_z, np.where(wi, one_w, both)))


def _clamp(Z):
    return Z.real + 1j * np.where(Z.imag > 0, Z.imag, 0.0)


def _slit(Z, A, B, alpha):
    Z = _clamp(Z)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.exp(alpha * np.log(Z - A) + (1 - alpha) * np.log(Z - B))
    out[(Z == A) | (Z == B)] = 0
    return out


def _real_moebius(Z, sigma):
    """z -> -1/(z - sigma), which preserves H and sends sigma to infinity."""
    with np.errstate(divide="ignore", invalid="ignore"):
        out = -1 / (Z - sigma)
    out[~np.isfinite(Z)] = 0
    return out


class _State:
    def __init__(self, x, N, partner, extra):
        self.N = N
        self.M = len(x)
        self.n_sides = self.M // N
        self.partner = list(partner)
        self.Z = np.concatenate([np.asarray(x, dtype=complex), np.asarray(extra, dtype=complex)])
        self.remaining = list(range(self.n_sides))

    def start(self, s):
        return s * self.N

    def end(self, s):
        return (s * self.N + self.N) % self.M

    def idx(self, s, t):
        return (s * self.N + t) % self.M

    def boundary_sequence(self):
        seq = []
        for s in self.remaining:
            seq.extend(self.idx(s, t) for t in range(self.N))
        return seq

    def wrap_position(self):
        """Index k in the boundary sequence with a decrease seq[k] -> seq[k+1] (where infinity sits)."""
        seq = self.boundary_sequence()
        x = self.Z[seq].real
        drops = [k for k in range(len(seq)) if x[(k + 1) % len(seq)] < x[k]]
        return seq, drops

    def move_infinity(self, seq, gap):
        """Put infinity in the gap seq[gap] -> seq[gap+1]."""
        u = self.Z[seq[gap]].real
        v = self.Z[seq[(gap + 1) % len(seq)]].real
        if v > u:
            sigma = (u + v) / 2
        else:
            return  # infinity already lies in this gap
        self.Z = _real_moebius(self.Z, sigma)

    def leaf_span(self, p, q):
        xs = [self.Z[self.idx(p, t)].real for t in range(self.N + 1)]
        xs += [self.Z[self.idx(q, t)].real for t in range(1, self.N + 1)]
        if all(b > a for a, b in zip(xs, xs[1:])):
            return xs[-1] - xs[0], xs[0]
        return np.inf, xs[0]

    def zip_pair(self, p, q, steps):
        F = self.Z[self.end(p)].real
        for k in range(1, steps + 1):
            ia = self.idx(p, self.N - k)
            ib = self.idx(q, k)
            A, B = self.Z[ia].real, self.Z[ib].real
            if not (A < F < B):
                raise WeldingError(f"welding order broken at sides {p}/{q}, step {k}: {A} < {F} < {B} fails")
            alpha = (F - A) / (B - A)
            self.Z = _slit(self.Z, A, B, alpha)
            self.Z[ia] = 0
            self.Z[ib] = 0
            F = 0.0


def weld_h2(x, N, partner, extra=(), vertex_class=None):
    """Weld the sides of H described by boundary positions ``x``.

    ``x`` holds N samples per side in counterclockwise order (side s owns
    samples s*N .. s*N + N - 1, its end is the start of side s + 1) and
    ``partner[s]`` is the side glued to s, reversed.
    """
    x = np.asarray(x, dtype=float)
    n_sides = len(partner)
    if len(x) != n_sides * N or N < 2:
        raise WeldingError("sample count does not match the side structure")
    if any(partner[partner[s]] != s or partner[s] == s for s in range(n_sides)):
        raise WeldingError("pairing is not a fixed-point-free involution")
    _check_planar(partner)
    st = _State(x, N, partner, extra)
    order = []
    while len(st.remaining) > 2:
        rem = st.remaining
        leaves = []
        for k, p in enumerate(rem):
            q = rem[(k + 1) % len(rem)]
            if partner[p] == q:
                span, left = st.leaf_span(p, q)
                leaves.append((span, left, k, p, q))
        if not leaves:
            raise WeldingError("gluing not genus 0 (no foldable pair)")
        leaves.sort()
        span, _, k, p, q = leaves[0]
        if not np.isfinite(span):
            # infinity inside the leaf: move it to a gap after the leaf
            seq = st.boundary_sequence()
            after = seq.index(st.idx(q, st.N) if st.idx(q, st.N) in seq else st.start(rem[(k + 2) % len(rem)]))
            st.move_infinity(seq, after)
            span, _ = st.leaf_span(p, q)
            if not np.isfinite(span):
                raise WeldingError("could not move infinity out of the leaf")
        st.zip_pair(p, q, st.N)
        order.append((p, q))
        st.remaining = [s for s in rem if s not in (p, q)]
    p, q = st.remaining
    # zip from the fold at the end of p, leaving the final sample pair
    seq = st.boundary_sequence()
    first = seq.index(st.start(p))
    st.move_infinity(seq, first)
    st.zip_pair(p, q, st.N - 1)
    order.append((p, q))
    P = st.Z[st.start(p)].real
    with np.errstate(divide="ignore", invalid="ignore"):
        m = st.Z / (P - st.Z) if P > 0 else st.Z / (st.Z - P)
        W = m * m
    at_P = np.abs(st.Z - P) <= 1e-300
    at_P[st.start(p)] = True
    at_P[st.end(q)] = True
    W[at_P] = np.inf
    samples = W[: st.M]
    extra_img = W[st.M:]
    res = []
    for s in range(n_sides):
        for t in range(N):
            res.append(chordal(samples[st.idx(s, t)], samples[st.idx(partner[s], N - t)]))
    tree = _tree(samples, N, partner)
    return WeldingResult(samples, extra_img, tree[0], tree[1], np.array(res, dtype=float), order)


def _tree(samples, N, partner, tol=1e-6):
    n_sides = len(partner)
    verts, which = [], {}
    for s in range(n_sides):
        z = samples[s * N]
        for k, v in enumerate(verts):
            if chordal(z, v) < tol:
                which[s * N] = k
                break
        else:
            verts.append(z)
            which[s * N] = len(verts) - 1
    M = n_sides * N
    edges = set()
    for s in range(n_sides):
        u, v = which[s * N], which[(s * N + N) % M]
        edges.add((min(u, v), max(u, v)))
    return Tree(verts, sorted(edges)), which


def _check_planar(partner):
    """Non-crossing pairing of sides on a circle (a planar gluing)."""
    n = len(partner)
    for s in range(n):
        t = partner[s]
        if t < s:
            continue
        for u in range(s + 1, t):
            if not (s < partner[u] < t):
                raise WeldingError("gluing not genus 0 (crossing pairs)")
