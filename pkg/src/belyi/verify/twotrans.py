"""Low-degree factors of S(X, t) = (p(t)q(X) - q(t)p(X)) / (X - t) over F_p(t).

A factor of X-degree k specializes at every admissible t0 to a product of
irreducible factors of S(X, t0) of total degree k. We pick t0 with few such
products, Hensel-lift each one to a factorization over F_p[[s]] with
s = t - t0, recover the coefficients as rational functions of s by Pade
approximation, and check the result at many further specializations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb

import numpy as np

from ..algebra import gfpoly
from ..algebra.fields import PrimeField


class InterpolationError(RuntimeError):
    pass


@dataclass
class BivariateFactor:
    """Phi(X, t) = sum_j coeffs[j](t) X^j, coeffs ascending in t."""

    p: int
    coeffs: list
    t0: int
    verified_at: list = field(default_factory=list)

    @property
    def x_degree(self):
        return len(self.coeffs) - 1

    @property
    def t_degree(self):
        return max(len(c) for c in self.coeffs) - 1

    def at(self, t):
        return gfpoly.normalize([gfpoly.evaluate(c, t, self.p) for c in self.coeffs], self.p)

    def to_text(self):
        lines = [f"prime: {self.p}", f"x_degree: {self.x_degree}", f"t_degree: {self.t_degree}"]
        for j, c in enumerate(self.coeffs):
            lines.append(f"X^{j}: " + " ".join(str(v) for v in c))
        return "\n".join(lines) + "\n"


def _dtype(p, n):
    return np.int64 if n * (p - 1) ** 2 < 2**62 else object


def bivariate_quotient(num, den, p):
    """Rows B[j] (coefficient of X^j, ascending in t) of S = N/(X - t)."""
    num, den = list(num), list(den)
    d = max(len(num), len(den)) - 1
    num += [0] * (d + 1 - len(num))
    den += [0] * (d + 1 - len(den))
    P = np.array(num, dtype=object)
    Q = np.array(den, dtype=object)
    width = d + 2
    c = [np.zeros(width, dtype=object) for _ in range(d + 1)]
    for j in range(d + 1):
        c[j][: d + 1] = (den[j] * P - num[j] * Q) % p
    B = [None] * d
    B[d - 1] = c[d].copy()
    for j in range(d - 1, 0, -1):
        B[j - 1] = (c[j] + np.roll(B[j], 1)) % p
    rest = (c[0] + np.roll(B[0], 1)) % p
    if rest.any():
        raise AssertionError("X - t does not divide p(t)q(X) - q(t)p(X)")
    return [[int(v) for v in row[:d]] for row in B]


def _taylor_matrix(deg, t0, K, p):
    T = [[0] * K for _ in range(deg + 1)]
    for i in range(deg + 1):
        for k in range(min(i, K - 1) + 1):
            T[i][k] = comb(i, k) * pow(t0, i - k, p) % p
    return T


def _series_in_s(B, t0, K, p):
    """S(X, t0 + s) mod s^K as a list of K X-polynomials."""
    n = len(B)
    deg = max(len(r) for r in B) - 1
    dt = _dtype(p, deg + 1)
    M = np.array([r + [0] * (deg + 1 - len(r)) for r in B], dtype=dt)
    T = np.array(_taylor_matrix(deg, t0, K, p), dtype=dt)
    S = (M @ T) % p  # shape (n, K)
    return [[int(S[j, k]) for j in range(n)] for k in range(K)]


def _series_inv(c, K, p):
    inv0 = pow(c[0], -1, p)
    out = [inv0] + [0] * (K - 1)
    for k in range(1, K):
        acc = sum(c[i] * out[k - i] for i in range(1, min(k, len(c) - 1) + 1))
        out[k] = (-acc * inv0) % p
    return out


def _make_monic(series, p):
    K = len(series)
    n = len(series[0]) - 1
    lc = [series[k][n] for k in range(K)]
    linv = _series_inv(lc, K, p)
    out = []
    for k in range(K):
        acc = [0] * (n + 1)
        for i in range(k + 1):
            if linv[i]:
                row = series[k - i]
                acc = [(a + linv[i] * b) % p for a, b in zip(acc, row)]
        out.append(acc)
    return out


def hensel_lift(series, G0, K, p):
    """Monic G over F_p[[s]] (K terms) with G(s=0) = G0 dividing the monic series."""
    S0 = gfpoly.normalize(series[0], p)
    H0 = gfpoly.exquo(S0, G0, p)
    U = gfpoly.invmod(gfpoly.rem(H0, G0, p), G0, p)
    G, H = [list(G0)], [H0]
    for k in range(1, K):
        E = gfpoly.normalize(list(series[k]), p)
        for i in range(1, k):
            E = gfpoly.sub(E, gfpoly.mul(G[i], H[k - i], p), p)
        Gk = gfpoly.rem(gfpoly.mul(E, U, p), G0, p)
        Hk, rem = gfpoly.divmod_(gfpoly.sub(E, gfpoly.mul(H0, Gk, p), p), G0, p)
        if rem:
            raise AssertionError("Hensel step not exact")
        G.append(Gk)
        H.append(Hk)
    return G


def pade(c, K, k, p):
    """(a, b) with b(0) = 1, deg a, deg b <= k and c*b = a mod s^K, or None."""
    r0, r1 = [0] * K + [1], gfpoly.normalize(list(c[:K]), p)
    v0, v1 = [], [1]
    while r1 and gfpoly.degree(r1) > k:
        q, r = gfpoly.divmod_(r0, r1, p)
        r0, r1 = r1, r
        v0, v1 = v1, gfpoly.sub(v0, gfpoly.mul(q, v1, p), p)
    if not r1:
        r1 = []
    a, b = r1, v1
    if gfpoly.degree(b) > k or not b or b[0] % p == 0:
        return None
    inv = pow(b[0], -1, p)
    a, b = gfpoly.scale(a, inv, p), gfpoly.scale(b, inv, p)
    chk = gfpoly.mul(gfpoly.normalize(list(c[:K]), p), b, p)[:K]
    if gfpoly.normalize(chk, p) != gfpoly.normalize(a, p):
        return None
    return a, b


def _taylor_shift(c, a, p):
    """c(s + a)."""
    out = []
    for ci in reversed(c):
        out = gfpoly.add(gfpoly.mul(out, [a % p, 1], p), [ci], p)
    return out


def _reconstruct(G, k, K, t0, p):
    coeffs = []
    for j in range(k):
        c = [G[i][j] if j < len(G[i]) else 0 for i in range(K)]
        ab = pade(c, K, k, p)
        if ab is None:
            return None
        coeffs.append(ab)
    D = [1]
    for _, b in coeffs:
        D = gfpoly.quo(gfpoly.mul(D, b, p), gfpoly.gcd(D, b, p), p)
    if gfpoly.degree(D) > k:
        return None
    rows = [gfpoly.mul(a, gfpoly.quo(D, b, p), p) for a, b in coeffs] + [D]
    return [_taylor_shift(r, -t0, p) for r in rows]


def _subsets_by_degree(degs, kmax):
    """Index subsets with 1 <= total degree <= kmax, sorted by degree."""
    out = []

    def rec(i, tot, chosen):
        if chosen:
            out.append((tot, tuple(chosen)))
        for j in range(i, len(degs)):
            if tot + degs[j] <= kmax:
                rec(j + 1, tot + degs[j], chosen + [j])

    rec(0, 0, [])
    out.sort()
    return out


def _count_subsets(degs, kmax, cap=10**6):
    ways = [0] * (kmax + 1)
    ways[0] = 1
    for g in degs:
        for t in range(kmax, g - 1, -1):
            ways[t] = min(cap, ways[t] + ways[t - g])
    return min(cap, sum(ways[1:]))


def _specialize(B, t, p):
    return gfpoly.normalize([gfpoly.evaluate(r, t, p) for r in B], p)


def _admissible(B, t, n, p):
    f = _specialize(B, t, p)
    return len(f) == n + 1 and gfpoly.is_squarefree(f, p)


def twotrans_obstruction(m, max_factor_degree: int, samples: int = 40, seed=0, tries: int = 24):
    """Factor of S(X, t) of X-degree <= max_factor_degree, or None.

    Raises :class:`InterpolationError` when a reconstructed factor divides
    some specializations of S but not others.
    """
    F = m.field
    if not isinstance(F, PrimeField):
        raise TypeError("twotrans_obstruction needs a map over a prime field")
    p = F.p
    d = m.degree
    if d < 3:
        raise ValueError("degree must be at least 3")
    n = d - 1
    kmax = min(max_factor_degree, n - 1)
    B = bivariate_quotient(m.num, m.den, p)
    rng = random.Random(seed)
    order = list(range(p))
    rng.shuffle(order)
    admissible = [t for t in order if _admissible(B, t, n, p)]
    if not admissible:
        raise InterpolationError(f"no admissible specialization over F_{p}")
    best = None
    for t0 in admissible[:tries]:
        cnt = _count_subsets(gfpoly.factor_degrees(_specialize(B, t0, p), p), kmax)
        if best is None or cnt < best[0]:
            best = (cnt, t0)
        if cnt == 0:
            return None
    t0 = best[1]
    fac = gfpoly.factor(_specialize(B, t0, p), p, random.Random(seed))
    factors = [list(g) for g, _ in fac.factors]
    degs = [len(g) - 1 for g in factors]
    checks = [t for t in admissible if t != t0][: max(samples, 1)]
    series = None
    for k, idx in _subsets_by_degree(degs, kmax):
        K = 2 * k + 1 + 4
        if series is None or len(series) < K:
            series = _make_monic(_series_in_s(B, t0, 2 * kmax + 5, p), p)
        G0 = [1]
        for i in idx:
            G0 = gfpoly.mul(G0, factors[i], p)
        G = hensel_lift(series[:K], G0, K, p)
        rows = _reconstruct(G, k, K, t0, p)
        if rows is None:
            continue
        phi = BivariateFactor(p, rows, t0)
        ok, bad = [], []
        for t in checks:
            spec = phi.at(t)
            if gfpoly.degree(spec) != k:
                continue
            target = _specialize(B, t, p)
            (ok if not gfpoly.rem(target, spec, p) else bad).append(t)
        if ok and bad:
            raise InterpolationError(
                f"interpolation failed: factor from t0={t0} (degree {k}) divides S at t={ok[:5]} but not at t={bad[:5]}"
            )
        if ok:
            phi.verified_at = ok
            return phi
    return None
