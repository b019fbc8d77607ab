"""Polynomial ansatz p - c*Q - r = 0 built from a ramification profile.

With the gauge below, p = prod P_m^m and r = prod R_m^m are monic of degree
d, and q = c * prod Q_m^m has degree d - e where e is the multiplicity of
the point at infinity. The coefficients of X^0..X^(d-1) give d equations.
Unknowns are the non-leading coefficients of the free factors plus c:

    (#parts over 0 - 1) + (#parts over 1 - 1) + (#parts over oo - 1) + 1
    = (d + 2) - 3 + 1 = d.

Gauge: the first highest-multiplicity preimage of 0 sits at X = 0, that of
1 at X = 1, that of infinity at X = oo.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath

from ..perm import CycleType


class AnsatzError(ValueError):
    pass


INF = mpmath.inf


@dataclass
class FiberClass:
    fiber: str  # "0", "1" or "oo"
    multiplicity: int
    count: int  # number of points in this class, including a gauge point
    gauge: bool  # one of the points is fixed (at 0, 1 or removed to infinity)

    @property
    def free(self):
        return self.count - (1 if self.gauge else 0)


@dataclass
class AnsatzSystem:
    degree: int
    classes: list
    e_inf: int
    gauge: dict = field(default_factory=dict)

    @property
    def n_unknowns(self):
        return sum(c.free for c in self.classes) + 1

    @property
    def n_equations(self):
        return self.degree

    def _slices(self):
        out, k = [], 0
        for c in self.classes:
            out.append((c, k, k + c.free))
            k += c.free
        return out

    def _factor(self, c, coeffs):
        """Monic polynomial (ascending) of one multiplicity class."""
        poly = list(coeffs) + [mpmath.mpf(1)]
        if c.gauge and c.fiber == "0":
            poly = [mpmath.mpf(0)] + poly
        elif c.gauge and c.fiber == "1":
            poly = _pmul(poly, [mpmath.mpf(-1), mpmath.mpf(1)])
        return poly

    def polys(self, u):
        """(p, Q, r, c) at the unknown vector u."""
        prod = {"0": [mpmath.mpf(1)], "1": [mpmath.mpf(1)], "oo": [mpmath.mpf(1)]}
        for c, a, b in self._slices():
            prod[c.fiber] = _pmul(prod[c.fiber], _ppow(self._factor(c, u[a:b]), c.multiplicity))
        return prod["0"], prod["oo"], prod["1"], u[-1]

    def residual(self, u):
        p, Q, r, c = self.polys(u)
        out = []
        for k in range(self.degree):
            out.append(_get(p, k) - c * _get(Q, k) - _get(r, k))
        return out

    def jacobian(self, u):
        d = self.degree
        p, Q, r, cval = self.polys(u)
        total = {"0": p, "1": r, "oo": Q}
        sign = {"0": 1, "1": -1, "oo": -cval}
        cols = []
        for c, a, b in self._slices():
            F = self._factor(c, u[a:b])
            # d/dg_k of F^m * rest = m F^(m-1) * rest * X^k * (gauge factor)
            rest = _pdiv_exact(total[c.fiber], _ppow(F, c.multiplicity))
            W = _pmul(rest, _pmul(_ppow(F, c.multiplicity - 1), [mpmath.mpf(c.multiplicity)]))
            if c.gauge and c.fiber == "0":
                W = [mpmath.mpf(0)] + W
            elif c.gauge and c.fiber == "1":
                W = _pmul(W, [mpmath.mpf(-1), mpmath.mpf(1)])
            for k in range(c.free):
                col = [mpmath.mpf(0)] * k + W
                cols.append([sign[c.fiber] * _get(col, i) for i in range(d)])
        cols.append([-_get(Q, i) for i in range(d)])
        return mpmath.matrix([[cols[j][i] for j in range(len(cols))] for i in range(d)])

    def to_map(self, u):
        """(num, den) coefficient lists (ascending) of f = p / (c Q)."""
        p, Q, _, c = self.polys(u)
        return p, [c * x for x in Q]


def _get(a, k):
    return a[k] if k < len(a) else mpmath.mpf(0)


def _pmul(a, b):
    out = [mpmath.mpf(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _ppow(a, e):
    out = [mpmath.mpf(1)]
    for _ in range(e):
        out = _pmul(out, a)
    return out


def _pdiv_exact(a, b):
    """Quotient of a by monic b (remainder discarded)."""
    a = list(a)
    n, m = len(a) - 1, len(b) - 1
    if n < m:
        return [mpmath.mpf(0)]
    q = [mpmath.mpf(0)] * (n - m + 1)
    for k in range(n - m, -1, -1):
        q[k] = a[k + m] / b[m]
        for j in range(m + 1):
            a[k + j] -= q[k] * b[j]
    return q


def _classes(ct: CycleType, fiber, gauge_mult):
    out = []
    for m, cnt in ct.powers().items():
        out.append(FiberClass(fiber, m, cnt, m == gauge_mult))
    return out


def system_for_profile(profile):
    """Ansatz for a genus-0 profile, gauge on the highest multiplicities."""
    d = profile.degree
    if profile.cycle_count_sum() != d + 2:
        raise AnsatzError(f"profile {profile} is not genus 0")
    e0 = max(profile.over0.parts)
    e1 = max(profile.over1.parts)
    einf = max(profile.overInf.parts)
    classes = _classes(profile.over0, "0", e0) + _classes(profile.over1, "1", e1)
    for c in _classes(profile.overInf, "oo", einf):
        if c.gauge:
            # the point at infinity is not a root of Q
            c = FiberClass("oo", c.multiplicity, c.count - 1, False)
        if c.count:
            classes.append(c)
    sys = AnsatzSystem(d, classes, einf, {"0": e0, "1": e1, "oo": einf})
    if sys.n_unknowns != sys.n_equations:
        raise AnsatzError(f"system is not square: {sys.n_unknowns} unknowns, {sys.n_equations} equations")
    return sys


# ------------------------------------------------------------------ initial values


def _is_inf(z):
    return z is None or (isinstance(z, (complex, float)) and not mpmath.isfinite(z)) or z == INF


def moebius_to_gauge(z0, z1, zinf):
    """Coefficients (a, b, c, d) of T(z) = (az + b)/(cz + d) with T(z0)=0, T(z1)=1, T(zinf)=oo."""
    if _is_inf(zinf):
        return (1, -z0, 0, z1 - z0)
    if _is_inf(z0):
        return (0, z1 - zinf, 1, -zinf)
    if _is_inf(z1):
        return (1, -z0, 1, -zinf)
    return (z1 - zinf, -z0 * (z1 - zinf), z1 - z0, -zinf * (z1 - z0))


def apply_moebius(M, z):
    a, b, c, d = M
    if _is_inf(z):
        return INF if c == 0 else mpmath.mpmathify(a) / c
    den = c * z + d
    if abs(den) == 0:
        return INF
    return (a * z + b) / den


def build_system(profile, preimages):
    """System and initial vector from approximate preimages.

    ``preimages`` maps "0", "1", "oo" to lists of (point, multiplicity);
    a point may be ``None`` or infinite.
    """
    sys = system_for_profile(profile)
    for key, ct in (("0", profile.over0), ("1", profile.over1), ("oo", profile.overInf)):
        got = CycleType(tuple(m for _, m in preimages[key]))
        if got != ct:
            raise AnsatzError(f"multiplicities over {key} are {got}, profile says {ct}")

    def pick(key):
        e = sys.gauge[key]
        return next(i for i, (_, m) in enumerate(preimages[key]) if m == e)

    i0, i1, ii = pick("0"), pick("1"), pick("oo")
    M = moebius_to_gauge(preimages["0"][i0][0], preimages["1"][i1][0], preimages["oo"][ii][0])
    moved = {k: [(apply_moebius(M, z), m) for z, m in v] for k, v in preimages.items()}
    skip = {"0": i0, "1": i1, "oo": ii}
    u = []
    for c in sys.classes:
        pts = [z for j, (z, m) in enumerate(moved[c.fiber]) if m == c.multiplicity and j != skip[c.fiber]]
        if any(_is_inf(z) for z in pts):
            raise AnsatzError("a non-gauge preimage landed at infinity")
        poly = [mpmath.mpc(1)]
        for z in pts:
            poly = _pmul(poly, [-z, 1])
        u.extend(poly[:-1])
    # scale from the top surviving coefficient of p - r
    sys_u = u + [mpmath.mpc(1)]
    p, Q, r, _ = sys.polys(sys_u)
    k = len(Q) - 1
    c = (_get(p, k) - _get(r, k)) / Q[-1]
    return sys, u + [c]
