"""Geodesic zipper: a conformal map from a Jordan domain onto H.

Boundary samples z_0..z_n (counterclockwise) are straightened one at a time:
a square root opens the segment [z_0, z_1], each later sample is pulled to R
along the circular arc orthogonal to R, and a final Moebius map and square
close the last arc. The composition maps the domain bounded by the arc
polygon through the samples onto H; it is exact for that polygon.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class ZipperError(RuntimeError):
    pass


def _segments_cross(P):
    """True if the closed polygon P has two non-adjacent edges that intersect."""
    n = len(P)
    a = P
    b = np.roll(P, -1)
    ax, ay, bx, by = a.real, a.imag, b.real, b.imag
    for i in range(n):
        j = np.arange(i + 2, n)
        if i == 0:
            j = j[j != n - 1]
        if not len(j):
            continue
        cx, cy, dx, dy = ax[j], ay[j], bx[j], by[j]

        def orient(px, py, qx, qy, rx, ry):
            return (qx - px) * (ry - py) - (qy - py) * (rx - px)

        o1 = orient(ax[i], ay[i], bx[i], by[i], cx, cy)
        o2 = orient(ax[i], ay[i], bx[i], by[i], dx, dy)
        o3 = orient(cx, cy, dx, dy, ax[i], ay[i])
        o4 = orient(cx, cy, dx, dy, bx[i], by[i])
        if np.any((o1 * o2 < 0) & (o3 * o4 < 0)):
            return True
    return False


def signed_area(P):
    return 0.5 * float(np.sum(P.real * np.roll(P.imag, -1) - np.roll(P.real, -1) * P.imag))


@dataclass
class ZipperMap:
    z0: complex
    z1: complex
    steps: list = field(default_factory=list)  # (a, beta) per interior step
    zeta: complex = 0j
    sign: float = 1.0
    quadrant: float = 1.0  # sign of Re before squaring
    post: tuple = (1.0, 0.0, 0.0, 1.0)  # real Moebius applied last
    boundary: np.ndarray | None = None  # images of the samples (real)

    # elementary maps -------------------------------------------------
    def _first(self, z):
        return 1j * np.sqrt((z - self.z1) / (z - self.z0))

    def _first_inv(self, w):
        u = -(w * w)
        return (self.z1 - u * self.z0) / (1 - u)

    @staticmethod
    def _step(z, a, beta):
        T = z / (1 - a * z)
        return T * np.sqrt(1 + (beta * beta) / (T * T))

    @staticmethod
    def _step_inv(w, a, beta):
        T = w * np.sqrt(1 - (beta * beta) / (w * w))
        T = np.where(T.imag < 0, -T, T)
        return T / (1 + a * T)

    def _final(self, z):
        v = z / (1 - z / self.zeta)
        return self.sign * v * v

    def _final_inv(self, s):
        v = np.sqrt(self.sign * s)
        v = np.where(np.sign(v.real) != self.quadrant, -v, v)
        return v / (1 + v / self.zeta)

    def _post(self, z):
        a, b, c, d = self.post
        return (a * z + b) / (c * z + d)

    def _post_inv(self, w):
        a, b, c, d = self.post
        return (d * w - b) / (-c * w + a)

    # public ----------------------------------------------------------
    def forward(self, z):
        z = np.asarray(z, dtype=complex)
        w = self._first(z)
        for a, beta in self.steps:
            w = self._step(w, a, beta)
        return self._post(self._final(w))

    def inverse(self, w):
        w = np.asarray(w, dtype=complex)
        z = self._final_inv(self._post_inv(w))
        for a, beta in reversed(self.steps):
            z = self._step_inv(z, a, beta)
        return self._first_inv(z)


def zipper_h1(samples, interior_point, marked=None, check_jordan=True):
    """Conformal map of the domain bounded by ``samples`` (counterclockwise) onto H.

    ``interior_point`` fixes the branch of the last square. With ``marked``
    = (i, j, k) the samples i, j, k are sent to 0, 1 and infinity; otherwise
    a real Moebius map keeps every sample finite.
    """
    P = np.asarray(samples, dtype=complex)
    M = len(P)
    if M < 3:
        raise ZipperError("need at least three boundary points")
    if check_jordan and _segments_cross(P):
        raise ZipperError("sampled boundary is not a Jordan curve (self-intersection)")
    if signed_area(P) <= 0:
        raise ZipperError("boundary samples must run counterclockwise")
    zm = ZipperMap(P[0], P[1])
    with np.errstate(divide="ignore", invalid="ignore"):
        bnd = zm._first(P)
        bnd[0] = 0
        bnd[1] = 0
        ref = zm._first(np.array([interior_point], dtype=complex))
        zeta = np.inf
        for k in range(2, M):
            c = bnd[k]
            c = complex(c.real, max(c.imag, 0.0))
            if abs(c) == 0:
                raise ZipperError("coincident boundary samples")
            a = c.real / abs(c) ** 2
            b = c.imag / abs(c) ** 2
            beta = 1.0 / b if b > 0 else 0.0
            zm.steps.append((a, beta))
            new = zm._step(bnd, a, beta)
            new[k - 1] = -beta  # base of the slit, reached along the domain side
            new[k] = 0.0
            new[: k + 1] = new[: k + 1].real
            bnd = new
            ref = zm._step(ref, a, beta)
            if np.isinf(zeta):
                T = -1 / a if a != 0 else np.inf
            else:
                T = zeta / (1 - a * zeta) if a * zeta != 1 else np.inf
            zeta = (T * np.sqrt(1 + beta * beta / (T * T))).real if np.isfinite(T) else np.inf
    if not np.isfinite(zeta) or zeta == 0:
        raise ZipperError("degenerate closing arc")
    zm.zeta = complex(zeta, 0.0)
    v = ref[0] / (1 - ref[0] / zm.zeta)
    zm.quadrant = 1.0 if v.real > 0 else -1.0
    zm.sign = 1.0 if (v * v).imag > 0 else -1.0
    x = np.empty(M)
    x[0] = np.inf
    x[1:] = np.real(zm._final(bnd[1:].real + 0j))
    if marked is not None:
        zm.post = _three_point([x[i] for i in marked])
    else:
        # three evenly spaced samples to -sqrt3, 0, sqrt3 (cube roots of unity in the disk picture)
        idx = [0, M // 3, (2 * M) // 3]
        zm.post = _compose_real(_inverse_real(_three_point([-3**0.5, 0.0, 3**0.5])), _three_point([x[i] for i in idx]))
    zm.boundary = _apply_real(zm.post, x)
    return zm


def _compose_real(M, N):
    """Matrix product M*N of real Moebius maps stored as (a, b, c, d)."""
    a, b, c, d = M
    e, f, g, h = N
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _inverse_real(M):
    a, b, c, d = M
    return (d, -b, -c, a)


def _apply_real(M, x):
    a, b, c, d = M
    out = np.empty(len(x))
    for k, v in enumerate(x):
        if np.isinf(v):
            out[k] = a / c if c != 0 else np.inf
        else:
            den = c * v + d
            out[k] = (a * v + b) / den if den != 0 else np.inf
    return out


def _three_point(x):
    """Real Moebius (det > 0) sending x0, x1, x2 to 0, 1, infinity."""
    x0, x1, x2 = (float(v) for v in x)
    if np.isinf(x2):
        a, b, c, d = 1.0 / (x1 - x0), -x0 / (x1 - x0), 0.0, 1.0
    elif np.isinf(x0):
        a, b, c, d = 0.0, x1 - x2, 1.0, -x2
    elif np.isinf(x1):
        a, b, c, d = 1.0, -x0, 1.0, -x2
    else:
        # w = (z - x0)(x1 - x2) / ((z - x2)(x1 - x0))
        k = (x1 - x2) / (x1 - x0)
        a, b, c, d = k, -k * x0, 1.0, -x2
    if a * d - b * c <= 0:
        raise ZipperError("marked points are not in counterclockwise order")
    return (a, b, c, d)
