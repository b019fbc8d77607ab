"""Monodromy of a Belyi map by numerical path lifting of the roots of p - s*q."""

from __future__ import annotations

import cmath

import numpy as np

from ..algebra.fields import NumberField, PrimeField
from ..perm import Permutation, PermutationTriple

DEFAULT_BASE = complex(0.5, 0.5)
LOOP_RADIUS = 0.25
MAX_DEGREE = 64


class ContinuationError(RuntimeError):
    pass


def complex_coefficients(m, embedding=0):
    F = m.field
    if isinstance(F, PrimeField):
        raise TypeError("numerical monodromy needs a map over Q or a number field")
    if isinstance(F, NumberField):
        conv = lambda c: F.to_complex(c, embedding)  # noqa: E731
    else:
        conv = complex
    return [conv(c) for c in m.num], [conv(c) for c in m.den]


class _Fiber:
    """Roots of p(X) - s q(X) at complex s."""

    def __init__(self, num, den, digits):
        d = max(len(num), len(den)) - 1
        self.num = np.array(list(num) + [0] * (d + 1 - len(num)), dtype=complex)
        self.den = np.array(list(den) + [0] * (d + 1 - len(den)), dtype=complex)
        self.d = d
        self.digits = digits
        self.tol = 10.0 ** (-digits / 2)
        self.scale = max(np.abs(self.num).max(), np.abs(self.den).max())

    def roots(self, s):
        c = self.num - s * self.den
        if abs(c[-1]) < 1e-12 * self.scale:
            raise ContinuationError(f"degree drops at s = {s:.6g}; choose another base point")
        if self.digits <= 15:
            return np.roots(c[::-1])
        import mpmath

        with mpmath.workdps(self.digits):
            rts = mpmath.polyroots([mpmath.mpc(x) for x in c[::-1]], maxsteps=200, extraprec=2 * self.digits)
        return np.array([complex(r) for r in rts])


def _min_sep(z):
    if len(z) < 2:
        return np.inf
    D = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(D, np.inf)
    return D.min()


def _match(old, new):
    """Permutation j[i] sending old root i to its continuation, or None if ambiguous."""
    D = np.abs(old[:, None] - new[None, :])
    j = D.argmin(axis=1)
    if len(set(j.tolist())) != len(old):
        return None
    if D[np.arange(len(old)), j].max() > 0.3 * _min_sep(old):
        return None
    return j


def _track(fiber, roots, path, h0=1 / 32, hmin=1e-9):
    tau, h = 0.0, h0
    cur = roots
    while tau < 1.0:
        nxt = min(1.0, tau + h)
        new = fiber.roots(path(nxt))
        if len(new) != len(cur):
            raise ContinuationError("lost a root during continuation")
        if _min_sep(new) < fiber.tol:
            raise ContinuationError(
                f"root collision below tolerance {fiber.tol:.1e} at s = {path(nxt):.6g}; "
                "increase precision or use smaller steps"
            )
        j = _match(cur, new)
        if j is None:
            h /= 2
            if h < hmin:
                raise ContinuationError("step size underflow; increase precision or use smaller steps")
            continue
        cur = new[j]
        tau = nxt
        h = min(2 * h, 1 / 16)
    return cur


def _segment(a, b):
    return lambda t: a + (b - a) * t


def _loop_paths(base, center, radius):
    entry = center + radius * (base - center) / abs(base - center)
    circle = lambda t: center + (entry - center) * cmath.exp(2j * cmath.pi * t)  # noqa: E731
    return [_segment(base, entry), circle, _segment(entry, base)]


def _monodromy(fiber, base_roots, base, center, radius):
    cur = base_roots
    for path in _loop_paths(base, center, radius):
        cur = _track(fiber, cur, path)
    j = _match(cur, base_roots)  # root i ends at base root j[i]
    if j is None:
        raise ContinuationError("loop did not return to the base fiber; increase precision")
    return Permutation(tuple(int(k) + 1 for k in j))


def base_fiber(m, base_point=DEFAULT_BASE, precision_digits=15, embedding=0):
    """Roots over the base point in the labelling order used for the permutations."""
    num, den = complex_coefficients(m, embedding)
    fiber = _Fiber(num, den, precision_digits)
    r = fiber.roots(complex(base_point))
    return np.array(sorted(r, key=lambda z: (round(z.real, 9), round(z.imag, 9)))), fiber


def numerical_monodromy(m, precision_digits=15, base_point=DEFAULT_BASE, embedding=0, max_degree=MAX_DEGREE):
    """(x, y, z) with x, y the lifts of counterclockwise loops around 0 and 1.

    Root i (roots sorted by real then imaginary part) ends at root x(i); z is
    fixed by x*y*z = 1.
    """
    if m.degree > max_degree:
        raise ValueError(f"degree {m.degree} exceeds the configured bound {max_degree}")
    base = complex(base_point)
    for c in (0, 1):
        if abs(base - c) <= LOOP_RADIUS * 1.5:
            raise ValueError("base point too close to a branch value")
    roots, fiber = base_fiber(m, base, precision_digits, embedding)
    if _min_sep(roots) < fiber.tol:
        raise ContinuationError("base fiber is degenerate; choose another base point")
    x = _monodromy(fiber, roots, base, 0.0, LOOP_RADIUS)
    y = _monodromy(fiber, roots, base, 1.0, LOOP_RADIUS)
    return PermutationTriple.from_xy(x, y)
