"""Hyperbolic triangle group Delta(a, b, c) as Moebius transformations of H."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..perm import PermutationTriple


class NotHyperbolicError(ValueError):
    pass


def moebius(M, z):
    """Apply the 2x2 matrix M to z (scalar or array)."""
    z = np.asarray(z, dtype=complex)
    return (M[0, 0] * z + M[0, 1]) / (M[1, 0] * z + M[1, 1])


def rotation_about_i(angle):
    """Matrix rotating H counterclockwise by ``angle`` about i."""
    h = angle / 2
    return np.array([[math.cos(h), math.sin(h)], [-math.sin(h), math.cos(h)]])


def fixed_point(M):
    """Fixed point in H of an elliptic matrix."""
    p, q, r, s = M[0, 0], M[0, 1], M[1, 0], M[1, 1]
    if abs(r) < 1e-300:
        raise ValueError("matrix fixes infinity")
    disc = complex((s - p) ** 2 + 4 * q * r)
    root = np.sqrt(disc)
    for z in ((p - s + root) / (2 * r), (p - s - root) / (2 * r)):
        if z.imag > 0:
            return complex(z)
    raise ValueError("matrix is not elliptic")


def is_hyperbolic(a, b, c):
    # 1/a + 1/b + 1/c < 1 in exact arithmetic
    return b * c + a * c + a * b < a * b * c


def pm_distance(M, N):
    """Distance between M and N as elements of PSL2(R)."""
    return min(np.abs(M - N).max(), np.abs(M + N).max())


@dataclass
class TriangleGroupEmbedding:
    """gen_a, gen_b rotate counterclockwise by 2pi/a about i and 2pi/b about mu*i.

    gen_a*gen_b is a rotation of order c about ``gamma``; the base kite has
    vertices i, gen_b(gamma), mu*i, gamma in counterclockwise order.
    """

    a: int
    b: int
    c: int
    gen_a: np.ndarray
    gen_b: np.ndarray
    mu: float
    gamma: complex

    @property
    def kite(self):
        p1 = complex(moebius(self.gen_b, self.gamma))
        return (1j, p1, self.mu * 1j, self.gamma)

    def kite_area(self):
        return 2 * math.pi * (1 - 1 / self.a - 1 / self.b - 1 / self.c)

    def relation_errors(self):
        A, B = self.gen_a, self.gen_b
        I = np.eye(2)
        return {
            "det_a": abs(np.linalg.det(A) - 1),
            "det_b": abs(np.linalg.det(B) - 1),
            "a^a": pm_distance(np.linalg.matrix_power(A, self.a), I),
            "b^b": pm_distance(np.linalg.matrix_power(B, self.b), I),
            "(ab)^c": pm_distance(np.linalg.matrix_power(A @ B, self.c), I),
            "fix_a": abs(complex(moebius(A, 1j)) - 1j),
            "fix_b": abs(complex(moebius(B, self.mu * 1j)) - self.mu * 1j),
        }


def embed_triangle_group(a: int, b: int, c: int) -> TriangleGroupEmbedding:
    if min(a, b, c) < 2 or not is_hyperbolic(a, b, c):
        raise NotHyperbolicError(f"not hyperbolic: 1/{a} + 1/{b} + 1/{c} >= 1")
    # side between i and mu*i of the triangle with angles pi/a, pi/b, pi/c
    ca, sa = math.cos(math.pi / a), math.sin(math.pi / a)
    cb, sb = math.cos(math.pi / b), math.sin(math.pi / b)
    ch = (ca * cb + math.cos(math.pi / c)) / (sa * sb)
    mu = math.exp(math.acosh(ch))
    A = rotation_about_i(2 * math.pi / a)
    D = np.diag([math.sqrt(mu), 1 / math.sqrt(mu)])
    B = D @ rotation_about_i(2 * math.pi / b) @ np.linalg.inv(D)
    gamma = fixed_point(A @ B)
    return TriangleGroupEmbedding(a, b, c, A, B, mu, gamma)


def choose_orders(t: PermutationTriple):
    """Orders (k*ord x, k*ord y, k*ord z) with the least k >= 1 that is hyperbolic.

    A rotation of order k*ord(x) still maps to x, so the coset action is
    unchanged; small or euclidean signatures are lifted this way.
    """
    base = [s.order() for s in (t.x, t.y, t.z)]
    k = 1
    while True:
        abc = tuple(k * o for o in base)
        if min(abc) >= 2 and is_hyperbolic(*abc):
            return abc, k
        k += 1
