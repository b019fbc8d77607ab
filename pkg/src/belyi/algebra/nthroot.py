"""All r-th roots of a unit in F_p[X]/(prod phi_i^k_i), p not dividing r.

Roots are found in each residue field F_p[X]/(phi) (Adleman-Manders-Miller
style, one prime factor of r at a time), Hensel-lifted to phi^k, and
combined by the Chinese remainder theorem.
"""

from __future__ import annotations

import itertools
import random

from . import gfpoly as P


def _prime_factors(n):
    out, k = [], 2
    while k * k <= n:
        while n % k == 0:
            out.append(k)
            n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


class _ResidueField:
    def __init__(self, phi, p):
        self.phi, self.p = list(phi), p
        self.order = p ** P.degree(phi) - 1  # of the unit group

    def pow(self, a, e):
        return P.powmod(a, e, self.phi, self.p)

    def mul(self, a, b):
        return P.rem(P.mul(a, b, self.p), self.phi, self.p)

    def is_one(self, a):
        return P.is_one(P.rem(a, self.phi, self.p))

    def random_unit(self, rng):
        while True:
            a = P.normalize([rng.randrange(self.p) for _ in range(P.degree(self.phi))], self.p)
            if a:
                return a


def _dlog_sylow(F, b, z, ell, t):
    """k with z^k = b, z of order ell^t."""
    k = 0
    gamma = F.pow(z, ell ** (t - 1))  # order ell
    steps = [[1]]
    for _ in range(1, ell):
        steps.append(F.mul(steps[-1], gamma))
    for i in range(t):
        # strip known digits, project to the order-ell subgroup
        c = F.mul(b, F.pow(z, F.order - k)) if k else b
        c = F.pow(c, ell ** (t - 1 - i))
        c = P.rem(c, F.phi, F.p)
        digit = next(j for j, s in enumerate(steps) if P.rem(s, F.phi, F.p) == c)
        k += digit * ell**i
    return k


def _prime_roots(F, a, ell, rng):
    """All ell-th roots of a in the residue field."""
    N = F.order
    if N % ell:
        return [F.pow(a, pow(ell, -1, N))]
    if not F.is_one(F.pow(a, N // ell)):
        return []
    t, m = 0, N
    while m % ell == 0:
        m //= ell
        t += 1
    while True:
        c = F.random_unit(rng)
        if not F.is_one(F.pow(c, N // ell)):
            break
    z = F.pow(c, m)
    # a = a^(alpha*ell^t) * a^(beta*m) with alpha*ell^t + beta*m = 1
    beta = pow(m, -1, ell**t)
    alpha = (1 - beta * m) // ell**t
    a_m = F.pow(a, (alpha * ell**t) % N)
    a_s = F.pow(a, (beta * m) % N)
    y_m = F.pow(a_m, pow(ell, -1, m)) if m > 1 else [1]
    k = _dlog_sylow(F, a_s, z, ell, t)
    y_s = F.pow(z, k // ell)
    y = F.mul(y_m, y_s)
    zeta = F.pow(z, ell ** (t - 1))
    out = [y]
    for _ in range(ell - 1):
        out.append(F.mul(out[-1], zeta))
    return out


def roots_in_field(a, r, phi, p, rng=None):
    F = _ResidueField(phi, p)
    rng = rng or random.Random(0)
    cur = [P.rem(a, phi, p)]
    for ell in _prime_factors(r):
        cur = [y for x in cur for y in _prime_roots(F, x, ell, rng)]
    return cur


def _hensel(y, a, r, mod, p, k):
    for _ in range(max(1, k).bit_length() + 1):
        fy = P.sub(P.powmod(y, r, mod, p), a, p)
        if not P.rem(fy, mod, p):
            break
        d = P.scale(P.powmod(y, r - 1, mod, p), r % p, p)
        y = P.rem(P.sub(y, P.mul(fy, P.invmod(d, mod, p), p), p), mod, p)
    return y


def nth_roots_mod(a, r, components, p, rng=None):
    """All y mod prod(phi^k) with y^r = a; ``components`` is [(phi, k)]."""
    if r % p == 0:
        raise ValueError("characteristic divides the root degree")
    rng = rng or random.Random(0)
    per = []
    for phi, k in components:
        mod = P.pow_(list(phi), k, p)
        ak = P.rem(list(a), mod, p)
        per.append((mod, [_hensel(y, ak, r, mod, p, k) for y in roots_in_field(a, r, phi, p, rng)]))
    if any(not ys for _, ys in per):
        return
    mods = [m for m, _ in per]
    # CRT coefficients e_i = 1 mod m_i, 0 mod m_j
    total = [1]
    for m in mods:
        total = P.mul(total, m, p)
    idem = []
    for m in mods:
        rest = P.exquo(total, m, p)
        idem.append(P.mul(rest, P.invmod(rest, m, p), p))
    for choice in itertools.product(*(ys for _, ys in per)):
        y = []
        for e, yi in zip(idem, choice):
            y = P.add(y, P.mul(e, yi, p), p)
        yield P.rem(y, total, p)
