"""Decomposition search for rational maps over F_p (tame case).

If f = g(h) with deg h = s, a Moebius change on the target of h lets us
assume h(x0) = 0 for a rational point x0 and h(oo) = oo. The zeros of h then
form a union of Galois orbits in the f-fiber through x0, each factor taken
with multiplicity m_i / e (e the ramification of g over f(x0)), which leaves
finitely many numerators hn. For each, the denominator satisfies
hd^r = den / b0 (mod hn), so hd runs over r-th roots in F_p[X]/(hn); every
candidate is then tested by solving a linear system for g.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Optional

from ..algebra import gfpoly
from ..algebra.fields import PrimeField
from ..algebra.linalg import nullspace
from ..algebra.nthroot import nth_roots_mod
from ..candidate import INFINITY, BelyiCandidate


class WildDecompositionError(ValueError):
    pass


@dataclass
class DecompositionResult:
    indecomposable: bool
    certificate: Optional[tuple] = None  # (g, h) with f = g(h)
    inner_degrees: tuple = ()
    candidates_tested: int = 0
    notes: list = field(default_factory=list)

    def __bool__(self):
        return self.indecomposable


def _divisors(n):
    return [k for k in range(1, n + 1) if n % k == 0]


def _is_prime(n):
    return n >= 2 and all(n % k for k in range(2, int(n**0.5) + 1))


def _value_at_infinity(num, den, p):
    dn, dd = len(num) - 1, len(den) - 1
    if dn > dd:
        return INFINITY
    if dn < dd:
        return 0
    return num[-1] * pow(den[-1], -1, p) % p


def _value(num, den, x, p):
    if x == INFINITY:
        return _value_at_infinity(num, den, p)
    b = gfpoly.evaluate(den, x, p)
    if b == 0:
        return INFINITY
    return gfpoly.evaluate(num, x, p) * pow(b, -1, p) % p


def _fiber(num, den, v, p, d):
    if v == INFINITY:
        F = list(den)
    else:
        F = gfpoly.sub(num, gfpoly.scale(den, v, p), p)
    fac = gfpoly.factor(F, p, random.Random(0))
    factors = [(g, e) for g, e in fac.factors]
    e_inf = d - gfpoly.degree(F)
    if e_inf > 0:
        factors.append((None, e_inf))
    return factors


def _rational_points(factors, p):
    out = []
    for i, (g, _) in enumerate(factors):
        if g is None:
            out.append((INFINITY, i))
        elif len(g) == 2:
            out.append(((-g[0]) % p, i))
    return out


def _weight(g, m, e):
    return (1 if g is None else len(g) - 1) * (m // e)


def _subsets(factors, req, s, e):
    """Index sets containing ``req`` with total weight s, using factors whose multiplicity e divides."""
    if factors[req][1] % e:
        return
    base = _weight(*factors[req], e)
    if base > s:
        return
    items = [i for i, (g, m) in enumerate(factors) if i != req and m % e == 0 and _weight(g, m, e) <= s - base]
    weights = [_weight(*factors[i], e) for i in items]

    def rec(k, left, chosen):
        if left == 0:
            yield [req] + chosen
            return
        for j in range(k, len(items)):
            if weights[j] <= left:
                yield from rec(j + 1, left - weights[j], chosen + [items[j]])

    yield from rec(0, s - base, [])


def _count_subsets(factors, req, s, e, cap=10**7):
    if factors[req][1] % e:
        return 0
    base = _weight(*factors[req], e)
    if base > s:
        return 0
    ways = [0] * (s - base + 1)
    ways[0] = 1
    for i, (g, m) in enumerate(factors):
        if i == req or m % e:
            continue
        w = _weight(g, m, e)
        for t in range(len(ways) - 1, w - 1, -1):
            ways[t] = min(cap, ways[t] + ways[t - w])
    return ways[-1]


def _candidates(factors, req, s, r, p):
    """Yield (hn, [(phi, k)]) for each admissible zero divisor of h avoiding X = oo."""
    for e in _divisors(factors[req][1]):
        if e > r:
            continue
        for idx in _subsets(factors, req, s, e):
            if any(factors[i][0] is None for i in idx):
                continue
            comps = [(list(factors[i][0]), factors[i][1] // e) for i in idx]
            poly = [1]
            for g, k in comps:
                poly = gfpoly.mul(poly, gfpoly.pow_(g, k, p), p)
            yield poly, comps


def _point_count(factors, req, s, r):
    return sum(_count_subsets(factors, req, s, e) for e in _divisors(factors[req][1]) if e <= r)


def solve_outer(num, den, hn, hd, r, p):
    """g = A/B of degree r with num/den = g(hn/hd), or None."""
    pw_n = [[1]]
    pw_d = [[1]]
    for _ in range(r):
        pw_n.append(gfpoly.mul(pw_n[-1], hn, p))
        pw_d.append(gfpoly.mul(pw_d[-1], hd, p))
    basis = [gfpoly.mul(pw_n[i], pw_d[r - i], p) for i in range(r + 1)]
    cols = [gfpoly.mul(num, b, p) for b in basis] + [gfpoly.neg(gfpoly.mul(den, b, p), p) for b in basis]
    n = max(len(c) for c in cols)
    M = [[c[k] if k < len(c) else 0 for c in cols] for k in range(n)]
    ns = nullspace(M, p)
    if not ns:
        return None
    v = ns[0]
    B, A = gfpoly.normalize(v[: r + 1], p), gfpoly.normalize(v[r + 1:], p)
    if not A or not B or max(len(A), len(B)) - 1 != r:
        return None
    return A, B


def _normalize_inner(hn, hd, p):
    """Moebius-normalize h: monic with h(0) = 0 when polynomial, else monic numerator and denominator."""
    c = _value_at_infinity(hn, hd, p)
    if c != INFINITY:
        hn, hd = hd, gfpoly.sub(hn, gfpoly.scale(hd, c, p), p)
    if len(hd) == 1:
        h = gfpoly.scale(hn, pow(hd[0], -1, p), p)
        h = gfpoly.normalize([0] + h[1:], p)
        return gfpoly.monic(h, p), [1]
    if hd[0] != 0:
        hn = gfpoly.sub(hn, gfpoly.scale(hd, hn[0] * pow(hd[0], -1, p) % p, p), p)
    return gfpoly.monic(hn, p), gfpoly.monic(hd, p)


def _compose(A, B, hn, hd, p):
    r = max(len(A), len(B)) - 1
    pw = [gfpoly.mul(gfpoly.pow_(hn, i, p), gfpoly.pow_(hd, r - i, p), p) for i in range(r + 1)]
    top = [0]
    bot = [0]
    for i, c in enumerate(A):
        top = gfpoly.add(top, gfpoly.scale(pw[i], c, p), p)
    for i, c in enumerate(B):
        bot = gfpoly.add(bot, gfpoly.scale(pw[i], c, p), p)
    return top, bot


def is_composition(m, g, h):
    """True if m = g(h) as rational functions."""
    p = m.field.p
    top, bot = _compose(list(g.num), list(g.den), list(h.num), list(h.den), p)
    return gfpoly.mul(list(m.num), bot, p) == gfpoly.mul(list(m.den), top, p) and bool(bot)


def _hsub(c, n, a, b, cc, dd, p):
    """sum c_i (aX + b)^i (cc X + dd)^(n - i): c((aX+b)/(ccX+dd)) cleared of denominators."""
    out = []
    for i, ci in enumerate(c):
        if ci:
            t = gfpoly.mul(gfpoly.pow_([b, a], i, p), gfpoly.pow_([dd, cc], n - i, p), p)
            out = gfpoly.add(out, gfpoly.scale(t, ci, p), p)
    return out


def _primitive_root(p):
    qs = {q for q in range(2, p) if (p - 1) % q == 0 and all(q % k for k in range(2, int(q**0.5) + 1))}
    return next(g for g in range(1, p) if all(pow(g, (p - 1) // q, p) != 1 for q in qs))


def _search_degree(num, den, s, d, p, fibers, pts, rng):
    """(hn, hd) of an inner map of degree s, or None; also returns #candidates tested.

    Gauge: h vanishes on the chosen fiber point and has its pole at X = oo, so
    deg hd < s and den = b0 * hd^r (mod hn). The r-th roots of den modulo hn
    enumerate every possible hd.
    """
    r = d // s
    scored = []
    for v, facs in fibers.items():
        for x, i in _rational_points(facs, p):
            scored.append((_point_count(facs, i, s, r), repr(v), v, x, i))
    scored.sort(key=lambda t: (t[0], t[1]))
    if not scored or scored[0][0] == 0:
        return None, 0
    plans = []
    for _, _, v0, x0, i0 in scored:
        if v0 == INFINITY:
            num1, den1 = list(den), list(num)
        else:
            num1, den1 = gfpoly.sub(num, gfpoly.scale(den, v0, p), p), list(den)
        facs = fibers[v0]
        if not any(g is None for g, _ in facs):
            plans = [(num1, den1, facs, i0, None)]
            break
        # X = oo lies in this fiber; X -> shift + 1/X needs a rational point outside it
        shift = next((a for a in range(p) if gfpoly.evaluate(num1, a, p)), None)
        if shift is not None:
            num1 = _hsub(num1, d, shift, 1, 1, 0, p)
            den1 = _hsub(den1, d, shift, 1, 1, 0, p)
            facs = _fiber(num1, den1, 0, p, d)
            x0 = 0 if x0 == INFINITY else pow(x0 - shift, -1, p)
            i0 = next(i for i, (g, _) in enumerate(facs) if g is not None and len(g) == 2 and (-g[0]) % p == x0)
            plans = [(num1, den1, facs, i0, shift)]
            break
        if x0 != INFINITY:
            # the fiber covers P^1(F_p): keep oo where it is and hope h(oo) != h(x0)
            plans.append((num1, den1, facs, i0, None))
    total = 0
    for num1, den1, facs, i0, shift in plans:
        found, tested = _attempt(num1, den1, facs, i0, shift, s, r, p, pts, rng)
        total += tested
        if found is not None:
            return found, total
    return None, total


def _attempt(num1, den1, facs, i0, shift, s, r, p, pts, rng):
    f_vals = [(x, _value(num1, den1, x, p)) for x in pts]
    w = _primitive_root(p)
    kappas = [pow(w, j, p) for j in range(math.gcd(r, p - 1))]
    tested = 0
    for hn, comps in _candidates(facs, i0, s, r, p):
        for kappa in kappas:
            target = gfpoly.rem(gfpoly.scale(den1, kappa, p), hn, p)
            for hd in nth_roots_mod(target, r, comps, p, rng):
                tested += 1
                if not _consistent(hn, hd, p, f_vals):
                    continue
                if solve_outer(num1, den1, hn, hd, r, p) is None:
                    continue
                if shift is not None:
                    hn = _hsub(hn, s, 0, 1, 1, -shift % p, p)
                    hd = _hsub(hd, s, 0, 1, 1, -shift % p, p)
                return (hn, hd), tested
    return None, tested


def _consistent(hn, hd, p, f_vals):
    seen = {}
    for x, fx in f_vals:
        hx = _value(hn, hd, x, p)
        if seen.setdefault(hx, fx) != fx:
            return False
    return True


def indecomposability_test(m, seed=0) -> DecompositionResult:
    F = m.field
    if not isinstance(F, PrimeField):
        raise TypeError("indecomposability_test needs a map over a prime field")
    p = F.p
    d = m.degree
    if d % p == 0:
        raise WildDecompositionError(f"additive/wild case unsupported: characteristic {p} divides degree {d}")
    if d <= 3 or _is_prime(d):
        return DecompositionResult(True, notes=[f"degree {d} is prime or at most 3"])
    num, den = list(m.num), list(m.den)
    rng = random.Random(seed)
    pts = [INFINITY] + list(range(p))
    if p > 600:
        pts = [INFINITY] + rng.sample(range(p), 600)
    f_vals = [(x, _value(num, den, x, p)) for x in pts]
    values = [0, 1, INFINITY]
    if p <= 61:
        values += [fx for _, fx in f_vals]
    else:
        values += [fx for _, fx in rng.sample(f_vals, 6)]
    values = list(dict.fromkeys(values))
    fibers = {v: _fiber(num, den, v, p, d) for v in values}
    inner = [s for s in reversed(_divisors(d)) if 1 < s < d]
    notes, total = [], 0
    for s in inner:
        found, tested = _search_degree(num, den, s, d, p, fibers, pts, rng)
        total += tested
        if found is None:
            notes.append(f"inner degree {s}: {tested} candidate(s), none extends")
            continue
        hn, hd = found
        hn, hd = _normalize_inner(hn, hd, p)
        A, B = solve_outer(num, den, hn, hd, d // s, p)
        g = BelyiCandidate(F, tuple(A), tuple(B))
        h = BelyiCandidate(F, tuple(hn), tuple(hd))
        if not is_composition(m, g, h):
            raise AssertionError("certificate failed to verify")
        notes.append(f"inner degree {s}: decomposition found")
        return DecompositionResult(False, (g, h), tuple(inner), total, notes)
    return DecompositionResult(True, None, tuple(inner), total, notes)
