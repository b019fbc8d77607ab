"""Univariate polynomial arithmetic over any field from :mod:`.fields`.

Coefficient lists are ascending and trimmed; [] is zero. Over a prime
field every routine defers to :mod:`.gfpoly`.
"""

from __future__ import annotations

from . import gfpoly
from .fields import PrimeField


def _is_fp(F):
    return isinstance(F, PrimeField)


def trim(F, a):
    a = list(a)
    while a and F.is_zero(a[-1]):
        a.pop()
    return a


def coerce(F, a):
    return trim(F, [F.coerce(c) for c in a])


def degree(a):
    return len(a) - 1


def add(F, a, b):
    if _is_fp(F):
        return gfpoly.add(a, b, F.p)
    n = max(len(a), len(b))
    return trim(F, [(a[i] if i < len(a) else F.zero) + (b[i] if i < len(b) else F.zero) for i in range(n)])


def sub(F, a, b):
    if _is_fp(F):
        return gfpoly.sub(a, b, F.p)
    n = max(len(a), len(b))
    return trim(F, [(a[i] if i < len(a) else F.zero) - (b[i] if i < len(b) else F.zero) for i in range(n)])


def scale(F, a, c):
    if _is_fp(F):
        return gfpoly.scale(a, c, F.p)
    return trim(F, [x * c for x in a])


def mul(F, a, b):
    if _is_fp(F):
        return gfpoly.mul(a, b, F.p)
    if not a or not b:
        return []
    r = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            r[i + j] = r[i + j] + x * y
    return trim(F, r)


def pow_(F, a, e):
    result = [F.one]
    while e:
        if e & 1:
            result = mul(F, result, a)
        e >>= 1
        if e:
            a = mul(F, a, a)
    return result


def divmod_(F, a, b):
    if _is_fp(F):
        return gfpoly.divmod_(a, b, F.p)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    nb = len(b)
    if len(r) < nb:
        return [], r
    inv = F.inv(b[-1])
    q = [F.zero] * (len(r) - nb + 1)
    for i in range(len(r) - nb, -1, -1):
        c = r[i + nb - 1] * inv
        if not F.is_zero(c):
            q[i] = c
            for j in range(nb):
                r[i + j] = r[i + j] - c * b[j]
    return trim(F, q), trim(F, r[:nb - 1])


def exquo(F, a, b):
    q, r = divmod_(F, a, b)
    if r:
        raise ValueError("polynomial division is not exact")
    return q


def monic(F, a):
    if not a:
        return []
    if _is_fp(F):
        return gfpoly.monic(a, F.p)
    inv = F.inv(a[-1])
    return [c * inv for c in a]


def gcd(F, a, b):
    if _is_fp(F):
        return gfpoly.gcd(a, b, F.p)
    a, b = trim(F, a), trim(F, b)
    while b:
        a, b = b, divmod_(F, a, b)[1]
    return monic(F, a)


def deriv(F, a):
    if _is_fp(F):
        return gfpoly.deriv(a, F.p)
    return trim(F, [a[i] * i for i in range(1, len(a))])


def evaluate(F, a, x):
    if _is_fp(F):
        return gfpoly.evaluate(a, x, F.p)
    r = F.zero
    for c in reversed(a):
        r = r * x + c
    return r


def compose(F, g, h):
    """g(h(X))."""
    r = []
    for c in reversed(g):
        r = add(F, mul(F, r, h), [c])
    return r


def squarefree_decomposition(F, f):
    """Yun's algorithm: monic f = prod g_m^m with g_m squarefree and coprime.

    Returns ``{m: g_m}`` for the nonconstant g_m. In positive characteristic
    the F_p routine (which also handles p-th powers) is used.
    """
    if _is_fp(F):
        return {m: g for g, m in gfpoly.squarefree_decomposition(f, F.p)}
    f = monic(F, f)
    out = {}
    if degree(f) < 1:
        return out
    df = deriv(F, f)
    a = gcd(F, f, df)
    b = exquo(F, f, a)
    c = exquo(F, df, a)
    d = sub(F, c, deriv(F, b))
    i = 1
    while degree(b) > 0:
        g = gcd(F, b, d)
        if degree(g) > 0:
            out[i] = g
        b = exquo(F, b, g)
        c = exquo(F, d, g)
        d = sub(F, c, deriv(F, b))
        i += 1
    return out


def root_multiplicities(F, f):
    """Multiset of root multiplicities of f over the algebraic closure.

    Valid in characteristic 0, and in characteristic p as long as every
    multiplicity is prime to p (callers check for wild ramification).
    """
    out = []
    for m, g in squarefree_decomposition(F, f).items():
        out.extend([m] * degree(g))
    return sorted(out, reverse=True)
