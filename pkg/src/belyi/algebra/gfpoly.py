"""Dense univariate polynomials over the prime field F_p.

A polynomial a_0 + a_1 X + ... + a_n X^n is the list [a_0, ..., a_n] of
integers in range(p) with a_n != 0; the zero polynomial is [].

Products and remainders of large operands go through numpy int64 kernels
when p is small enough for the intermediate sums to stay exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

# p * p * n must stay below 2**63 for the numpy kernels
_NUMPY_MAX_P = 1 << 24
_NUMPY_MIN_LEN = 24
_NUMPY_MIN_WORK = 1500


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def normalize(a, p):
    return trim([c % p for c in a])


def degree(a):
    return len(a) - 1


def is_one(a):
    return len(a) == 1 and a[0] == 1


def add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, c in enumerate(b):
        r[i] = (r[i] + c) % p
    return trim(r)


def sub(a, b, p):
    r = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        r[i] = (r[i] - c) % p
    return trim(r)


def neg(a, p):
    return [(-c) % p for c in a]


def scale(a, c, p):
    c %= p
    if c == 0:
        return []
    return [(x * c) % p for x in a]


def shift(a, k):
    """Multiply by X^k."""
    return [0] * k + list(a) if a else []


def mul(a, b, p):
    if not a or not b:
        return []
    if p < _NUMPY_MAX_P and len(a) * len(b) >= _NUMPY_MIN_WORK and p * p * min(len(a), len(b)) < (1 << 62):
        r = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        return trim((r % p).tolist())
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return trim([c % p for c in r])


def sqr(a, p):
    return mul(a, a, p)


def monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [(c * inv) % p for c in a]


def _divmod_np(a, b, p):
    na, nb = len(a), len(b)
    r = np.asarray(a, dtype=np.int64)
    bb = np.asarray(b, dtype=np.int64)
    inv = pow(int(b[-1]), -1, p)
    q = np.zeros(na - nb + 1, dtype=np.int64)
    for i in range(na - nb, -1, -1):
        c = (int(r[i + nb - 1]) * inv) % p
        if c:
            q[i] = c
            r[i:i + nb] = (r[i:i + nb] - c * bb) % p
    return trim(q.tolist()), trim(r[:nb - 1].tolist())


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    if p < _NUMPY_MAX_P and len(b) >= _NUMPY_MIN_LEN:
        return _divmod_np(a, b, p)
    r = list(a)
    nb = len(b)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - nb + 1)
    for i in range(len(a) - nb, -1, -1):
        c = (r[i + nb - 1] * inv) % p
        if c:
            q[i] = c
            for j in range(nb):
                r[i + j] = (r[i + j] - c * b[j]) % p
    return trim(q), trim(r[:nb - 1])


def rem(a, b, p):
    return divmod_(a, b, p)[1]


def quo(a, b, p):
    return divmod_(a, b, p)[0]


def exquo(a, b, p):
    q, r = divmod_(a, b, p)
    if r:
        raise ValueError("polynomial division is not exact")
    return q


def gcd(a, b, p):
    """Monic gcd (zero only if both inputs are zero)."""
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def gcdex(a, b, p):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], [], []
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def invmod(a, m, p):
    g, s, _ = gcdex(a, m, p)
    if not is_one(g):
        raise ValueError("not invertible modulo the given polynomial")
    return rem(s, m, p)


def powmod(a, e, m, p):
    result = [1]
    base = rem(a, m, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), m, p)
        e >>= 1
        if e:
            base = rem(sqr(base, p), m, p)
    return result


def pow_(a, e, p):
    result = [1]
    while e:
        if e & 1:
            result = mul(result, a, p)
        e >>= 1
        if e:
            a = sqr(a, p)
    return result


def deriv(a, p):
    return trim([(i * a[i]) % p for i in range(1, len(a))])


def evaluate(a, x, p):
    r = 0
    for c in reversed(a):
        r = (r * x + c) % p
    return r


def compose(g, h, p):
    """g(h(X))."""
    r = []
    for c in reversed(g):
        r = add(mul(r, h, p), [c % p] if c % p else [], p)
    return r


def from_roots(roots, p):
    r = [1]
    for x in roots:
        r = mul(r, [(-x) % p, 1], p)
    return r


def random_poly(deg, p, rng, monic_=False):
    a = [rng.randrange(p) for _ in range(deg)]
    a.append(1 if monic_ else rng.randrange(1, p))
    return a


# ---------------------------------------------------------------- factoring


@dataclass(frozen=True)
class FactoredPolynomial:
    """unit * prod(f**e for f, e in factors), factors monic irreducible."""

    p: int
    unit: int
    factors: tuple

    def expand(self):
        r = [self.unit % self.p] if self.unit % self.p else []
        for f, e in self.factors:
            r = mul(r, pow_(list(f), e, self.p), self.p)
        return r

    def degree_multiset(self):
        """Sorted root-multiplicity-free degree list, one entry per factor copy."""
        out = []
        for f, e in self.factors:
            out.extend([len(f) - 1] * e)
        return sorted(out, reverse=True)


def squarefree_decomposition(f, p):
    """Monic f -> list of (g, m), g squarefree pairwise coprime, f = prod g^m."""
    f = monic(f, p)
    if degree(f) < 1:
        return []
    out = []
    c = gcd(f, deriv(f, p), p)
    w = exquo(f, c, p)
    i = 1
    while degree(w) > 0:
        y = gcd(w, c, p)
        fac = exquo(w, y, p)
        if degree(fac) > 0:
            out.append((fac, i))
        w = y
        c = exquo(c, y, p)
        i += 1
    if degree(c) > 0:
        # c is a polynomial in X^p; take the p-th root coefficientwise (Frobenius is the identity on F_p)
        root = [c[i] for i in range(0, len(c), p)]
        out.extend((g, m * p) for g, m in squarefree_decomposition(root, p))
    return out


def frobenius_matrix(f, p):
    """Rows are the coefficient vectors of X^(i*p) mod f, i < deg f."""
    n = degree(f)
    xp = powmod([0, 1], p, f, p)
    rows = [[1] + [0] * (n - 1)]
    cur = [1]
    for _ in range(1, n):
        cur = rem(mul(cur, xp, p), f, p)
        rows.append(cur + [0] * (n - len(cur)))
    return rows


def _apply_frobenius(h, Q, p, n):
    """h^p mod f given Q = frobenius_matrix(f)."""
    if isinstance(Q, np.ndarray):
        v = np.zeros(n, dtype=np.int64)
        v[:len(h)] = h
        return trim(((v @ Q) % p).tolist())
    r = [0] * n
    for i, c in enumerate(h):
        if c:
            row = Q[i]
            for j in range(n):
                r[j] += c * row[j]
    return trim([x % p for x in r])


def distinct_degree(f, p):
    """Squarefree monic f -> list of (g_d, d) with g_d the product of all degree-d factors."""
    n = degree(f)
    if n <= 0:
        return []
    Q = frobenius_matrix(f, p)
    Qn = np.asarray(Q, dtype=np.int64) if p < (1 << 20) and n * p * p < (1 << 62) else Q
    out = []
    h = [0, 1]
    rest = list(f)
    d = 0
    while degree(rest) >= 2 * (d + 1):
        d += 1
        h = _apply_frobenius(h, Qn, p, n)
        h_r = rem(h, rest, p)
        g = gcd(rest, sub(h_r, [0, 1], p), p)
        if degree(g) > 0:
            out.append((g, d))
            rest = exquo(rest, g, p)
    if degree(rest) > 0:
        out.append((rest, degree(rest)))
    return out


def equal_degree(f, d, p, rng):
    """Split squarefree monic f, all of whose irreducible factors have degree d."""
    n = degree(f)
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        trim(a)
        if degree(a) < 1:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t = list(a)
            b = list(a)
            for _ in range(d - 1):
                b = rem(sqr(b, p), f, p)
                t = add(t, b, p)
            g = gcd(f, t, p)
        else:
            g = gcd(f, a, p)
            if 0 < degree(g) < n:
                pass
            else:
                b = powmod(a, (p ** d - 1) // 2, f, p)
                g = gcd(f, sub(b, [1], p), p)
        if 0 < degree(g) < n:
            return equal_degree(g, d, p, rng) + equal_degree(exquo(f, g, p), d, p, rng)


def factor(f, p, rng=None):
    """Complete factorization of a nonzero polynomial over F_p.

    ``rng`` is a ``random.Random`` used for equal-degree splitting; the result
    does not depend on it because factors are returned sorted.
    """
    f = normalize(list(f), p)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if rng is None:
        rng = random.Random(0)
    unit = f[-1]
    facs = []
    for g, m in squarefree_decomposition(f, p):
        for gd, d in distinct_degree(g, p):
            for h in equal_degree(gd, d, p, rng):
                facs.append((tuple(h), m))
    facs.sort(key=lambda fe: (len(fe[0]), fe[0][::-1], fe[1]))
    return FactoredPolynomial(p, unit, tuple(facs))


def factor_degrees(f, p, rng=None):
    """Degrees of the irreducible factors of a squarefree polynomial (with repetition)."""
    f = monic(normalize(list(f), p), p)
    out = []
    for gd, d in distinct_degree(f, p):
        out.extend([d] * (degree(gd) // d))
    return sorted(out, reverse=True)


def is_squarefree(f, p):
    f = normalize(list(f), p)
    return degree(gcd(f, deriv(f, p), p)) == 0


def roots(f, p, rng=None):
    """Distinct roots of f in F_p, sorted."""
    f = monic(normalize(list(f), p), p)
    if degree(f) < 1:
        return []
    xp = powmod([0, 1], p, f, p)
    g = gcd(f, sub(xp, [0, 1], p), p)
    if degree(g) < 1:
        return []
    rng = rng or random.Random(0)
    return sorted((-h[0]) % p for h in equal_degree(g, 1, p, rng))


def is_irreducible(f, p):
    f = monic(normalize(list(f), p), p)
    n = degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    if not is_squarefree(f, p):
        return False
    dd = distinct_degree(f, p)
    return len(dd) == 1 and dd[0][1] == n
