"""Coefficient fields: Q, F_p and number fields Q(alpha) in power basis.

Every field object exposes the same small surface (``zero``, ``one``,
``coerce``, ``is_zero``, ``inv``, ``characteristic``) so that the generic
polynomial routines in :mod:`belyi.algebra.poly` can run over any of them.
Elements are plain Python values: ``Fraction`` for Q, ``int`` in range(p)
for F_p and :class:`FieldElement` for number fields.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from . import gfpoly


class RationalField:
    characteristic = 0
    degree = 1

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        return Fraction(x)

    def is_zero(self, x):
        return x == 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def to_complex(self, a, embedding=None):
        return complex(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField:
    degree = 1

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} is not {self.p}-integral")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def is_zero(self, x):
        return x % self.p == 0

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"GF({self.p})"


# ------------------------------------------------------------- number fields


def _qpoly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _qpoly_mul(a, b):
    if not a or not b:
        return []
    r = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return _qpoly_trim(r)


def _qpoly_divmod(a, b):
    r = [Fraction(c) for c in a]
    nb = len(b)
    if len(r) < nb:
        return [], _qpoly_trim(r)
    q = [Fraction(0)] * (len(r) - nb + 1)
    lc = Fraction(b[-1])
    for i in range(len(r) - nb, -1, -1):
        c = r[i + nb - 1] / lc
        if c:
            q[i] = c
            for j in range(nb):
                r[i + j] -= c * b[j]
    return _qpoly_trim(q), _qpoly_trim(r[:nb - 1])


class NumberField:
    """Q(alpha) with alpha a root of a monic irreducible integer polynomial.

    ``min_poly`` holds the integer coefficients, constant term first.
    Irreducibility is certified at construction for degree <= 16 (see
    :func:`certify_irreducible`); larger degrees are accepted unchecked.
    """

    characteristic = 0
    MAX_CHECKED_DEGREE = 16

    def __init__(self, min_poly, check=True, name="alpha"):
        mp = [int(c) for c in min_poly]
        while mp and mp[-1] == 0:
            mp.pop()
        if len(mp) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        if mp[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        self.min_poly = tuple(mp)
        self.degree = len(mp) - 1
        self.name = name
        if check and 1 < self.degree <= self.MAX_CHECKED_DEGREE and not certify_irreducible(mp):
            raise ValueError(f"minimal polynomial {mp} is reducible over Q")

    @property
    def zero(self):
        return FieldElement(self, [0] * self.degree)

    @property
    def one(self):
        return FieldElement(self, [1] + [0] * (self.degree - 1))

    @property
    def gen(self):
        if self.degree == 1:
            return FieldElement(self, [-self.min_poly[0]])
        return FieldElement(self, [0, 1] + [0] * (self.degree - 2))

    def __call__(self, coords):
        return FieldElement(self, coords)

    def coerce(self, x):
        if isinstance(x, FieldElement):
            if x.field != self:
                raise ValueError("element of a different number field")
            return x
        return FieldElement(self, [x] + [0] * (self.degree - 1))

    def is_zero(self, x):
        return x.is_zero()

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return a.inverse()

    def reduce_poly(self, coeffs):
        """Reduce a rational polynomial in alpha modulo the minimal polynomial."""
        _, r = _qpoly_divmod([Fraction(c) for c in coeffs], self.min_poly)
        return r

    @cached_property
    def complex_roots(self):
        import numpy as np

        rts = np.roots(list(reversed(self.min_poly)))
        return sorted((complex(z) for z in rts), key=lambda z: (abs(z.imag) > 1e-9, z.real, z.imag))

    def to_complex(self, a, embedding=0):
        """Image of ``a`` under the embedding alpha -> complex_roots[embedding]."""
        z = self.complex_roots[embedding]
        r = 0j
        for c in reversed(a.coords):
            r = r * z + float(c)
        return r

    def __eq__(self, other):
        return isinstance(other, NumberField) and other.min_poly == self.min_poly

    def __hash__(self):
        return hash(("K", self.min_poly))

    def __repr__(self):
        return f"NumberField({list(self.min_poly)})"


class FieldElement:
    """Element of a :class:`NumberField` as power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        cs = [Fraction(c) for c in coords]
        if len(cs) > field.degree:
            cs = field.reduce_poly(cs)
        cs = cs + [Fraction(0)] * (field.degree - len(cs))
        self.field = field
        self.coords = tuple(cs)

    def _lift(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("mixed number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return NotImplemented

    def is_zero(self):
        return not any(self.coords)

    def is_rational(self):
        return not any(self.coords[1:])

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, [a - b for a, b in zip(self.coords, o.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.reduce_poly(_qpoly_mul(list(self.coords), list(o.coords))))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid on (element, min_poly) over Q
        r0, r1 = [Fraction(c) for c in self.field.min_poly], _qpoly_trim(list(self.coords))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            qs = _qpoly_mul(q, s1)
            n = max(len(s0), len(qs))
            s0, s1 = s1, _qpoly_trim([(s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0) for i in range(n)])
        c = r1[0]
        return FieldElement(self.field, [x / c for x in s1])

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return isinstance(other, FieldElement) and other.field == self.field and other.coords == self.coords

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                terms.append(f"{c}" if i == 0 else f"({c})*{self.field.name}^{i}")
        return " + ".join(terms) or "0"


def _subset_sums(degrees):
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _small_primes(count, start=3):
    out = []
    n = start
    while len(out) < count:
        if all(n % d for d in range(2, int(n ** 0.5) + 1)):
            out.append(n)
        n += 1
    return out


def certify_irreducible(min_poly, primes=60):
    """Certify that a monic integer polynomial is irreducible over Q.

    Intersects the possible degrees of a rational factor over the mod-p
    factorization patterns of up to ``primes`` unramified primes. If that
    is inconclusive (e.g. x^4 + 1, reducible modulo every prime) the exact
    factorization over Z from sympy decides.
    """
    n = len(min_poly) - 1
    if n <= 1:
        return True
    possible = set(range(1, n))
    for p in _small_primes(primes, start=2):
        f = gfpoly.normalize(list(min_poly), p)
        if gfpoly.degree(f) != n or not gfpoly.is_squarefree(f, p):
            continue
        possible &= _subset_sums(gfpoly.factor_degrees(f, p))
        if not possible:
            return True
    from sympy import Poly, symbols

    x = symbols("x")
    _, facs = Poly(list(reversed(min_poly)), x).factor_list()
    return len(facs) == 1 and facs[0][1] == 1
