"""Recognizing high-precision numbers as algebraic numbers by lattice reduction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
import sympy
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

DELTA = Fraction(99, 100)


class PrecisionTooLow(ValueError):
    def __init__(self, message, recommended_digits):
        super().__init__(message)
        self.recommended_digits = recommended_digits


@dataclass
class AlgebraicGuess:
    value: object
    min_poly: tuple  # integer coefficients, constant term first, leading > 0
    residual: object
    height: int

    @property
    def degree(self):
        return len(self.min_poly) - 1

    def is_rational(self):
        return self.degree == 1

    def rational(self):
        a0, a1 = self.min_poly
        return Fraction(-a0, a1)


def _is_real(x, digits):
    x = mpmath.mpmathify(x)
    return abs(mpmath.im(x)) <= mpmath.mpf(10) ** (-digits // 2) * max(1, abs(x))


def _lattice_rows(powers, digits, real):
    n = len(powers)
    scale = mpmath.mpf(10) ** digits
    rows = []
    for i, z in enumerate(powers):
        row = [0] * n
        row[i] = 1
        row.append(int(mpmath.nint(scale * mpmath.re(z))))
        if not real:
            row.append(int(mpmath.nint(scale * mpmath.im(z))))
        rows.append(row)
    return rows


def reduce_rows(rows):
    """LLL-reduced basis (delta = 0.99) of the integer row lattice."""
    M = DomainMatrix([[ZZ(v) for v in r] for r in rows], (len(rows), len(rows[0])), ZZ)
    R = M.lll(delta=QQ(DELTA.numerator, DELTA.denominator))
    return [[int(v) for v in r] for r in R.to_Matrix().tolist()]


def integer_relation(values, digits, max_height=None):
    """Short integer vectors a with sum a_i values_i ~ 0, shortest first."""
    real = all(_is_real(v, digits) for v in values)
    rows = reduce_rows(_lattice_rows(values, digits, real))
    n = len(values)
    out = []
    for r in rows:
        a = r[:n]
        if any(a) and (max_height is None or max(abs(v) for v in a) < max_height):
            out.append(a)
    out.sort(key=lambda a: max(abs(v) for v in a))
    return out


def _polyval(a, x):
    acc = mpmath.mpf(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _irreducible_factor(a, x):
    """Primitive irreducible factor of sum a_i X^i with the smallest value at x."""
    X = sympy.Symbol("X")
    f = sympy.Poly(list(reversed(a)), X, domain="ZZ")
    _, facs = f.factor_list()
    best = None
    for g, _ in facs:
        c = [int(v) for v in reversed(g.all_coeffs())]
        if c[-1] < 0:
            c = [-v for v in c]
        val = abs(_polyval(c, x))
        if best is None or val < best[0]:
            best = (val, c)
    return tuple(best[1])


def lll_recognize(
    x,
    max_degree: int,
    ctx=None,
    digits: int | None = None,
    residual_exponent: float = 0.5,
    height_exponent: float = 0.1,
):
    """Minimal polynomial of ``x`` of degree <= max_degree, or None.

    ``x`` must be correct to ``digits`` decimals (default ``ctx.target_digits``).
    Degrees are tried in increasing order; the first relation whose residual
    is below 10^(-residual_exponent*digits) and whose height is below
    10^(height_exponent*digits) wins. A relation must also be markedly
    shorter than what reduction produces for a random number of the same
    size (one decimal of margin), which keeps noise from being accepted.
    """
    if digits is None:
        digits = ctx.target_digits if ctx is not None else mpmath.mp.dps
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    need = 2 * (max_degree + 1)
    if digits < need:
        raise PrecisionTooLow(
            f"precision too low: {digits} digits cannot resolve degree {max_degree}; use at least {need}",
            need,
        )
    with mpmath.workdps(digits + 20):
        x = mpmath.mpmathify(x)
        real = _is_real(x, digits)
        if real:
            x = mpmath.re(x)
        res_bound = mpmath.mpf(10) ** (-residual_exponent * digits)
        h_bound = mpmath.mpf(10) ** (height_exponent * digits)
        powers = [mpmath.mpf(1)]
        for _ in range(max_degree):
            powers.append(powers[-1] * x)
        for n in range(1, max_degree + 1):
            vals = powers[: n + 1]
            rows = reduce_rows(_lattice_rows(vals, digits, real))
            cols = n + 1
            # generic size of a reduced vector for a random number
            generic = mpmath.mpf(10) ** (digits * (1 if real else 2) / cols - 1)
            scale = max(1, abs(x)) ** n
            for r in sorted(rows, key=lambda r: max(abs(v) for v in r[:cols])):
                a = r[:cols]
                if not any(a) or a[-1] == 0:
                    continue
                h = max(abs(v) for v in a)
                if h >= h_bound or h >= generic:
                    continue
                res = abs(_polyval(a, x))
                if res >= res_bound * scale:
                    continue
                mp = _irreducible_factor(a, x)
                res = abs(_polyval(mp, x))
                return AlgebraicGuess(x, mp, res, max(abs(v) for v in mp))
    return None


def best_rational(x, digits):
    """Continued-fraction best approximation with denominator <= 10^(digits/4), or None."""
    with mpmath.workdps(digits + 20):
        x = mpmath.re(mpmath.mpmathify(x))
        man, exp = x.man_exp  # man is unsigned
        exact = Fraction(int(man)) * (Fraction(2) ** int(exp)) * (-1 if x < 0 else 1)
        fr = exact.limit_denominator(int(10 ** (digits / 4)))
        if abs(x - mpmath.mpf(fr.numerator) / fr.denominator) < mpmath.mpf(10) ** (-digits / 2):
            return fr
    return None
