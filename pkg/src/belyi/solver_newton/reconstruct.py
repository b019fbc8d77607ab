"""Exact map over Q or Q(alpha) from high-precision coefficients."""

from __future__ import annotations

from fractions import Fraction

import mpmath
import sympy

from ..algebra import poly
from ..algebra.fields import QQ, NumberField
from ..candidate import BelyiCandidate
from ..verify.ramification import ramification_profile
from .lll import best_rational, integer_relation, lll_recognize


class ReconstructionError(ValueError):
    pass


def recognize_coefficients(values, max_degree, digits):
    """AlgebraicGuess for each value; zero-like values become X."""
    from .lll import AlgebraicGuess

    out = []
    for i, v in enumerate(values):
        v = mpmath.mpmathify(v)
        if abs(v) < mpmath.mpf(10) ** (-digits * 0.8):
            out.append(AlgebraicGuess(mpmath.mpf(0), (0, 1), abs(v), 1))
            continue
        g = lll_recognize(v, max_degree, digits=digits)
        if g is None:
            raise ReconstructionError(f"coefficient {i} ({mpmath.nstr(v, 15)}) not recognized up to degree {max_degree}")
        out.append(g)
    return out


def _monic_generator(mp, value):
    """Monic integer minimal polynomial of lc*value and that scaled value."""
    n = len(mp) - 1
    lc = mp[-1]
    monic = [mp[i] * lc ** (n - 1 - i) for i in range(n)] + [1]
    return tuple(monic), value * lc


def reconstruct_over_field(num_guesses, den_guesses, K="auto", digits=60, expected=None):
    """BelyiCandidate over K whose coefficients match the guesses.

    With K = "auto" the guess of largest degree supplies a primitive element
    and every other coefficient is written in its power basis through an
    integer relation among (c, 1, beta, ..., beta^(n-1)).
    """
    guesses = list(num_guesses) + list(den_guesses)
    beta = None
    if K == "auto":
        top = max(guesses, key=lambda g: g.degree)
        if top.degree == 1:
            K = QQ
        else:
            mp, beta = _monic_generator(top.min_poly, top.value)
            K = NumberField(mp)
    coeffs = []
    with mpmath.workdps(digits + 20):
        if K is not QQ and beta is None:
            beta = _embedding_value(K, guesses, digits)
        for i, g in enumerate(guesses):
            coeffs.append(_express(K, g, beta, digits, i))
    n = len(num_guesses)
    try:
        m = BelyiCandidate(K, tuple(coeffs[:n]), tuple(coeffs[n:]))
    except ValueError as exc:
        raise ReconstructionError(str(exc)) from exc
    if not m.is_reduced():
        raise ReconstructionError("reconstructed p and q share a factor")
    if expected is not None:
        got = ramification_profile(m)
        if got != expected:
            raise ReconstructionError(f"reconstructed profile {got} differs from {expected}")
    return m


def _embedding_value(K, guesses, digits):
    """A complex root of K's minimal polynomial refined to the working precision."""
    rts = mpmath.polyroots(list(reversed(K.min_poly)), maxsteps=200, extraprec=4 * digits)
    return rts[0]


def _express(K, g, beta, digits, index):
    if g.degree == 1:
        r = g.rational()
        return r if K is QQ else K.coerce(r)
    if K is QQ:
        raise ReconstructionError(f"coefficient {index} has degree {g.degree} but K = Q")
    n = K.degree
    vals = [g.value] + [beta**k for k in range(n)]
    # any n + 1 numbers admit relations of this generic height; a membership relation is far shorter
    real = all(abs(mpmath.im(v)) <= mpmath.mpf(10) ** (-digits // 2) * max(1, abs(v)) for v in vals)
    generic = mpmath.mpf(10) ** (digits * (1 if real else 2) / (n + 1) - 1)
    for a in integer_relation(vals, digits, max_height=generic):
        if a[0] == 0:
            continue
        coords = [Fraction(-c, a[0]) for c in a[1:]]
        approx = sum(mpmath.mpf(c.numerator) / c.denominator * beta**k for k, c in enumerate(coords))
        if abs(approx - g.value) < mpmath.mpf(10) ** (-digits / 2) * max(1, abs(g.value)):
            return K(coords)
    raise ReconstructionError(f"coefficient {index} ({mpmath.nstr(g.value, 15)}) is not in the power basis within height bounds")


def rationalize(values, digits):
    """Exact rationals for numbers believed rational, via best approximation."""
    out = []
    for i, v in enumerate(values):
        fr = best_rational(v, digits)
        if fr is None:
            raise ReconstructionError(f"coefficient {i} ({mpmath.nstr(v, 15)}) is not a small-height rational")
        out.append(fr)
    return out


# ------------------------------------------------------------------ comparing maps


def same_map(m1, m2):
    """Equality of rational functions: num1*den2 == num2*den1."""
    if m1.field != m2.field:
        return False
    F = m1.field
    return poly.mul(F, list(m1.num), list(m2.den)) == poly.mul(F, list(m2.num), list(m1.den))


def compose_moebius(m, M):
    """m(mu(X)) with mu(X) = (aX + b)/(cX + d), as a BelyiCandidate."""
    F = m.field
    a, b, c, d = (F.coerce(v) for v in M)
    deg = m.degree
    top, bot = [b, a], [d, c]

    def hom(coeffs):
        acc = []
        for k, ck in enumerate(coeffs):
            term = poly.mul(F, poly.pow_(F, top, k), poly.pow_(F, bot, deg - k))
            acc = poly.add(F, acc, poly.scale(F, term, ck))
        return acc

    return BelyiCandidate(F, tuple(hom(m.num)), tuple(hom(m.den)))


def _moebius_through(P0, P1, Pinf):
    """(a, b, c, d) with mu(0) = P0, mu(1) = P1, mu(oo) = Pinf; None encodes infinity."""

    def vec(P):
        return (Fraction(1), Fraction(0)) if P is None else (Fraction(P), Fraction(1))

    v0, v1, vi = vec(P0), vec(P1), vec(Pinf)
    # lam*vi - k*v1 = -v0
    det = vi[0] * (-v1[1]) - (-v1[0]) * vi[1]
    lam = ((-v0[0]) * (-v1[1]) - (-v1[0]) * (-v0[1])) / det
    return (lam * vi[0], v0[0], lam * vi[1], v0[1])


def _rational_points(coeffs, deg, mult):
    """Rational roots of the polynomial with multiplicity ``mult``; None for X = oo."""
    X = sympy.Symbol("X")
    f = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], X, domain="QQ")
    out = [Fraction(int(r.p), int(r.q)) for r, e in sorted(f.ground_roots().items()) if e == mult]
    if deg - (len(coeffs) - 1) == mult:
        out.append(None)
    return out


def gauge_forms(m):
    """Normal forms of m over Q: rational top-multiplicity points of each fiber sent to 0, 1, oo."""
    if m.field is not QQ:
        raise NotImplementedError("gauge normal forms are implemented over Q")
    prof = ramification_profile(m)
    d = m.degree
    e0, e1, ei = (max(t.parts) for t in prof.types())
    r = list(m.r)
    forms = set()
    for P0 in _rational_points(list(m.num), d, e0):
        for P1 in _rational_points(r, d, e1):
            for Pi in _rational_points(list(m.den), d, ei):
                g = compose_moebius(m, _moebius_through(P0, P1, Pi))
                lc = g.num[-1]
                forms.add((tuple(Fraction(c) / lc for c in g.num), tuple(Fraction(c) / lc for c in g.den)))
    return forms


def equivalent_up_to_gauge(m1, m2):
    """True when some rational normal forms of m1 and m2 coincide."""
    return bool(gauge_forms(m1) & gauge_forms(m2))
