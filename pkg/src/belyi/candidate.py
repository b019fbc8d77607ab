"""Rational maps p/q over Q, a number field or a prime field, and the map file format.

Map file (UTF-8)::

    field: <integer coefficients of min_poly, constant first>
    num:
    <n comma-separated rationals>      # one line per coefficient, degree ascending
    ...
    den:
    ...

The finite-field variant replaces the ``field:`` line by ``prime: <p>`` and
writes one integer per coefficient line. ``#`` starts a comment.

Factored variant (prime fields only), one factor per line, highest degree
first::

    prime: <p>
    num:
    <exponent> | <coefficients>
    den:
    ...
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .algebra import poly
from .algebra.fields import QQ, NumberField, PrimeField


class MapFormatError(ValueError):
    pass


class CommonRootError(ArithmeticError):
    pass


INFINITY = "oo"


@dataclass(frozen=True)
class BelyiCandidate:
    """f = num/den with coefficient lists (ascending) over ``field``."""

    field: object
    num: tuple
    den: tuple

    def __post_init__(self):
        num = tuple(poly.coerce(self.field, self.num))
        den = tuple(poly.coerce(self.field, self.den))
        if not den:
            raise ValueError("denominator must be nonzero")
        if not num and len(den) == 1:
            raise ValueError("constant map")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def polynomial(cls, field, coeffs):
        return cls(field, tuple(coeffs), (field.one,))

    @property
    def r(self):
        """num - den, so that f = 1 + r/den."""
        return tuple(poly.sub(self.field, list(self.num), list(self.den)))

    @property
    def degree(self):
        return max(len(self.num), len(self.den)) - 1

    def is_reduced(self):
        return poly.degree(poly.gcd(self.field, list(self.num), list(self.den))) == 0

    def __call__(self, x):
        return evaluate_map(self, x)

    def to_text(self):
        return dumps_map(self)


def evaluate_map(m: BelyiCandidate, x0):
    """m(x0), or ``INFINITY`` at a pole; 0/0 raises :class:`CommonRootError`."""
    F = m.field
    x0 = F.coerce(x0)
    a = poly.evaluate(F, list(m.num), x0)
    b = poly.evaluate(F, list(m.den), x0)
    if F.is_zero(b):
        if F.is_zero(a):
            raise CommonRootError("common root; candidate not reduced")
        return INFINITY
    return F.mul(a, F.inv(b))


# ------------------------------------------------------------------ map file


def _parse_rational(tok, lineno):
    try:
        return Fraction(tok.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise MapFormatError(f"line {lineno}: bad rational {tok!r}") from exc


def loads_map(text: str) -> BelyiCandidate:
    field = None
    blocks = {"num": [], "den": []}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("field:"):
            toks = line[len("field:"):].split()
            try:
                mp = [int(t) for t in toks]
            except ValueError as exc:
                raise MapFormatError(f"line {lineno}: bad min_poly") from exc
            field = QQ if len(mp) == 2 and mp == [0, 1] else NumberField(mp)
            continue
        if line.startswith("prime:"):
            try:
                field = PrimeField(int(line[len("prime:"):]))
            except ValueError as exc:
                raise MapFormatError(f"line {lineno}: {exc}") from exc
            continue
        if line in ("num:", "den:"):
            current = line[:-1]
            continue
        if current is None or field is None:
            raise MapFormatError(f"line {lineno}: coefficient outside a num:/den: block")
        if isinstance(field, PrimeField):
            try:
                blocks[current].append(int(line))
            except ValueError as exc:
                raise MapFormatError(f"line {lineno}: expected an integer") from exc
        else:
            parts = [_parse_rational(t, lineno) for t in line.split(",")]
            n = 1 if field is QQ else field.degree
            if len(parts) != n:
                raise MapFormatError(f"line {lineno}: expected {n} coordinates, got {len(parts)}")
            blocks[current].append(parts[0] if field is QQ else field(parts))
    if field is None:
        raise MapFormatError("missing field:/prime: header")
    if not blocks["den"]:
        raise MapFormatError("missing den: block")
    return BelyiCandidate(field, tuple(blocks["num"]), tuple(blocks["den"]))


def _fmt_coeff(F, c):
    if not isinstance(F, NumberField):
        return str(c)
    return ", ".join(str(x) for x in c.coords)


def dumps_map(m: BelyiCandidate) -> str:
    F = m.field
    if isinstance(F, PrimeField):
        lines = [f"prime: {F.p}"]
    elif isinstance(F, NumberField):
        lines = ["field: " + " ".join(str(c) for c in F.min_poly)]
    else:
        lines = ["field: 0 1"]
    for name, coeffs in (("num", m.num), ("den", m.den)):
        lines.append(f"{name}:")
        lines.extend(_fmt_coeff(F, c) for c in coeffs)
    return "\n".join(lines) + "\n"


def loads_factored_map(text: str) -> BelyiCandidate:
    """Map over F_p given as products of powers of factors."""
    from .algebra import gfpoly

    p, current = None, None
    polys = {"num": [1], "den": [1]}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("prime:"):
            try:
                p = PrimeField(int(line[len("prime:"):])).p
            except ValueError as exc:
                raise MapFormatError(f"line {lineno}: {exc}") from exc
            continue
        if line in ("num:", "den:"):
            current = line[:-1]
            continue
        if p is None or current is None or "|" not in line:
            raise MapFormatError(f"line {lineno}: expected '<exponent> | <coefficients>' inside a num:/den: block")
        e, coeffs = line.split("|", 1)
        try:
            f = [int(c) % p for c in coeffs.split()][::-1]
            polys[current] = gfpoly.mul(polys[current], gfpoly.pow_(f, int(e), p), p)
        except ValueError as exc:
            raise MapFormatError(f"line {lineno}: bad factor") from exc
    if p is None:
        raise MapFormatError("missing prime: header")
    return BelyiCandidate(PrimeField(p), tuple(polys["num"]), tuple(polys["den"]))


def loads_any_map(text: str) -> BelyiCandidate:
    body = [ln.split("#", 1)[0] for ln in text.splitlines()]
    if any("|" in ln for ln in body):
        return loads_factored_map(text)
    return loads_map(text)


def read_map(path) -> BelyiCandidate:
    """Read a map file in the plain or the factored format."""
    return loads_any_map(Path(path).read_text(encoding="utf-8"))


def write_map(m: BelyiCandidate, path):
    Path(path).write_text(dumps_map(m), encoding="utf-8")
