"""Permutation triples: parsing, cycle types, genus, transitivity, primitivity, order.

Permutations act on the right and points are 1-based: ``x * y`` applies
``x`` first, then ``y``, so ``(x * y)(i) == y(x(i))``.

Triple file format::

    degree: <d>
    x: <d images>
    y: <d images>
    z: <d images>      # optional, defaults to (x*y)^-1
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path


class TripleParseError(ValueError):
    pass


class TripleConsistencyError(ValueError):
    pass


class NotTransitiveError(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError("images are not a bijection of {1..degree}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, degree):
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, degree, *cycles):
        imgs = list(range(1, degree + 1))
        for cyc in cycles:
            cyc = list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                imgs[a - 1] = b
        return cls(tuple(imgs))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self):
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = Permutation.identity(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self, c):
        """c^-1 * self * c, i.e. relabel every point i as c(i)."""
        return c.inverse() * self * c

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images, start=1))

    def cycles(self):
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles()))

    def __str__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths, stored in decreasing order."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if any(p < 1 for p in parts):
            raise ValueError("cycle lengths must be positive")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_powers(cls, powers):
        """``{7: 38}`` -> 7^38."""
        return cls(tuple(k for k, e in powers.items() for _ in range(e)))

    @classmethod
    def parse(cls, text):
        """Inverse of ``str``: '2^128.1^10' -> CycleType."""
        parts = []
        for tok in text.replace("·", ".").split("."):
            tok = tok.strip()
            if not tok:
                continue
            k, _, e = tok.partition("^")
            parts.extend([int(k)] * (int(e) if e else 1))
        return cls(tuple(parts))

    @property
    def degree(self):
        return sum(self.parts)

    @property
    def count(self):
        return len(self.parts)

    def powers(self):
        return dict(sorted(Counter(self.parts).items(), reverse=True))

    def lcm(self):
        return math.lcm(*self.parts) if self.parts else 1

    def __str__(self):
        return ".".join(f"{k}^{e}" if e > 1 else f"{k}" for k, e in self.powers().items())


@dataclass(frozen=True)
class PermutationTriple:
    x: Permutation
    y: Permutation
    z: Permutation

    def __post_init__(self):
        if not (self.x.degree == self.y.degree == self.z.degree):
            raise TripleConsistencyError("permutations have different degrees")
        if not (self.x * self.y * self.z).is_identity():
            raise TripleConsistencyError("x*y*z is not the identity")

    @classmethod
    def from_xy(cls, x, y):
        return cls(x, y, (x * y).inverse())

    @property
    def degree(self):
        return self.x.degree

    def cycle_types(self):
        return tuple(cycle_type(s) for s in (self.x, self.y, self.z))

    def conjugate(self, c):
        return PermutationTriple(self.x.conjugate(c), self.y.conjugate(c), self.z.conjugate(c))

    def to_text(self):
        lines = [f"degree: {self.degree}"]
        for name in "xyz":
            lines.append(f"{name}: " + " ".join(map(str, getattr(self, name).images)))
        return "\n".join(lines) + "\n"


def parse_triple(text: str) -> PermutationTriple:
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("degree", "x", "y", "z"):
            raise TripleParseError(f"line {lineno}: expected 'degree:', 'x:', 'y:' or 'z:'")
        if key in fields:
            raise TripleParseError(f"line {lineno}: duplicate '{key}'")
        try:
            vals = [int(t) for t in rest.split()]
        except ValueError as exc:
            raise TripleParseError(f"line {lineno}: non-integer entry") from exc
        fields[key] = (lineno, vals)
    for key in ("degree", "x", "y"):
        if key not in fields:
            raise TripleParseError(f"missing '{key}:' line")
    lineno, dv = fields["degree"]
    if len(dv) != 1 or dv[0] < 1:
        raise TripleParseError(f"line {lineno}: degree must be one positive integer")
    d = dv[0]
    perms = {}
    for key in ("x", "y", "z"):
        if key not in fields:
            continue
        lineno, vals = fields[key]
        if len(vals) != d:
            raise TripleParseError(f"line {lineno}: expected {d} images for {key}, got {len(vals)}")
        try:
            perms[key] = Permutation(tuple(vals))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {key} is not a permutation of 1..{d}") from exc
    if "z" not in perms:
        return PermutationTriple.from_xy(perms["x"], perms["y"])
    return PermutationTriple(perms["x"], perms["y"], perms["z"])


def read_triple(path) -> PermutationTriple:
    return parse_triple(Path(path).read_text(encoding="utf-8"))


def cycle_type(p: Permutation) -> CycleType:
    return CycleType(tuple(len(c) for c in p.cycles()))


def orbits(gens, degree=None):
    """Orbits of the group generated by ``gens`` on 1..degree."""
    if degree is None:
        degree = gens[0].degree
    parent = list(range(degree + 1))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for g in gens:
        for i in range(1, degree + 1):
            a, b = find(i), find(g(i))
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups = {}
    for i in range(1, degree + 1):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def is_transitive(t) -> bool:
    gens = [t.x, t.y] if isinstance(t, PermutationTriple) else list(t)
    return len(orbits(gens)) == 1


def genus_from_counts(degree, counts):
    """Riemann-Hurwitz for a connected cover of P^1 with the given cycle counts per branch point."""
    s = sum(degree - c for c in counts)
    if s % 2:
        raise ValueError("ramification total is odd; not a valid cover")
    g2 = s - 2 * degree + 2
    if g2 < 0:
        raise ValueError("negative genus; not a valid cover")
    return g2 // 2


def genus(t: PermutationTriple) -> int:
    if not is_transitive(t):
        raise NotTransitiveError("genus formula needs a transitive triple (connected cover)")
    return genus_from_counts(t.degree, [ct.count for ct in t.cycle_types()])


def minimal_block(gens, a, b, degree):
    """Finest block system in which a and b share a block, as block labels for 1..degree."""
    parent = list(range(degree + 1))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(u, v):
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[max(ru, rv)] = min(ru, rv)
        return True

    union(a, b)
    queue = [(a, b)]
    while queue:
        u, v = queue.pop()
        for g in gens:
            if union(g(u), g(v)):
                queue.append((g(u), g(v)))
    return [find(i) for i in range(1, degree + 1)]


def is_primitive(gens) -> bool:
    gens = list(gens)
    n = gens[0].degree
    if len(orbits(gens, n)) != 1:
        raise NotTransitiveError("primitivity is defined for transitive groups")
    for k in range(2, n + 1):
        if len(set(minimal_block(gens, 1, k, n))) > 1:
            return False
    return True


# --------------------------------------------------------- Schreier-Sims


def _mul(a, b):
    # 0-based image tuples; apply a then b
    return tuple(b[i] for i in a)


def _inv(a):
    r = [0] * len(a)
    for i, j in enumerate(a):
        r[j] = i
    return tuple(r)


class _Level:
    __slots__ = ("base", "gens", "transversal")

    def __init__(self, base):
        self.base = base
        self.gens = []
        self.transversal = {}


class StabilizerChain:
    """Deterministic Schreier-Sims on 0-based image tuples.

    Level i holds strong generators S_i of H_i, the stabilizer of the first
    i base points, and a transversal mapping the base point to every point
    of its H_i-orbit. ``base`` optionally prescribes the leading base points.
    """

    def __init__(self, gens, degree, base=()):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.prefix = list(base)
        self.levels = []
        for g in gens:
            h, j = self._sift(tuple(g), 0)
            if h != self.identity:
                self._insert(h, 0, j)

    def _new_level(self, g):
        i = len(self.levels)
        if i < len(self.prefix):
            b = self.prefix[i]
        else:
            b = next(k for k in range(self.degree) if g[k] != k)
        self.levels.append(_Level(b))

    def _orbit(self, lev):
        lev.transversal = {lev.base: self.identity}
        queue = [lev.base]
        while queue:
            pt = queue.pop()
            u = lev.transversal[pt]
            for s in lev.gens:
                q = s[pt]
                if q not in lev.transversal:
                    lev.transversal[q] = _mul(u, s)
                    queue.append(q)

    def _sift(self, g, start):
        for j in range(start, len(self.levels)):
            lev = self.levels[j]
            b = g[lev.base]
            if b not in lev.transversal:
                return g, j
            g = _mul(g, _inv(lev.transversal[b]))
        return g, len(self.levels)

    def _insert(self, h, first, last):
        """Add h, which fixes base points 0..last-1, to levels first..last and complete them."""
        while last >= len(self.levels):
            self._new_level(h)
        for lev in self.levels[first:last + 1]:
            lev.gens.append(h)
        for m in range(last, first - 1, -1):
            self._complete(m)

    def _complete(self, i):
        """Ensure H_{i+1} contains every Schreier generator of level i."""
        lev = self.levels[i]
        self._orbit(lev)
        for pt, u in list(lev.transversal.items()):
            for s in list(lev.gens):
                sch = _mul(_mul(u, s), _inv(lev.transversal[s[pt]]))
                if sch == self.identity:
                    continue
                h, j = self._sift(sch, i + 1)
                if h != self.identity:
                    self._insert(h, i + 1, j)

    def order(self):
        n = 1
        for lev in self.levels:
            n *= len(lev.transversal)
        return n

    def contains(self, g):
        h, _ = self._sift(tuple(g), 0)
        return h == self.identity


def _tuples(gens):
    return [tuple(i - 1 for i in g.images) for g in gens]


def group_order(gens, max_degree=1000) -> int:
    gens = list(gens)
    n = gens[0].degree
    if n > max_degree:
        raise ValueError(f"degree {n} exceeds the configured bound {max_degree}")
    return StabilizerChain(_tuples(gens), n).order()


def stabilizer_orbit_sizes(gens, point=1):
    """Orbit lengths of the stabilizer of ``point`` on the remaining points."""
    gens = list(gens)
    n = gens[0].degree
    chain = StabilizerChain(_tuples(gens), n, base=[point - 1])
    stab = [Permutation(tuple(i + 1 for i in s)) for lev in chain.levels[1:2] for s in lev.gens]
    if not stab:
        return [1] * (n - 1)
    return sorted(len(o) for o in orbits(stab, n) if point not in o)
