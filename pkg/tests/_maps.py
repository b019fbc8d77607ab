"""Random maps over F_p for property tests."""

import random

from belyi.algebra import gfpoly
from belyi.algebra.fields import PrimeField
from belyi.candidate import BelyiCandidate

SMALL_PRIMES = [p for p in range(3, 98) if all(p % q for q in range(2, int(p**0.5) + 1))]


def random_rational(deg, p, rng):
    """Reduced num/den over F_p of exact degree ``deg`` (max of the two degrees)."""
    while True:
        dn = deg if rng.random() < 0.5 else rng.randint(0, deg)
        dd = deg if dn < deg else rng.randint(0, deg)
        num = gfpoly.random_poly(dn, p, rng)
        den = gfpoly.random_poly(dd, p, rng)
        if gfpoly.degree(num) != dn or gfpoly.degree(den) != dd or not num:
            continue
        if gfpoly.degree(gfpoly.gcd(num, den, p)) == 0:
            return num, den


def compose(g, h, p):
    """g(h) for g = (A, B), h = (hn, hd), as a (num, den) pair of degree deg g * deg h."""
    A, B = g
    hn, hd = h
    a = max(len(A), len(B)) - 1
    pw_n = [[1]]
    pw_d = [[1]]
    for _ in range(a):
        pw_n.append(gfpoly.mul(pw_n[-1], hn, p))
        pw_d.append(gfpoly.mul(pw_d[-1], hd, p))

    def hom(C):
        acc = []
        for i, c in enumerate(C):
            acc = gfpoly.add(acc, gfpoly.scale(gfpoly.mul(pw_n[i], pw_d[a - i], p), c, p), p)
        return acc

    return hom(A), hom(B)


def random_composition(rng, max_degree=36, primes=SMALL_PRIMES):
    while True:
        p = rng.choice(primes)
        a = rng.randint(2, max_degree // 2)
        b = rng.randint(2, max_degree // a)
        if (a * b) % p == 0:
            continue  # wild case is out of scope for the test
        g = random_rational(a, p, rng)
        h = random_rational(b, p, rng)
        num, den = compose(g, h, p)
        if max(len(num), len(den)) - 1 != a * b or gfpoly.degree(gfpoly.gcd(num, den, p)) != 0:
            continue
        F = PrimeField(p)
        return BelyiCandidate(F, tuple(num), tuple(den)), a, b


def random_prime_degree(rng, primes=SMALL_PRIMES, degrees=(5, 7, 11, 13)):
    while True:
        p = rng.choice(primes)
        d = rng.choice(degrees)
        if d % p == 0:
            continue
        num, den = random_rational(d, p, rng)
        return BelyiCandidate(PrimeField(p), tuple(num), tuple(den))
