import random

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.combinatorics import Permutation as SymPerm
from sympy.combinatorics import PermutationGroup

from belyi.perm import (
    CycleType,
    NotTransitiveError,
    Permutation,
    PermutationTriple,
    TripleConsistencyError,
    TripleParseError,
    cycle_type,
    genus,
    group_order,
    is_primitive,
    is_transitive,
    parse_triple,
    stabilizer_orbit_sizes,
)


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(lambda p: Permutation(tuple(p)))


def sympy_order(gens):
    # independent oracle: sympy's Schreier-Sims on 0-based arrays
    return PermutationGroup([SymPerm([i - 1 for i in g.images]) for g in gens]).order()


def test_right_action():
    x = Permutation.from_cycles(3, (1, 2))
    y = Permutation.from_cycles(3, (2, 3))
    # x first, then y: 1 -> 2 -> 3
    assert (x * y)(1) == 3


def test_parse_degree3_z_from_convention():
    t = parse_triple("degree: 3\nx: 2 1 3\ny: 1 3 2\nz: 2 3 1\n")
    assert [str(c) for c in t.cycle_types()] == ["2.1", "2.1", "3"]


def test_parse_rejects_inconsistent_z():
    with pytest.raises(TripleConsistencyError):
        parse_triple("degree: 3\nx: 2 1 3\ny: 1 3 2\nz: 3 1 2\n")


def test_parse_default_z():
    t = parse_triple("degree: 3\nx: 2 1 3\ny: 1 3 2\n")
    assert t.z.images == (2, 3, 1)


@pytest.mark.parametrize(
    "text",
    ["x: 1\ny: 1\n", "degree: 2\nx: 1 1\ny: 1 2\n", "degree: 2\nx: 1\ny: 1 2\n", "degree: 2\nw: 1 2\n", "degree: 2\nx: a b\ny: 1 2\n"],
)
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_triple(text)


def test_parse_error_types():
    with pytest.raises(TripleParseError):
        parse_triple("degree: 0\nx:\ny:\n")


def test_cycle_type_parse_roundtrip():
    c = CycleType.parse("2^128.1^10")
    assert c.degree == 266 and c.count == 138
    assert CycleType.parse(str(c)) == c


def test_genus_and_primitivity_s3():
    t = parse_triple("degree: 3\nx: 2 1 3\ny: 1 3 2\n")
    assert genus(t) == 0
    assert is_transitive(t) and is_primitive([t.x, t.y])
    assert group_order([t.x, t.y]) == 6


def test_imprimitive_dihedral():
    # D4 on the square's corners keeps {1,3},{2,4} together
    r = Permutation.from_cycles(4, (1, 2, 3, 4))
    s = Permutation.from_cycles(4, (2, 4))
    assert not is_primitive([r, s])
    assert group_order([r, s]) == 8


def test_not_transitive():
    t = PermutationTriple.from_xy(Permutation.from_cycles(4, (1, 2)), Permutation.from_cycles(4, (3, 4)))
    assert not is_transitive(t)
    with pytest.raises(NotTransitiveError):
        genus(t)


def test_m11_order():
    # <(1..11), (3 7 11 8)(4 10 5 6)>; order frozen from the sympy oracle
    a = Permutation(tuple(list(range(2, 12)) + [1]))
    b = Permutation.from_cycles(11, (3, 7, 11, 8), (4, 10, 5, 6))
    assert sympy_order([a, b]) == 7920
    assert group_order([a, b]) == 7920


@given(st.integers(2, 9).flatmap(lambda n: st.tuples(perms(n), perms(n), perms(n))))
def test_group_order_matches_oracle(gs):
    assert group_order(list(gs[:2])) == sympy_order(list(gs[:2]))
    x, y, c = gs
    t = PermutationTriple.from_xy(x, y)
    assert t.conjugate(c).cycle_types() == t.cycle_types()
    assert (t.x * t.y * t.z).is_identity()


@given(st.integers(1, 12).flatmap(perms))
def test_power_and_order(p):
    assert (p ** p.order()).is_identity()
    assert cycle_type(p).degree == p.degree
    assert (p * p.inverse()).is_identity()


def test_stabilizer_orbits_s4():
    a = Permutation.from_cycles(4, (1, 2, 3, 4))
    b = Permutation.from_cycles(4, (1, 2))
    assert stabilizer_orbit_sizes([a, b]) == [3]


def test_riemann_hurwitz_random_genus_nonnegative():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(2, 10)
        x = Permutation(tuple(rng.sample(range(1, n + 1), n)))
        y = Permutation(tuple(rng.sample(range(1, n + 1), n)))
        t = PermutationTriple.from_xy(x, y)
        if is_transitive(t):
            assert genus(t) >= 0
