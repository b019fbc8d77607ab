import itertools
import random
from fractions import Fraction

import pytest

from _maps import random_composition
from belyi import fixtures
from belyi.algebra import QQ, PrimeField
from belyi.algebra.reduction import PrimeIdealSpec, reduce_map_mod_prime
from belyi.candidate import BelyiCandidate
from belyi.perm import CycleType, Permutation, group_order, is_transitive, stabilizer_orbit_sizes
from belyi.verify import (
    MonodromyEvidence,
    NotReducedError,
    RamificationProfile,
    WildDecompositionError,
    WildRamificationError,
    check_belyi,
    conclude_monodromy,
    frobenius_sample,
    indecomposability_test,
    is_composition,
    numerical_monodromy,
    ramification_profile,
    twotrans_obstruction,
)


def qmap(num, den=(1,)):
    return BelyiCandidate(QQ, tuple(Fraction(c) for c in num), tuple(Fraction(c) for c in den))


def fmap(p, num, den=(1,)):
    return BelyiCandidate(PrimeField(p), tuple(num), tuple(den))


# (4X^3 - X^4)/27: profile 3.1 | 2.1^2 | 4, monodromy S4
S4_MAP = qmap([0, 0, 0, Fraction(4, 27), Fraction(-1, 27)])


# ------------------------------------------------------------------ ramification


def test_profile_quadratic():
    prof = ramification_profile(fixtures.small_map("map_deg2"))
    assert prof == RamificationProfile.parse("1^2 | 2 | 2")


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_profile_power_map(n):
    prof = ramification_profile(qmap([0] * n + [1]))
    assert (str(prof.over0), str(prof.over1), str(prof.overInf)) == (str(n), f"1^{n}", str(n))


def test_profile_counts_point_at_infinity():
    # X^2 / (X - 2): over oo the pole at 2 and the point oo, each simple
    prof = ramification_profile(qmap([0, 0, 1], [-2, 1]))
    assert prof.overInf == CycleType((1, 1))


def test_riemann_hurwitz_small_maps():
    for name in ("map_deg1", "map_deg2", "map_deg3", "map_cube"):
        prof = ramification_profile(fixtures.small_map(name))
        assert sum(prof.degree - t.count for t in prof.types()) == 2 * prof.degree - 2


def test_wild_rejected():
    with pytest.raises(WildRamificationError, match="wild ramification unsupported"):
        ramification_profile(fmap(7, [0] * 7 + [1]))


def test_not_reduced_rejected():
    with pytest.raises(NotReducedError):
        ramification_profile(qmap([0, 1, 1], [0, 1]))


def test_check_belyi():
    m = fixtures.small_map("map_deg2")
    rep = check_belyi(m, RamificationProfile.parse("1^2 | 2 | 2"))
    assert rep.passed and rep.exit_code == 0
    rep = check_belyi(qmap([0, 0, 1]), RamificationProfile.parse("1^2 | 2 | 2"))
    assert rep.status("over0") == "FAIL" and rep.exit_code == 1
    assert all(line.startswith("CHECK ") for line in rep.lines())


# ------------------------------------------------------------------ frobenius


def test_frobenius_quadratic():
    fs = frobenius_sample(fmap(7, [0, 0, 1]), 4, seed=1)
    assert {str(t) for t in fs} <= {"1^2", "2"}
    fs = frobenius_sample(reduce_map_mod_prime(fixtures.small_map("map_deg2"), PrimeIdealSpec(11, 0)), 6, seed=2)
    assert all(t.lcm() in (1, 2) for t in fs)


def test_frobenius_partial_and_deterministic():
    m = fmap(5, [0, 0, 1])
    fs = frobenius_sample(m, 10, seed=0)
    assert fs.partial and len(fs) < 10
    assert all(reason for _, reason in fs.skipped)
    a = frobenius_sample(fixtures.appendix_map(), 3, seed=9)
    b = frobenius_sample(fixtures.appendix_map(), 3, seed=9)
    assert a.t_values == b.t_values and a.types == b.types
    assert all(t.degree == 266 for t in a)


# ------------------------------------------------------------------ decomposition


def test_decompose_x4():
    r = indecomposability_test(fmap(5, [0, 0, 0, 0, 1]))
    assert not r.indecomposable
    g, h = r.certificate
    assert g.degree == 2 and h.degree == 2 and is_composition(fmap(5, [0, 0, 0, 0, 1]), g, h)


def test_decompose_recovers_inner_cubic():
    # (X^2 + 1) o (X^3 + X) over F_7
    p = 7
    h = [0, 1, 0, 1]
    from belyi.algebra import gfpoly

    f = gfpoly.add(gfpoly.mul(h, h, p), [1], p)
    r = indecomposability_test(fmap(p, f))
    assert not r.indecomposable
    g, hh = r.certificate
    assert {g.degree, hh.degree} == {2, 3}
    assert is_composition(fmap(p, f), g, hh)


def test_prime_degree_indecomposable():
    assert indecomposability_test(fmap(11, [3, 0, 1, 0, 0, 0, 0, 1])).indecomposable


def test_wild_decomposition_rejected():
    with pytest.raises(WildDecompositionError, match="additive/wild case unsupported"):
        indecomposability_test(fmap(5, [1, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1]))


def test_random_compositions_small_batch():
    rng = random.Random(11)
    for i in range(15):
        m, a, b = random_composition(rng, max_degree=16)
        r = indecomposability_test(m, seed=i)
        assert not r.indecomposable
        g, h = r.certificate
        assert g.degree * h.degree == m.degree and min(g.degree, h.degree) >= 2
        assert is_composition(m, g, h)


# ------------------------------------------------------------------ 2-transitivity


def test_twotrans_cube_mod7():
    # (t^3 - X^3)/(t - X) = X^2 + tX + t^2 = (X - 2t)(X - 4t) over F_7
    phi = twotrans_obstruction(fmap(7, [0, 0, 0, 1]), 1, samples=4)
    assert phi is not None and phi.x_degree == 1
    for t in range(1, 7):
        root = (-phi.at(t)[0] * pow(phi.at(t)[1], -1, 7)) % 7
        assert root in (2 * t % 7, 4 * t % 7)


def test_twotrans_s4_none():
    assert group_order(list((lambda t: [t.x, t.y])(numerical_monodromy(S4_MAP)))) == 24
    for p in (11, 13):
        m = reduce_map_mod_prime(S4_MAP, PrimeIdealSpec(p, 0))
        assert twotrans_obstruction(m, 2, samples=8) is None


def test_twotrans_agrees_with_stabilizer_orbits():
    # desk scale: a proper factor of degree k iff the point stabilizer has an orbit of size k
    cases = [(fixtures.small_map("map_cube"), 7), (fixtures.small_map("map_deg3"), 7), (S4_MAP, 13)]
    for m, p in cases:
        t = numerical_monodromy(m)
        orbits = stabilizer_orbit_sizes([t.x, t.y])
        phi = twotrans_obstruction(reduce_map_mod_prime(m, PrimeIdealSpec(p, 0)), m.degree - 2, samples=6)
        proper = [k for k in orbits if k < m.degree - 1]
        assert (phi is not None) == bool(proper)
        if phi is not None:
            assert phi.x_degree in proper


# ------------------------------------------------------------------ conclusion


def test_conclude_j1():
    ev = MonodromyEvidence(266, primitive=True, two_transitive_obstruction=11)
    d = conclude_monodromy(ev)
    assert d.verdict == "J1" and d.conclusive
    assert any("266" in c for c in d.chain)


def test_conclude_missing_primitivity():
    d = conclude_monodromy(MonodromyEvidence(266, primitive=None, two_transitive_obstruction=11))
    assert d.verdict == "inconclusive" and d.missing


def test_conclude_outside_rule_set():
    ev = MonodromyEvidence(5, primitive=True, sampled_frobenius_types=[CycleType((4, 1)), CycleType((5,))])
    d = conclude_monodromy(ev)
    assert d.verdict == "inconclusive"


def test_conclude_inconsistent_orders():
    ev = MonodromyEvidence(266, primitive=True, two_transitive_obstruction=11, sampled_frobenius_types=[CycleType((4,) * 66 + (2,))])
    assert not conclude_monodromy(ev).conclusive


# ------------------------------------------------------------------ numerical monodromy


def simultaneously_conjugate(s, t):
    n = s.degree
    for imgs in itertools.permutations(range(1, n + 1)):
        c = Permutation(imgs)
        if s.x.conjugate(c) == t.x and s.y.conjugate(c) == t.y:
            return True
    return False


@pytest.mark.parametrize(
    "name,types",
    [("map_cube", ("3", "1^3", "3")), ("map_deg3", ("2.1", "2.1", "3")), ("map_deg2", ("1^2", "2", "2"))],
)
def test_numerical_monodromy(name, types):
    m = fixtures.small_map(name)
    t = numerical_monodromy(m)
    assert tuple(str(c) for c in t.cycle_types()) == types
    assert (t.x * t.y * t.z).is_identity()
    assert is_transitive(t)


def test_numerical_monodromy_base_point_invariance():
    for m in (fixtures.small_map("map_deg3"), S4_MAP):
        a = numerical_monodromy(m, base_point=complex(0.5, 0.5))
        b = numerical_monodromy(m, base_point=complex(0.4, -0.6))
        assert simultaneously_conjugate(a, b)


def test_numerical_monodromy_rejects_bad_base():
    with pytest.raises(ValueError):
        numerical_monodromy(fixtures.small_map("map_deg3"), base_point=0.1)
