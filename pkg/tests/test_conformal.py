import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from belyi import fixtures
from belyi.perm import Permutation, cycle_type
from belyi.pipeline import conformal_stage
from belyi.solver_conformal.domain import coset_table, fundamental_domain, interior_angle
from belyi.solver_conformal.preimages import PreimageError, approximate_preimages
from belyi.solver_conformal.triangle import NotHyperbolicError, choose_orders, embed_triangle_group, moebius
from belyi.solver_conformal.weld import Tree, WeldingError, chordal, weld_h2
from belyi.solver_conformal.zipper import ZipperError, zipper_h1

TRIPLES_237 = ["triple_237_deg7", "triple_237_deg8", "triple_237_deg9"]


def relabel(t, seed):
    perm = list(range(1, t.degree + 1))
    random.Random(seed).shuffle(perm)
    return t.conjugate(Permutation(tuple(perm)))


# ------------------------------------------------------------------ triangle group


@pytest.mark.parametrize("abc", [(2, 3, 7), (4, 4, 4), (3, 6, 6), (4, 4, 6), (2, 3, 14), (5, 5, 5), (7, 7, 7)])
def test_relations_hold(abc):
    emb = embed_triangle_group(*abc)
    errs = emb.relation_errors()
    assert max(errs.values()) < 1e-12, errs


@pytest.mark.parametrize("abc", [(2, 3, 6), (2, 2, 50), (3, 3, 3), (1, 5, 7)])
def test_not_hyperbolic(abc):
    with pytest.raises(NotHyperbolicError):
        embed_triangle_group(*abc)


def test_kite_angles():
    # corners i, P1, mu*i, gamma carry angles 2pi/a, pi/c, 2pi/b, pi/c
    emb = embed_triangle_group(2, 3, 7)
    c = emb.kite
    angles = [interior_angle(c[k - 1], c[k], c[(k + 1) % 4]) for k in range(4)]
    want = [2 * math.pi / 2, math.pi / 7, 2 * math.pi / 3, math.pi / 7]
    assert np.allclose(angles, want, atol=1e-12)
    # Gauss-Bonnet for a quadrilateral
    assert abs((2 * math.pi - sum(angles)) - emb.kite_area()) < 1e-12


def test_generators_fix_their_centres():
    emb = embed_triangle_group(2, 3, 7)
    assert abs(complex(moebius(emb.gen_a, 1j)) - 1j) < 1e-14
    assert abs(complex(moebius(emb.gen_b @ emb.gen_a, emb.gamma)) - emb.gamma) > 1e-3  # ba does not fix gamma
    assert abs(complex(moebius(emb.gen_a @ emb.gen_b, emb.gamma)) - emb.gamma) < 1e-12


@pytest.mark.parametrize(
    "name, orders, lift",
    [("triple_deg1", (4, 4, 4), 4), ("triple_deg2", (3, 6, 6), 3), ("triple_deg3", (4, 4, 6), 2), ("triple_237_deg7", (2, 3, 7), 1)],
)
def test_choose_orders(name, orders, lift):
    assert choose_orders(fixtures.triple(name)) == (orders, lift)


# ------------------------------------------------------------------ fundamental domain


@pytest.mark.parametrize("name", TRIPLES_237 + ["triple_deg1", "triple_deg2", "triple_deg3"])
def test_domain_area_and_euler(name):
    t = fixtures.triple(name)
    orders = choose_orders(t)[0]
    dom = fundamental_domain(coset_table(t), embed_triangle_group(*orders))
    assert abs(dom.area() / dom.kite_area() - t.degree) < 1e-9
    assert dom.euler_characteristic() == 1
    if min(orders) > 2:
        assert len(dom.sides) == 2 * t.degree + 2
    else:
        # angle pi at an order-2 centre merges two sides into one geodesic
        assert len(dom.sides) % 2 == 0 and len(dom.sides) <= 2 * t.degree + 2
    pairing = dom.pairing()
    assert all(pairing[pairing[s]] == s != pairing[s] for s in range(len(pairing)))


@settings(max_examples=15)
@given(st.sampled_from(TRIPLES_237), st.integers(0, 10**6))
def test_relabeled_237_geometry(name, seed):
    t = relabel(fixtures.triple(name), seed)
    emb, _, dom, _, w, pre = conformal_stage(t)
    assert (emb.a, emb.b, emb.c) == (2, 3, 7)
    assert abs(dom.area() / dom.kite_area() - t.degree) < 1e-9
    assert max(emb.relation_errors().values()) < 1e-12
    assert w.max_residual < 1e-6
    assert w.tree.is_tree()
    for g, fiber in (("x", "0"), ("y", "1"), ("z", "oo")):
        assert sorted(m for _, m in pre[fiber]) == sorted(cycle_type(getattr(t, g)).parts)


def test_side_elements_map_partner_sides():
    t = fixtures.triple("triple_237_deg7")
    dom = fundamental_domain(coset_table(t), embed_triangle_group(2, 3, 7))
    for s in dom.sides:
        q = dom.sides[s.partner]
        # the element glues the partner side onto s with reversed orientation
        img = moebius(s.element, np.array([q.start, q.end]))
        assert abs(img[0] - s.end) < 1e-9 and abs(img[1] - s.start) < 1e-9


# ------------------------------------------------------------------ zipper


def half_disk(n=60):
    top = [np.exp(1j * math.pi * k / n) for k in range(n)]
    base = [-1 + 2 * k / n for k in range(n)]
    return np.array(top + base, dtype=complex)


def test_zipper_half_disk_round_trip():
    P = half_disk()
    zm = zipper_h1(P, 0.3j + 0.1)
    assert np.abs(zm.boundary.imag).max() == 0
    rng = np.random.default_rng(3)
    r = 0.9 * np.sqrt(rng.random(40))
    th = math.pi * rng.random(40)
    z = r * np.exp(1j * th)
    w = zm.forward(z)
    assert (w.imag > 0).all()
    assert np.abs(zm.inverse(w) - z).max() < 1e-10


def test_zipper_boundary_to_real_line():
    P = half_disk()
    zm = zipper_h1(P, 0.5j)
    mids = (P + np.roll(P, -1)) / 2
    # chord midpoints lie just inside the polygon; their images hug the real line
    w = zm.forward(0.999 * mids[5:50])
    assert np.abs(w.imag).max() < 0.05 * (1 + np.abs(w).max())


def test_zipper_marked_points():
    P = half_disk()
    n = len(P)
    zm = zipper_h1(P, 0.5j, marked=(0, n // 3, 2 * n // 3))
    b = zm.boundary
    assert abs(b[0]) < 1e-9 and abs(b[n // 3] - 1) < 1e-9 and not np.isfinite(b[2 * n // 3])


def _symmetry_defect(n):
    top = [np.exp(1j * math.pi * k / n) for k in range(n + 1)]
    base = [-1 + 2 * k / n for k in range(1, n)]
    P = np.array(top + base, dtype=complex)
    zm = zipper_h1(P, 0.5j, marked=(n + n // 2, 0, n // 2))
    w = zm.forward(np.array([0.5j, 0.2 + 0.4j, -0.2 + 0.4j]))
    return max(abs(zm.boundary[n] + 1), abs(w[0].real), abs(w[1] + np.conj(w[2])))


def test_zipper_symmetry():
    # the polygon is symmetric under z -> -conj(z); with 0 -> 0, 1 -> 1, i -> oo the
    # exact map commutes with it, the zipper up to its interpolation error
    coarse, fine = _symmetry_defect(40), _symmetry_defect(160)
    assert coarse < 1e-4
    assert fine < coarse / 4


def test_zipper_errors():
    P = half_disk()
    with pytest.raises(ZipperError):
        zipper_h1(P[::-1], 0.5j)
    bow = np.array([0, 1, 1j, 1 + 1j], dtype=complex)
    with pytest.raises(ZipperError):
        zipper_h1(bow, 0.5 + 0.5j)


# ------------------------------------------------------------------ welding


def test_weld_degree_one_is_an_arc():
    _, _, _, _, w, _ = conformal_stage(fixtures.triple("triple_deg1"))
    assert w.tree.is_tree()
    degrees = np.bincount(np.ravel(w.tree.edges), minlength=len(w.tree.vertices))
    assert sorted(degrees) == [1, 1, 2]  # a path: one arc through the oo-vertex
    assert w.max_residual < 1e-12


def test_weld_degree_two():
    _, _, _, _, w, pre = conformal_stage(fixtures.triple("triple_deg2"))
    assert w.max_residual < 1e-6
    assert len(w.tree.edges) == 3 and w.tree.is_tree()
    # every tree vertex is one of the labeled preimages
    pts = [np.inf if z is None else z for lst in pre.values() for z, _ in lst]
    for v in w.tree.vertices:
        assert min(float(chordal(v, z)) for z in pts) < 1e-9


def test_weld_crossing_pairs():
    x = np.linspace(-3, 3, 4 * 8)
    with pytest.raises(WeldingError, match="gluing not genus 0"):
        weld_h2(x, 8, [2, 3, 0, 1])


def test_weld_bad_pairing():
    x = np.linspace(-3, 3, 4 * 8)
    with pytest.raises(WeldingError, match="involution"):
        weld_h2(x, 8, [1, 2, 3, 0])


def test_tree_check():
    assert Tree([0, 1, 2], [(0, 1), (1, 2)]).is_tree()
    assert not Tree([0, 1, 2], [(0, 1), (0, 1)]).is_tree()
    assert not Tree([0, 1, 2, 3], [(0, 1), (1, 2)]).is_tree()


def test_chordal():
    assert float(chordal(np.inf, np.inf)) == 0
    assert abs(float(chordal(0, np.inf)) - 1) < 1e-15
    assert abs(float(chordal(1, -1)) - 1) < 1e-15


# ------------------------------------------------------------------ preimages


def test_preimages_degree_three():
    _, _, _, _, _, pre = conformal_stage(fixtures.triple("triple_deg3"))
    assert sorted(m for _, m in pre["0"]) == [1, 2]
    assert sorted(m for _, m in pre["1"]) == [1, 2]
    assert [m for _, m in pre["oo"]] == [3]


def test_preimages_multiplicity_mismatch():
    t = fixtures.triple("triple_deg3")
    _, _, dom, _, w, _ = conformal_stage(t)
    ct = coset_table(t)
    images = {key: complex(k) for k, key in enumerate(sorted(dom.corner_class))}
    # collapse the corner classes onto a single class per fiber
    broken = {key: (g, 0) for key, (g, _) in dom.corner_class.items()}
    with pytest.raises(PreimageError):
        approximate_preimages(images, broken, ct)
