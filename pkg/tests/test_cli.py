import pytest

from belyi import fixtures
from belyi.algebra.fields import NumberField
from belyi.candidate import BelyiCandidate, dumps_map, read_map
from belyi.cli import main
from belyi.perm import read_triple

K_POLY = [2, 2, 2, -1, -2, 0, -1, 1]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_degree_three(capsys):
    code, out, _ = run(capsys, "analyze", "fixture:triple_deg3")
    assert code == 0
    assert "genus: 0" in out and "transitive: yes" in out and "primitive: yes" in out and "order: 6" in out


def test_analyze_degree_seven(capsys):
    code, out, _ = run(capsys, "analyze", "fixture:triple_237_deg7")
    assert code == 0
    assert "order: 168" in out  # PSL(2,7) acting on 7 points


def test_verify_appendix(capsys):
    code, out, _ = run(capsys, "verify", "fixture:appendix_mod269", "7^38 | 2^128.1^10 | 3^87.1^5")
    assert code == 0, out
    assert "FAIL" not in out


def test_verify_wrong_profile(capsys):
    code, out, _ = run(capsys, "verify", "fixture:map_deg3", "1^3 | 2.1 | 3")
    assert code == 1 and "FAIL" in out


def test_unknown_subcommand(capsys):
    code, _, err = run(capsys, "frobnicate", "x")
    assert code == 2 and "usage" in err


def test_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("degree: 3\nx: 1 1 2\ny: 1 2 3\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2 and "cannot read triple" in err


def k_map_file(tmp_path):
    K = NumberField(K_POLY)
    a = K([0, 1])
    m = BelyiCandidate(K, (K.zero, K.zero, a + 2, K.one), (K.one,))
    path = tmp_path / "kmap.txt"
    path.write_text(dumps_map(m))
    return path


def test_reduce_bad_residue(capsys, tmp_path):
    path = k_map_file(tmp_path)
    code, _, err = run(capsys, "reduce", str(path), "--prime", "5", "--root", "1")
    assert code == 2 and "invalid prime ideal" in err


def test_reduce_mod_five(capsys, tmp_path):
    path = k_map_file(tmp_path)
    out = tmp_path / "red.txt"
    code, _, _ = run(capsys, "reduce", str(path), "--prime", "5", "--out", str(out))
    assert code == 0
    red = read_map(out)
    # alpha = 3 mod (5, 2 + alpha), so alpha + 2 reduces to 0
    assert red.field.p == 5 and list(red.num) == [0, 0, 0, 1]


def test_solve_writes_map_and_geometry(capsys, tmp_path):
    out, geo = tmp_path / "m.txt", tmp_path / "g.txt"
    code, _, _ = run(capsys, "solve", "fixture:triple_deg3", "--target-digits", "60", "--out", str(out), "--dump-geometry", str(geo))
    assert code == 0
    m = read_map(out)
    assert m.degree == 3
    text = geo.read_text()
    assert text.count("\nkite ") == 3 and "tree_edge" in text and "pair" in text


def test_solve_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for path in (a, b):
        assert run(capsys, "solve", "fixture:triple_deg2", "--seed", "7", "--out", str(path))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_attest_deterministic(capsys, tmp_path):
    # X^3 over F_7: the quotient (t^3 - X^3)/(t - X) splits, so the map is not 2-transitive
    path = tmp_path / "cube7.txt"
    path.write_text("prime: 7\nnum:\n0\n0\n0\n1\nden:\n1\n")
    args = ("attest", str(path), "--seed", "3", "--samples", "6", "--frobenius", "5", "--max-factor-degree", "1")
    first, second = run(capsys, *args), run(capsys, *args)
    assert first == second
    assert "CHECK not_2_transitive: PASS" in first[1]


def test_monodromy_round_trip(capsys, tmp_path):
    out = tmp_path / "t.txt"
    code, _, _ = run(capsys, "monodromy", "fixture:map_deg3", "--out", str(out))
    assert code == 0
    t = read_triple(out)
    assert sorted(c.parts for c in t.cycle_types()) == sorted(c.parts for c in fixtures.triple("triple_deg3").cycle_types())


def test_bad_flag_values(capsys):
    assert run(capsys, "analyze", "fixture:triple_deg3", "--digits", "8")[0] == 2
    assert run(capsys, "analyze", "fixture:triple_deg3", "--threads", "0")[0] == 2
    assert run(capsys, "reduce", "fixture:map_deg3")[0] == 2  # --prime is required
