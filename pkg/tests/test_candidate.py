from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from belyi import fixtures
from belyi.algebra import QQ, PrimeField
from belyi.candidate import (
    INFINITY,
    BelyiCandidate,
    CommonRootError,
    MapFormatError,
    dumps_map,
    loads_any_map,
    loads_factored_map,
    loads_map,
)

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)


@given(st.lists(fractions, min_size=2, max_size=8), st.lists(fractions, min_size=1, max_size=4))
def test_roundtrip_q(num, den):
    if num[-1] == 0 or den[-1] == 0:
        return
    m = BelyiCandidate(QQ, tuple(num), tuple(den))
    assert loads_map(dumps_map(m)) == m


def test_roundtrip_number_field():
    K = fixtures.k_field()
    m = BelyiCandidate(K, (K([0, Fraction(1, 3)]), K.one), (K([2, 0, 0, 0, 0, 0, -1]),))
    assert loads_map(dumps_map(m)) == m


def test_evaluate():
    m = fixtures.small_map("map_deg2")  # 4X - 4X^2
    assert m(Fraction(1, 2)) == 1
    assert m(0) == 0
    pole = BelyiCandidate(QQ, (Fraction(1),), (Fraction(0), Fraction(1)))
    assert pole(0) == INFINITY
    bad = BelyiCandidate(QQ, (Fraction(0), Fraction(1)), (Fraction(0), Fraction(1)))
    with pytest.raises(CommonRootError):
        bad(0)


def test_r_is_num_minus_den():
    m = fixtures.small_map("map_deg3")
    assert m.r == (Fraction(-1), Fraction(0), Fraction(3), Fraction(-2))


@pytest.mark.parametrize(
    "text",
    ["num:\n1\nden:\n1\n", "field: 0 1\nnum:\n1/0\nden:\n1\n", "field: 0 1\nnum:\n1\n", "prime: 7\nnum:\nx\nden:\n1\n", "field: 0 1\n1\n"],
)
def test_format_errors(text):
    with pytest.raises(MapFormatError):
        loads_map(text)


def test_factored_format():
    text = "prime: 7\nnum:\n2 | 1 1\n1 | 1 0\nden:\n1 | 3\n"
    m = loads_factored_map(text)
    # (X + 1)^2 X over F_7, den 3
    assert m.num == (0, 1, 2, 1) and m.den == (3,)
    assert loads_any_map(text) == m
    with pytest.raises(MapFormatError):
        loads_factored_map("num:\n1 | 1\n")


def test_fixture_degrees_and_checksum():
    m = fixtures.appendix_map()
    assert len(m.num) - 1 == 266 and len(m.den) - 1 == 266
    assert isinstance(m.field, PrimeField) and m.field.p == 269
    assert fixtures.verify_checksum() == fixtures.sha256(fixtures.fixture_path(fixtures.APPENDIX))


def test_checksum_detects_drift(tmp_path, monkeypatch):
    src = fixtures.data_dir()
    for name in ("appendix_mod269.factors", "appendix_mod269.sha256"):
        (tmp_path / name).write_bytes((src / name).read_bytes())
    with open(tmp_path / "appendix_mod269.factors", "a") as fh:
        fh.write("# edited\n")
    monkeypatch.setattr(fixtures, "data_dir", lambda: tmp_path)
    with pytest.raises(fixtures.ChecksumError):
        fixtures.verify_checksum()


def test_resolve():
    assert fixtures.resolve("fixture:triple_deg3").name == "triple_deg3.txt"
    assert str(fixtures.resolve("some/file.txt")) == "some/file.txt"
    with pytest.raises(FileNotFoundError):
        fixtures.fixture_path("nope")
