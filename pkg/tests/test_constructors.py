from __future__ import annotations

import pytest

from codegree.constructors import (
    build,
    data_dir,
    frobenius_multiplier,
    nonsolvable_catalog,
    order32_candidates,
    order48_candidates,
    parse_group_spec,
    resolve_data_file,
)
from codegree.errors import MissingData, ParseError, RangeError
from codegree.perm import is_solvable


@pytest.mark.parametrize("text, canonical", [
    ("C5", "C5"),
    ("  D8 ", "D8"),
    ("C8:[5,3,3]", "C8:[3,5]"),
    ("C7:C3", "C7:[2]"),
    ("A5xC2", "A5 x C2"),
    ("A5 x C2 x C3", "A5 x C2 x C3"),
    ("PSL2(7)", "PSL2(7)"),
    ("Hol(C8)", "Hol(C8)"),
    ("A4:C4", "A4:C4"),
    ("Heis(3)", "Heis(3)"),
])
def test_canonical_names(text, canonical):
    assert str(parse_group_spec(text)) == canonical


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as err:
        parse_group_spec("A5 x Q8")
    assert err.value.position == 5
    with pytest.raises(ParseError):
        parse_group_spec("")
    with pytest.raises(ParseError):
        parse_group_spec("C5 C7")


@pytest.mark.parametrize("text", ["C0", "D7", "PSL2(6)", "Heis(2)", "Heis(9)", "C8:[2]", "C7:C5", "PSL3(4)"])
def test_range_errors(text):
    with pytest.raises(RangeError):
        parse_group_spec(text)


@pytest.mark.parametrize("spec, order", [
    ("C12", 12), ("D2", 2), ("D4", 4), ("D12", 12), ("S4", 24), ("A6", 360),
    ("PSL2(4)", 60), ("PSL2(5)", 60), ("PSL2(7)", 168), ("PSL2(8)", 504), ("PSL2(9)", 360),
    ("PSL2(11)", 660), ("PSL2(16)", 4080), ("SL2(3)", 24), ("SL2(5)", 120), ("SL2(9)", 720),
    ("PSL3(3)", 5616), ("C8:[3,5]", 32), ("C7:C3", 21), ("Hol(C8)", 32), ("Heis(3)", 27),
    ("Heis(5)", 125), ("A4:C4", 48), ("A5 x C7", 420),
])
def test_orders(spec, order):
    assert build(spec).order == order


def test_group_shapes():
    assert build("D8").classes.count == 5
    assert not build("Heis(3)").is_abelian
    assert build("C3 x C5").is_abelian
    assert build("Hol(C8)").classes.count == 11
    assert frobenius_multiplier(7, 3) == 2


def test_catalog_is_sorted_and_nonsolvable():
    cat = nonsolvable_catalog(720)
    orders = [build(spec).order for _, spec in cat]
    assert orders == sorted(orders)
    assert cat[0][0] == "A5"
    assert all(not is_solvable(build(spec)) for _, spec in cat[:6])
    assert [name for name, _ in nonsolvable_catalog(60)] == ["A5"]


def test_candidate_lists():
    assert all(build(s).order == 32 for s in order32_candidates())
    assert all(build(s).order == 48 for s in order48_candidates())


def test_file_groups(tmp_path, monkeypatch):
    assert build("file:u3_3.gens").order == 6048
    (tmp_path / "a5.gens").write_text("(1,2,3,4,5)\n(1,2,3)\n")
    monkeypatch.setenv("CODEGREE_DATA_DIR", str(tmp_path))
    assert data_dir() == tmp_path
    assert build("file:a5.gens").order == 60
    with pytest.raises(MissingData):
        resolve_data_file("u3_3.gens")
