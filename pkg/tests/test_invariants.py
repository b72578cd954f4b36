from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codegree.constructors import build
from codegree.dixon import CharRow, character_table
from codegree.errors import NonIntegral, NotNormal, RangeError
from codegree.invariants import (
    cod,
    codegree_report,
    direct_product_law,
    fcod_frobenius_is_one,
    normal_subgroup_lattice,
    sc_cyclic,
    sc_dihedral_2n,
    sc_frobenius_pq,
    sc_quotient,
    subgroup_order,
)


def test_cod_examples():
    t = character_table(build("A5"))
    assert cod(t, 0) == 1
    assert cod(t, t.degrees.index(5)) == 12
    s3 = character_table(build("S3"))
    assert cod(s3, 1) == 2


def test_cod_tripwire():
    t = character_table(build("S3"))
    t.chars = t.chars[:2] + (CharRow(4, frozenset({0}), 1, t.chars[2].modp),)
    with pytest.raises(NonIntegral):
        cod(t, 2)


@pytest.mark.parametrize("spec, sc, fcod", [
    ("A5", 68, Fraction(17, 15)),
    ("A6", 311, Fraction(311, 360)),
    ("C2 x C2", 7, Fraction(7, 4)),
    ("S5", 131, Fraction(131, 120)),
    ("A4:C4", 68, Fraction(68, 48)),
    ("PSL2(7)", 186, Fraction(186, 168)),
    ("Heis(3)", 43, Fraction(43, 27)),
])
def test_reports(spec, sc, fcod):
    r = codegree_report(spec)
    assert (r.sc, r.fcod) == (sc, fcod)
    assert r.acod == Fraction(sc, len(r.entries))
    assert r.cods.count(1) == 1 and min(r.cods) == 1


def test_a5_report_rows():
    r = codegree_report("A5")
    assert sorted(r.cods) == [1, 12, 15, 20, 20]
    assert r.to_dict()["fcod"] == {"num": 17, "den": 15}


def test_lattices():
    assert [subgroup_order(t, N) for t in [character_table(build("A5"))]
            for N in normal_subgroup_lattice(t)] == [1, 60]
    c6 = character_table(build("C6"))
    assert [subgroup_order(c6, N) for N in normal_subgroup_lattice(c6)] == [1, 2, 3, 6]
    s3 = character_table(build("S3"))
    assert [subgroup_order(s3, N) for N in normal_subgroup_lattice(s3)] == [1, 3, 6]
    s4 = character_table(build("S4"))
    assert [subgroup_order(s4, N) for N in normal_subgroup_lattice(s4)] == [1, 4, 12, 24]


def test_sc_quotient():
    t = character_table(build("S3"))
    lat = normal_subgroup_lattice(t)
    assert sc_quotient(t, lat[0]) == 6
    assert sc_quotient(t, lat[1]) == 3
    assert sc_quotient(t, lat[-1]) == 1
    with pytest.raises(NotNormal):
        sc_quotient(t, {1})


def test_closed_forms():
    assert sc_cyclic(1) == 1 and sc_cyclic(4) == 11 and sc_cyclic(7) == 43
    assert [sc_dihedral_2n(n) for n in (3, 4, 5)] == [11, 27, 91]
    with pytest.raises(RangeError):
        sc_dihedral_2n(2)
    assert sc_frobenius_pq(3, 7) == 21 and fcod_frobenius_is_one(3, 7)
    assert fcod_frobenius_is_one(13, 157)
    assert sc_frobenius_pq(5, 11) == 43 and not fcod_frobenius_is_one(5, 11)
    with pytest.raises(RangeError):
        sc_frobenius_pq(5, 13)
    with pytest.raises(RangeError):
        sc_cyclic(0)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 60))
def test_cyclic_closed_form_matches_engine(n):
    assert sc_cyclic(n) == codegree_report(f"C{n}", class_limit=None).sc


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_dihedral_closed_form_matches_engine(n):
    assert codegree_report(f"D{2 ** n}", class_limit=None).sc == sc_dihedral_2n(n)


def test_product_law_examples():
    law = direct_product_law("C2", "C2")
    assert (law.sc_a, law.sc_b, law.sc_product) == (3, 3, 7)
    assert law.bound_holds and not law.equality and not law.coprime
    law = direct_product_law("C3", "C5")
    assert law.coprime and law.equality and law.sc_product == sc_cyclic(15) == 147


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["C2", "C3", "C4", "S3", "D8", "C5", "A4"]),
       st.sampled_from(["C2", "C3", "C4", "S3", "D8", "C5", "A4"]))
def test_product_law_property(a, b):
    law = direct_product_law(a, b, class_limit=None)
    assert law.bound_holds
    if law.coprime:
        assert law.equality


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["S3", "S4", "D8", "A4", "SL2(3)", "C7:C3", "Heis(3)", "A4:C4", "C3 x S3", "D12"]))
def test_cod_one_only_on_trivial_row(spec):
    r = codegree_report(spec)
    assert all((e.cod == 1) == (e.kernel_order == r.order) for e in r.entries)
