from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codegree.constructors import build
from codegree.errors import CapExceeded, FileError
from codegree.perm import (
    Perm,
    class_matrix,
    class_mult_coeffs,
    conjugacy_classes,
    derived_series,
    derived_subgroup,
    direct_product,
    enumerate_group,
    is_solvable,
    normal_closure,
    read_generator_file,
    trivial_group,
    write_generator_file,
)

perms5 = st.permutations(list(range(5))).map(lambda xs: Perm(tuple(xs)))


def test_parse_and_print_round_trip():
    p = Perm.parse("(1,2,3)(4,5)")
    assert p.images == (1, 2, 0, 4, 3)
    assert str(p) == "(1,2,3)(4,5)"
    assert Perm.parse("()", 3).is_identity()


def test_bad_permutation_rejected():
    with pytest.raises(ValueError):
        Perm((0, 0, 1))
    with pytest.raises(ValueError):
        Perm.parse("(1,2")


def test_product_applies_left_factor_first():
    a = Perm.parse("(1,2)", 3)
    b = Perm.parse("(2,3)", 3)
    # point 1 -> 2 under a, then 2 -> 3 under b
    assert (a * b)(0) == 2


def test_order_of_mixed_cycles():
    assert Perm.parse("(1,2,3)(4,5)").order() == 6
    assert Perm.identity(4).order() == 1


@given(perms5, perms5, perms5)
def test_group_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity()
    assert a ** a.order() == Perm.identity(5)


@pytest.mark.parametrize("spec, order", [("S4", 24), ("A5", 60), ("D10", 10), ("C1", 1), ("S5", 120)])
def test_enumeration_orders(spec, order):
    assert build(spec).order == order


def test_cap_is_enforced():
    with pytest.raises(CapExceeded):
        build("S6", cap=100)


def test_lookup_matches_index():
    G = build("S4")
    for i in range(G.order):
        assert G.index_of(G.element(i)) == i
    assert Perm.parse("(1,2)", 4) in G


@pytest.mark.parametrize("spec, count", [("S3", 3), ("S4", 5), ("A5", 5), ("S5", 7), ("D8", 5), ("C6", 6)])
def test_class_counts(spec, count):
    cls = conjugacy_classes(build(spec))
    assert cls.count == count
    assert int(cls.sizes.sum()) == build(spec).order


def test_classes_are_conjugation_closed():
    G = build("S4")
    cls = G.classes
    for i in range(G.order):
        x = G.element(i)
        for g in G.generators:
            assert cls.class_of[G.index_of(g.inverse() * x * g)] == cls.class_of[i]


def test_power_maps_and_inverse_class():
    G = build("A5")
    cls = G.classes
    for c in range(cls.count):
        rep = cls.reps[c]
        for j in range(cls.exponent):
            assert cls.power_class(c, j) == cls.class_of[G.index_of(rep ** j)]
        assert cls.inverse_class[c] == cls.class_of[G.index_of(rep.inverse())]


def test_class_multiplication_coefficients_brute_force():
    G = build("S4")
    cls = G.classes
    elems = [G.element(i) for i in range(G.order)]
    for i in range(cls.count):
        A = class_matrix(G, cls, i)
        for k in range(cls.count):
            z = cls.reps[k]
            counts = np.zeros(cls.count, dtype=np.int64)
            for x in elems:
                if cls.class_of[G.index_of(x)] == i:
                    counts[cls.class_of[G.index_of(x.inverse() * z)]] += 1
            assert (A[:, k] == counts).all()
            assert (class_mult_coeffs(G, cls, i, k) == counts).all()


def test_derived_series_and_solvability():
    assert [H.order for H in derived_series(build("S4"))] == [24, 12, 4, 1]
    assert is_solvable(build("SL2(3)"))
    assert not is_solvable(build("A5"))
    assert derived_subgroup(build("A5 x C2")).order == 60


def test_normal_closure():
    G = build("S4")
    N = normal_closure(G, [Perm.parse("(1,2)(3,4)", 4)])
    assert N.order == 4


def test_direct_product_order_and_cap():
    A, B = build("S3"), build("C4")
    assert direct_product(A, B).order == 24
    with pytest.raises(CapExceeded):
        direct_product(build("A5"), build("A5"), cap=1000)


def test_trivial_group():
    G = trivial_group()
    assert G.order == 1 and G.classes.count == 1


def test_generator_file_round_trip(tmp_path):
    gens = [Perm.parse("(1,2,3,4,5)"), Perm.parse("(1,2,3)", 5)]
    path = tmp_path / "g.gens"
    write_generator_file(path, gens, "A5 on five points")
    assert read_generator_file(path) == gens
    assert enumerate_group(read_generator_file(path)).order == 60


def test_generator_file_errors(tmp_path):
    with pytest.raises(FileError):
        read_generator_file(tmp_path / "missing.gens")
    bad = tmp_path / "bad.gens"
    bad.write_text("# nothing\n(1,2\n")
    with pytest.raises(FileError):
        read_generator_file(bad)


@settings(max_examples=25, deadline=None)
@given(st.lists(perms5, min_size=1, max_size=3))
def test_enumerated_group_is_closed(gens):
    G = enumerate_group(gens)
    assert 120 % G.order == 0
    for g in gens:
        for i in range(G.order):
            assert G.element(i) * g in G
