from __future__ import annotations

from fractions import Fraction

import pytest

from codegree.analysis import (
    ClaimResult,
    abelian_invariants,
    dual_group_rows,
    family_trend,
    herzog_spectrum_check,
    identify_example,
    is_prime_u64,
    oracle_matches,
    prime_sieve,
    run_parallel,
    scan_nonsolvable,
    search_fcod_one,
    search_prime_pairs,
    simple_pq_witness,
)
from codegree.constructors import build
from codegree.dixon import character_table
from codegree.errors import NotSimple
from codegree.invariants import cod


def _square(x):
    return x * x


def test_run_parallel_keeps_order():
    assert run_parallel(_square, range(10), threads=3) == [x * x for x in range(10)]
    assert run_parallel(_square, [], threads=4) == []


def test_claim_needs_evidence():
    with pytest.raises(ValueError):
        ClaimResult("x", "d", "pass")
    assert ClaimResult("x", "d", "skipped", reason="r").to_dict()["reason"] == "r"


def test_scan_small():
    rows, summary = scan_nonsolvable(60, threads=1)
    assert [(r.group, r.sc, r.fcod, r.solvable) for r in rows] == [("A5", 68, Fraction(17, 15), False)]
    rows, summary = scan_nonsolvable(168, threads=1)
    assert [r.group for r in rows] == ["A5", "A5 x C2", "S5", "SL2(5)", "PSL2(7)"]
    assert summary["holds"] and "catalog-restricted" in summary["caveat"]
    assert next(r.sc for r in rows if r.group == "S5") == 131


def test_fcod_search():
    res = search_fcod_one(100, threads=1)
    names = [h["group"] for h in res["hits"]]
    assert names == ["S3", "C7:[2]"]
    assert not any(h["prime_power_order"] for h in res["hits"])
    assert [h["group"] for h in search_fcod_one(20, threads=1)["hits"]] == ["S3"]


def test_prime_pairs():
    assert search_prime_pairs(13) == [(2, 3), (3, 7), (7, 43), (13, 157)]
    assert search_prime_pairs(1) == []
    assert prime_sieve(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_prime_u64(2**61 - 1) and not is_prime_u64(2**61 + 1)
    assert all(is_prime_u64(n) == (n in prime_sieve(500)) for n in range(500))


def test_identify():
    r32 = identify_example("order32")
    assert r32["identified"] == ["C8:[3,5]"]
    assert {c["group"]: c["sc"] for c in r32["candidates"]}["C8 x C2 x C2"] != 31
    r48 = identify_example("order48")
    assert "A4:C4" in r48["identified"]


def test_witnesses():
    t = character_table(build("A5"))
    assert cod(t, simple_pq_witness(t, 2, 5)) == 20
    assert cod(t, simple_pq_witness(t, 3, 5)) == 15
    t7 = character_table(build("PSL2(7)"))
    assert cod(t7, simple_pq_witness(t7, 2, 7)) == 56
    with pytest.raises(NotSimple):
        simple_pq_witness(character_table(build("S5")), 2, 5)


def test_herzog():
    r = herzog_spectrum_check("L2(7)")
    assert r.status == "pass" and {56, 24} <= set(r.evidence["cods"])
    a6 = herzog_spectrum_check("A6")
    assert a6.evidence["max_cod"] == 72


def test_herzog_missing_file(tmp_path, monkeypatch):
    monkeypatch.setenv("CODEGREE_DATA_DIR", str(tmp_path))
    r = herzog_spectrum_check("U3(3)")
    assert r.status == "skipped" and r.reason == "missing data file"


def test_family_trend():
    shrink = family_trend("shrinking", 3)
    assert shrink[1]["within_bound"] and "exact" not in shrink[2]
    grow = family_trend("A5xCp", 3)
    assert grow[0] == {"p": 7, "fcod": {"num": 731, "den": 105}, "increasing": True}
    assert all(g["increasing"] for g in grow)


def test_abelian_oracle():
    assert abelian_invariants(12) == [(2, 6), (12,)]
    assert len(abelian_invariants(16)) == 5
    assert dual_group_rows(build("C2 x C2")) == [(1, 2, 2), (1, 2, 2), (1, 2, 2), (1, 4, 1)]
    for spec in ["C1", "C6", "C2 x C4", "C3 x C3", "C2 x C2 x C2"]:
        assert oracle_matches(spec)
    with pytest.raises(ValueError):
        dual_group_rows(build("S3"))
