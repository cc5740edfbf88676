import pytest

import circulant_census as cc


def test_parse_and_witnesses():
    s = cc.ConnectionSet.parse("9:3,6")
    assert s.order == 9
    assert s.members == [3, 6]
    assert cc.gw_witness(s) == (3, 3)
    assert cc.dw_witness(s) is None
    assert not cc.is_normal(s)
    assert cc.aut_order(s) == 1296


def test_sdw_example():
    rec = cc.classify("35:5,10,15,20,25,30,7")
    assert rec["is_sdw"] is True
    assert rec["dw"] == {"m": 7}
    assert rec["gw"] is None


def test_small_cycle():
    rec = cc.classify("5:1,4")
    assert rec["is_small"] and rec["is_normal"]


def test_parse_errors():
    with pytest.raises(cc.ParseError):
        cc.ConnectionSet.parse("9:0")
    with pytest.raises(ValueError):
        cc.ConnectionSet.parse("nonsense")


def test_census_nine():
    r = cc.census(9, "digraph")
    assert r["total"] == 256
    assert r["counts"]["gw"] == 16
    assert r["counts"]["nonnormal"] == 16
    assert all(c["holds"] or c["flagged_erratum"] for c in r["checks"])


def test_census_threads_match():
    a = cc.census(16, "digraph", threads=1, include_runtime=False)
    b = cc.census(16, "digraph", threads=3, include_runtime=False)
    assert a == b


def test_ceiling():
    with pytest.raises(cc.ResourceError):
        cc.census(30, "digraph")


def test_formulas():
    rows = {(r["name"], tuple(sorted(r["parameters"].items()))): r for r in cc.formulas(35)["formulas"]}
    values = {name: r["value"] for (name, _), r in rows.items()}
    assert values["gw_exact_pq"] == 2046
    assert values["sdw_exact_pq"] == 8542
    assert values["gw_digraph_bound_sum"] == 2048
    assert cc.total_graphs(10) == 32
    assert cc.gw_exact_pq(5, 7) == 2046


def test_families():
    assert len({str(s) for s in cc.gw_family(18, 3, 2)}) == 2048
    assert len(cc.dw_family(20, 5)) == 128


def test_verify():
    ok, lines = cc.verify([9], "fast")
    assert ok
    assert lines
