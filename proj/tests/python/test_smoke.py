import pytest

import gkgraph


def test_table_rows():
    assert gkgraph.order("S4(31)") == "2^12*3^2*5^2*13*31^4*37"
    assert gkgraph.spectrum("U3(27)") == [84, 703, 728]
    assert gkgraph.spectrum("G2(11)") == [110, 111, 120, 132, 133]
    assert gkgraph.order_value("A5") == 60


def test_graph():
    g = gkgraph.graph("U3(27)")
    assert [19, 37] in g["edges"]
    assert g["degrees"] == [3, 2, 3, 2, 1, 1]
    assert g["s"] == 2
    assert "19 -- 37;" in gkgraph.dot("U3(27)")


def test_enumeration():
    groups = gkgraph.enumerate_s_p(37)
    assert len(groups) == 13
    assert groups == gkgraph.reference_s37()
    assert gkgraph.enumerate_s_p(5) == ["A5", "A6", "U4(2)"]


def test_pattern_family():
    fam = gkgraph.graphs_with_pattern([2, 3, 5], [1, 2, 1])
    assert fam == [[(2, 3), (3, 5)]]
    assert gkgraph.graphs_with_pattern([2, 3, 5], [1, 1, 1]) == []


def test_verify():
    r = gkgraph.verify("S4(31)")
    assert r["verdict"] == "verified"
    assert r["alternatives"]["count"] == 12
    assert r["family"]["size"] == 13


def test_table1_text():
    lines = gkgraph.table1().splitlines()
    assert len(lines) == 5
    assert lines[1].startswith("S4(31) | ")


def test_errors():
    assert gkgraph.canonical("L2(4)") == "A5"
    with pytest.raises(gkgraph.GkError):
        gkgraph.spectrum("L2(6)")
    with pytest.raises(ValueError):
        gkgraph.verify("L2(37)")
