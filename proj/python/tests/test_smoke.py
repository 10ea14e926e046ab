from fractions import Fraction

import pytest

import pzf


def test_build_and_inspect():
    g = pzf.build_graph("cycle:4")
    assert g.order == 4
    assert g.edge_count == 4
    assert g.degree(0) == 2
    assert pzf.radius_and_center(pzf.build_graph("path:6")) == (3, [2, 3])


def test_exact_ept_values():
    assert pzf.ept_graph(pzf.build_graph("cycle:4")) == (Fraction(7, 3), 0)
    star = pzf.build_graph("star:3")
    assert pzf.ept_exact(star, [0]) == Fraction(105, 38)
    assert pzf.ept_cycle(12) == Fraction(19, 3)
    assert pzf.ept_path(6) == Fraction(11, 3)


def test_lround_and_confidence():
    p4 = pzf.build_graph("path:4")
    assert pzf.lround_probability(p4, [1], 2) == Fraction(1, 2)
    assert pzf.confidence_time(p4, [1], "0.6") == 3
    assert pzf.confidence_path(4, "0.6") == 3
    assert pzf.lround_cycle(4, 2) == Fraction(3, 4)


def test_kang_yi_counterexample():
    g = pzf.graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
    assert pzf.kang_yi_probability(g, [0]) == (3, Fraction(8, 9))
    assert pzf.kang_yi_probability(g, [0, 2]) == (1, Fraction(5, 9))


def test_deterministic_zero_forcing():
    p5 = pzf.build_graph("path:5")
    assert pzf.propagation_time(p5, [0], "zf") == 4
    assert pzf.propagation_time(p5, [2], "psd") == 2
    assert pzf.propagation_time(pzf.build_graph("path:3"), [1], "zf") is None
    assert pzf.zero_forcing_number(pzf.build_graph("complete:4"))[0] == 3


def test_monte_carlo_reproducibility():
    c8 = pzf.build_graph("cycle:8")
    a = pzf.estimate_ept(c8, [0], trials=20000, seed=5, threads=1)
    b = pzf.estimate_ept(c8, [0], trials=20000, seed=5, threads=4)
    assert a == b
    assert abs(a["mean"] - 13 / 3) <= 4 * a["std_error"]


def test_throttling():
    assert pzf.th_pzf_graph(pzf.build_graph("path:2"))["value"] == 2
    assert pzf.psd_throttle_path_cycle(8, "path") == 4
    r = pzf.th_alpha(pzf.build_graph("path:4"), "1/2")
    assert r["value"] == 3


def test_errors():
    with pytest.raises(ValueError):
        pzf.build_graph("cycle:2")
    with pytest.raises(pzf.ResourceError):
        pzf.ept_exact(pzf.build_graph("complete:40"), [0])
