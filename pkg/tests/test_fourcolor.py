import itertools
import json
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs
from blg import fourcolor as fc
from blg.errors import InvalidArgument
from blg.fourcolor import (
    FourColorConfig,
    cayley_s4,
    colorability,
    coset_coloring,
    hom_exists,
    is_homomorphism,
    is_proper_coloring,
    k4_in_g,
    verify_theorem,
)
from blg.graph import Graph, complete_graph, cycle_graph, petersen_graph


def brute_colorable(g, k):
    return any(all(c[u] != c[v] for u, v in g.edges) for c in itertools.product(range(k), repeat=g.n)) and not g.loops


def test_group_helpers():
    assert len(fc.S4) == 24 and len(set(fc.S4)) == 24
    p = (1, 2, 0, 3)
    assert fc.mul(p, fc.inverse(p)) == fc.IDENTITY
    assert fc.cycle_type(p) == (3, 1) and fc.order(p) == 3
    assert sorted(fc.order(q) for q in fc.S4).count(2) == 9


def test_connection_sets():
    h = fc.connection_set("H").connection
    g = fc.connection_set("G").connection
    assert len(h) == len(g) == 9
    # both hold the three double transpositions; H adds transpositions, G adds 4-cycles
    assert {p for p in h if fc.cycle_type(p) == (2, 2)} == {p for p in g if fc.cycle_type(p) == (2, 2)}
    with pytest.raises(InvalidArgument):
        fc.connection_set("X")
    with pytest.raises(InvalidArgument):
        fc.CayleySpec("bad", frozenset({fc.IDENTITY}))
    with pytest.raises(InvalidArgument):
        fc.CayleySpec("bad", frozenset({(1, 2, 0, 3)}))


@pytest.mark.parametrize("which", ["G", "H"])
def test_cayley_shape(which):
    g = cayley_s4(which)
    assert g.n == 24 and {g.degree(v) for v in range(24)} == {9} and not g.loops


def test_G_four_colouring():
    g = cayley_s4("G")
    cos = coset_coloring()
    assert is_proper_coloring(g, cos) and sorted(set(cos)) == [0, 1, 2, 3]
    assert all(cos.count(c) == 6 for c in range(4))
    assert colorability(g, 4) is not None
    assert colorability(g, 3) is None  # it holds a K4


def test_H_chromatic_number_five():
    h = cayley_s4("H")
    assert colorability(h, 4) is None
    col = colorability(h, 5)
    assert col is not None and is_proper_coloring(h, col)


def test_H_fractional_chromatic_number():
    # vertex-transitive, so the fractional chromatic number is n / alpha
    h = cayley_s4("H")
    comp = nx.complement(nx.Graph(list(h.edges)))
    alpha = max(len(c) for c in nx.find_cliques(comp))
    assert Fraction(24, alpha) == Fraction(24, 5)


def test_hom_witnesses():
    g, h, k4 = cayley_s4("G"), cayley_s4("H"), complete_graph(4)
    assert is_homomorphism(k4, g, k4_in_g())
    assert hom_exists(k4, g) is not None
    assert hom_exists(h, k4) is None
    assert hom_exists(h, h) is not None
    assert hom_exists(k4, h) is not None
    assert hom_exists(cycle_graph(5), h) is not None


@given(graphs(max_n=7, loops=False))
@settings(max_examples=60)
def test_colorability_matches_brute_force(g):
    for k in (1, 2, 3):
        col = colorability(g, k)
        assert (col is not None) == brute_colorable(g, k)
        if col is not None:
            assert is_proper_coloring(g, col)


def test_colorability_edge_cases():
    assert colorability(Graph.from_pairs(2, [(0, 0)]), 3) is None
    assert colorability(Graph(0), 0) == []
    assert colorability(petersen_graph(), 3) is not None
    assert colorability(petersen_graph(), 2) is None
    with pytest.raises(InvalidArgument):
        colorability(complete_graph(2), 9)


def test_verify_theorem_default(tmp_path):
    path = tmp_path / "report.json"
    rep = verify_theorem(FourColorConfig(size=5), report_path=path)
    assert rep.passed, rep.failing()
    data = json.loads(path.read_text())
    assert data["passed"] and len(data["checks"]) == len(rep.checks) == 13
