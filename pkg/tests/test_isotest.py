import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import graphs, random_graph
from blg.enumeration import enumerate_graphs
from blg.errors import InvalidArgument, ResourceLimit
from blg.fourcolor import cayley_s4
from blg.graph import Graph, complete_bipartite, complete_graph, cycle_graph, disjoint_union, path_graph
from blg.isotest import (
    complement_identity,
    complement_sides,
    components_check,
    lovasz_iso,
    planar_distinguish,
)


def _check_witness(v, g, h):
    assert v.distinguished
    assert v.counts == (oracles.hom_count(v.witness, g), oracles.hom_count(v.witness, h))
    assert v.counts[0] != v.counts[1]


# -- exact test -----------------------------------------------------------------

@given(graphs(max_n=4), st.randoms(use_true_random=False))
@settings(max_examples=40)
def test_relabelled_copy_not_distinguished(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert not lovasz_iso(g, g.relabel(perm)).distinguished


def test_triangle_vs_path():
    g, h = complete_graph(3), path_graph(3)
    _check_witness(lovasz_iso(g, h), g, h)
    assert oracles.hom_count(complete_graph(3), h) == 0


def test_c4_vs_triangle_plus_point():
    g, h = cycle_graph(4), disjoint_union(complete_graph(3), Graph(1))
    v = lovasz_iso(g, h)
    _check_witness(v, g, h)
    assert v.witness.n == 2 and v.counts == (8, 6)


def test_lovasz_limit():
    with pytest.raises(ResourceLimit):
        lovasz_iso(cycle_graph(6), cycle_graph(6))


def test_verdict_json():
    v = lovasz_iso(cycle_graph(4), disjoint_union(complete_graph(3), Graph(1)))
    out = v.to_json()
    assert out["verdict"] == "distinguished" and out["counts"] == ["8", "6"]
    assert lovasz_iso(cycle_graph(3), cycle_graph(3)).to_json()["verdict"] == "indistinguishable-at-3"


# -- planar test ---------------------------------------------------------------

def test_vertex_count_witness_is_K1():
    v = planar_distinguish(cycle_graph(4), cycle_graph(5), 3)
    assert v.witness.n == 1 and not v.witness.edges


def test_edge_count_witness_is_K2():
    g, h = cycle_graph(4), path_graph(4)
    v = planar_distinguish(g, h, 3)
    assert v.witness.n == 2 and len(v.witness.edges) == 1
    _check_witness(v, g, h)


def test_cayley_pair_indistinguishable_at_5():
    g, h = cayley_s4("G"), cayley_s4("H")
    v = planar_distinguish(g, h, 5)
    assert not v.distinguished
    assert v.checked == len([k for n in range(1, 6) for k in enumerate_graphs(n, connected=True, planar=True)])


@pytest.mark.slow
def test_cayley_pair_split_by_K33():
    # dropping planarity, the first connected witness is K3,3
    v = planar_distinguish(cayley_s4("G"), cayley_s4("H"), 6, planar=False)
    assert v.distinguished and oracles.isomorphic(v.witness, complete_bipartite(3, 3))


def test_parallel_matches_serial():
    g, h = cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))
    a, b = planar_distinguish(g, h, 4), planar_distinguish(g, h, 4, jobs=2)
    assert a == b and a.distinguished


def test_size_bound_error():
    with pytest.raises(InvalidArgument):
        planar_distinguish(cycle_graph(3), cycle_graph(3), 0)


# -- components -----------------------------------------------------------------

def test_components_check():
    assert not components_check(disjoint_union(complete_graph(3), Graph(1)), cycle_graph(4))
    assert components_check(cayley_s4("G"), cayley_s4("H"))
    assert components_check(cycle_graph(5), cycle_graph(5))


# -- complement identity -------------------------------------------------------------

def test_complement_identity_examples():
    sides = complement_sides(complete_graph(2), (0, 1), complete_graph(3))
    # no loops in K3 and every pair of distinct vertices is adjacent: S1 = S4 = 0
    assert sides.holds and sides.lhs == sides.rhs == 0
    looped = Graph.from_pairs(1, [(0, 0)])
    sides = complement_sides(complete_graph(3), (0, 2), looped)
    assert sides.holds and sides.lhs == 1


def test_complement_identity_random():
    rng = random.Random(76)
    for _ in range(200):
        k = random_graph(rng, rng.randint(2, 4), p=0.5)
        if not k.edges:
            k = Graph(k.n, k.edges | {(0, 1)}, k.loops)
        x = random_graph(rng, rng.randint(1, 3), p=0.5)
        e = rng.choice(sorted(k.edges))
        assert complement_identity(k, e, x)


def test_complement_sides_partition_all_maps():
    k, x = cycle_graph(4), Graph.from_pairs(3, [(0, 1), (1, 1), (2, 2)])
    sides = complement_sides(k, (0, 1), x)
    k_minus = Graph(4, k.edges - {(0, 1)}, k.loops)
    assert sum(sides.parts.values()) == oracles.hom_count(k_minus, x)


def test_complement_identity_missing_edge():
    with pytest.raises(InvalidArgument):
        complement_identity(path_graph(3), (0, 2), complete_graph(2))
