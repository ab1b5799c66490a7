import random

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from blg.canon import automorphisms
from blg.errors import InvalidArgument, ResourceLimit
from blg.graph import Graph, complete_graph, cycle_graph, disjoint_union, path_graph, petersen_graph
from blg.hommatrix import adjacency, identity_matrix
from blg.intertwine import (
    RefinementPartition,
    is_coherent,
    orbit_refinement,
    orbital_refinement,
    p11_generators,
    span_rank,
    wl2,
    wl2_colors,
    wl2_equivalent,
)
from blg.planarity import in_P


# -- spans -------------------------------------------------------------------------

def test_span_rank_examples():
    i5 = identity_matrix(5)
    j5 = np.ones((5, 5), dtype=object)
    assert span_rank([i5, i5]) == (1, [0])
    assert span_rank([i5, j5, adjacency(cycle_graph(5))]) == (3, [0, 1, 2])
    assert span_rank([]) == (0, [])


def test_span_rank_dependent_combination():
    a = adjacency(cycle_graph(5)).data
    combo = 2 * a + np.ones((5, 5), dtype=object)
    assert span_rank([a, np.ones((5, 5), dtype=object), combo])[0] == 2


def test_span_rank_shape_mismatch():
    with pytest.raises(InvalidArgument):
        span_rank([np.eye(2, dtype=object), np.eye(3, dtype=object)])


# -- orbits ------------------------------------------------------------------------

def test_vertex_transitive_single_class():
    for s in (1, 3, 5):
        assert len(orbit_refinement(cycle_graph(6), s)) == 1
        assert len(orbit_refinement(complete_graph(4), s)) == 1


def test_path_splits_endpoints_from_middle():
    p = orbit_refinement(path_graph(3), 2)
    assert p.classes == ((0, 2), (1,))


def test_isomorphic_components_merge():
    g = disjoint_union(complete_graph(3), complete_graph(3).relabel([2, 0, 1]))
    assert len(orbit_refinement(g, 3)) == 1


def test_size_bounds():
    with pytest.raises(InvalidArgument):
        orbit_refinement(cycle_graph(4), 0)
    with pytest.raises(ResourceLimit):
        orbital_refinement(cycle_graph(4), 8)


@given(graphs(min_n=1, max_n=6))
@settings(max_examples=30)
def test_automorphism_orbits_refine_hom_orbits(g):
    auts = automorphisms(g)
    where = orbit_refinement(g, 3).class_of()
    assert all(where[u] == where[p[u]] for p in auts for u in range(g.n))
    pw = orbital_refinement(g, 3).class_of()
    assert all(pw[(u, v)] == pw[(p[u], p[v])] for p in auts for u in range(g.n) for v in range(g.n))


def test_monotone_in_size():
    rng = random.Random(8)
    for _ in range(6):
        g = random_graph(rng, rng.randint(2, 7), p=0.4)
        prev_v = prev_p = None
        for s in range(1, 5):
            v, p = orbit_refinement(g, s), orbital_refinement(g, s)
            if prev_v is not None:
                assert v.refines(prev_v) and p.refines(prev_p)
            prev_v, prev_p = v, p


# -- orbitals --------------------------------------------------------------------

def test_c5_has_three_orbitals():
    for s in (2, 3, 4):
        assert len(orbital_refinement(cycle_graph(5), s)) == 3


def test_size_one_generators():
    gens = p11_generators(1, True)
    # I and J on one or two isolated vertices, and the looped vertex
    assert {(h.graph.n, len(h.graph.loops)) for h in gens} <= {(1, 0), (1, 1)}
    # J needs two vertices, so s=1 only separates the diagonal
    assert len(orbital_refinement(cycle_graph(5), 1)) == 2


def test_generators_are_members():
    assert all(in_P(h) for h in p11_generators(4, False))


# -- 2-WL ---------------------------------------------------------------------------

def test_wl2_c5_three_classes():
    p = wl2(cycle_graph(5))
    assert len(p) == 3 and is_coherent(p, 5)


def test_wl2_separates_two_triangles_from_hexagon():
    assert not wl2_equivalent(disjoint_union(complete_graph(3), complete_graph(3)), cycle_graph(6))


@given(graphs(min_n=1, max_n=7))
@settings(max_examples=50)
def test_wl2_stable_is_coherent_and_relabel_invariant(g):
    p = wl2(g)
    assert is_coherent(p, g.n)
    perm = list(range(g.n))[::-1]
    assert wl2_equivalent(g, g.relabel(perm))


def test_wl2_refines_adjacency():
    g = petersen_graph()
    col = wl2_colors(g)
    adj = {(i, j) for i in range(10) for j in range(10) if g.has_edge(i, j)}
    for i in range(10):
        for j in range(10):
            same = [(a, b) for a in range(10) for b in range(10) if col[a, b] == col[i, j]]
            assert all(((a, b) in adj) == ((i, j) in adj) for a, b in same)


def test_non_coherent_partition_detected():
    n = 4
    pairs = [(i, j) for i in range(n) for j in range(n)]
    # diagonal mixed with off-diagonal pairs
    p = RefinementPartition.from_labels("pairs", pairs, [int(i == j and i < 2) for i, j in pairs])
    assert not is_coherent(p, n)
    with pytest.raises(InvalidArgument):
        is_coherent(orbit_refinement(cycle_graph(4), 1), 4)


def test_partition_json():
    p = orbit_refinement(path_graph(3), 2)
    assert p.to_json() == {"ground": "vertices", "size_bound": 2, "classes": [[0, 2], [1]]}


def test_wl2_size_limit():
    with pytest.raises(ResourceLimit):
        wl2_colors(cycle_graph(65))


def test_loops_split_vertices():
    g = Graph.from_pairs(3, [(0, 1), (1, 2), (2, 0), (0, 0)])
    assert orbit_refinement(g, 1).classes == ((0,), (1, 2))
