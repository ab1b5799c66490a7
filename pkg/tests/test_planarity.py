import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import graphs, members
from blg import bilabeled as bl
from blg.bilabeled import BiLabeledGraph
from blg.errors import InvalidArgument
from blg.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    petersen_graph,
    prism_graph,
)
from blg.planarity import (
    build_envelope,
    common_face,
    euler_rejects,
    in_P,
    in_P_common_face,
    is_facial_cycle,
    is_planar,
    kuratowski_kind,
    planar,
)


def test_k4_planar():
    assert is_planar(complete_graph(4)).planar


@pytest.mark.parametrize("g, kind", [(complete_graph(5), "K5"), (complete_bipartite(3, 3), "K33")])
def test_kuratowski_base_cases(g, kind):
    r = is_planar(g)
    assert not r.planar and r.kind == kind
    assert r.witness.edges == g.edges


def test_petersen_nonplanar():
    r = is_planar(petersen_graph())
    assert not r.planar and r.kind == "K33"  # Petersen has no K5 subdivision (max degree 3)
    assert r.witness.edges <= petersen_graph().edges


@given(graphs(max_n=8, loops=True))
@settings(max_examples=150)
def test_witness_is_kuratowski_subgraph(g):
    r = is_planar(g)
    if r.planar:
        return
    assert r.witness.edges <= g.edges
    assert kuratowski_kind(r.witness) in ("K5", "K33")
    assert not planar(r.witness)


@given(graphs(min_n=3, max_n=9, loops=False))
@settings(max_examples=150)
def test_euler_bound_agrees(g):
    if euler_rejects(g):
        assert not planar(g)


def test_rotation_system_covers_neighbours():
    g = prism_graph(5)
    rot = is_planar(g).rotation
    assert all(sorted(rot[v]) == sorted(g.adj[v]) for v in range(g.n))


# -- envelopes --------------------------------------------------------------------

def _bi_wheel(L):
    # hubs 0 and 1, rim 2..L+1
    rim = list(range(2, L + 2))
    pairs = [(rim[i], rim[(i + 1) % L]) for i in range(L)] + [(h, r) for h in (0, 1) for r in rim]
    return Graph.from_pairs(L + 2, pairs)


@pytest.mark.parametrize("ell,k", [(a, b) for a in range(5) for b in range(5) if a + b >= 3])
def test_envelope_of_M_is_bi_wheel(ell, k):
    env = build_envelope(bl.M(ell, k))
    assert oracles.isomorphic(env.apexed.simplify(), _bi_wheel(ell + k))


def test_envelope_degenerate_conventions():
    one = build_envelope(bl.M(1, 0))
    assert one.graph.simplify().loops == {one.cycle_vertices[0]}
    two = build_envelope(bl.M(1, 1))
    hits = [e for e, ends in two.graph.endpoints.items() if sorted(ends) == sorted(two.cycle_vertices)]
    assert len(hits) == 2
    zero = build_envelope(bl.M(0, 0))
    assert zero.apex is None and zero.graph.n == 1


def test_envelope_of_swap_is_k5_subdivision():
    env = build_envelope(bl.S())
    assert kuratowski_kind(env.apexed.simplify()) == "K5"


def test_example_envelopes_prism_and_petersen():
    k = BiLabeledGraph(cycle_graph(5), (), tuple(range(5)))
    h = BiLabeledGraph(cycle_graph(5), (0, 3, 1, 4, 2), ())
    assert oracles.isomorphic(build_envelope(k).graph.simplify(), prism_graph(5))
    assert oracles.isomorphic(build_envelope(h).graph.simplify(), petersen_graph())
    assert in_P(k) and not in_P(h)


# -- membership ------------------------------------------------------------------------

def test_membership_examples():
    assert in_P(bl.A())
    assert not in_P(bl.S())
    assert all(in_P(bl.M(a, b)) for a in range(5) for b in range(5))


@given(members(max_n=7, max_ell=3, max_k=3), st.data())
@settings(max_examples=100)
def test_closure_compose(h1, data):
    h2 = data.draw(members(max_n=7, ell=h1.k, max_k=3))
    assert in_P(bl.compose(h1, h2))


@given(members(max_n=7), members(max_n=7))
@settings(max_examples=100)
def test_closure_tensor_arity(h1, h2):
    t = bl.tensor(h1, h2)
    assert in_P(t)
    assert t.arity == (h1.ell + h2.ell, h1.k + h2.k)


@given(members(max_n=7))
@settings(max_examples=100)
def test_closure_transpose(h):
    assert in_P(bl.transpose(h))


@given(st.sampled_from([(1, 0), (0, 1), (1, 1), (2, 0), (0, 2)]), st.data())
@settings(max_examples=100)
def test_schur_closure_low_arity(arity, data):
    h1 = data.draw(members(max_n=6, ell=arity[0], k=arity[1]))
    h2 = data.draw(members(max_n=6, ell=arity[0], k=arity[1]))
    assert in_P(bl.schur(h1, h2))


@given(members(max_n=7, max_ell=4, max_k=4))
@settings(max_examples=100)
def test_membership_implies_common_face(h):
    assert common_face(h.graph, h.cyclic_tuple())


@given(st.data())
@settings(max_examples=200)
def test_low_arity_common_face_criterion(data):
    g = data.draw(graphs(min_n=1, max_n=7))
    L = data.draw(st.integers(0, 3))
    ell = data.draw(st.integers(0, L))
    c = [data.draw(st.integers(0, g.n - 1)) for _ in range(L)]
    h = BiLabeledGraph(g, tuple(c[:ell]), tuple(reversed(c[ell:])))
    assert in_P(h) == in_P_common_face(h)


def test_common_face_arity_guard():
    with pytest.raises(InvalidArgument):
        in_P_common_face(bl.M(2, 2))


# -- face queries --------------------------------------------------------------

def test_k4_triangle_is_facial():
    assert is_facial_cycle(complete_graph(4), [0, 1, 2])


def test_prism_outer_cycle_is_facial():
    assert is_facial_cycle(prism_graph(5), [0, 1, 2, 3, 4])
    # a 4-cycle through a spoke pair bounds a face too, but a cycle mixing rings twice does not
    assert is_facial_cycle(prism_graph(5), [0, 1, 6, 5])


def test_k5_minus_edge_not_on_one_face():
    g = Graph(5, complete_graph(5).edges - {(0, 1)})
    assert planar(g)
    assert not common_face(g, range(5))
    # the obstruction is certified by the apexed graph's witness
    apexed = Graph.from_pairs(6, g.pairs() + [(5, v) for v in range(5)])
    assert is_planar(apexed).kind in ("K5", "K33")


def test_facial_cycle_validation():
    with pytest.raises(InvalidArgument):
        is_facial_cycle(complete_graph(4), [0, 1])
    with pytest.raises(InvalidArgument):
        is_facial_cycle(cycle_graph(5), [0, 1, 3])
