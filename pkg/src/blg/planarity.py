"""Planarity testing, enveloping cycles, and membership in the class P.

The boolean test and rotation system come from networkx's left-right
planarity implementation. Kuratowski witnesses are re-verified here by
suppressing degree-two vertices and identifying K5 or K3,3.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx

from .bilabeled import BiLabeledGraph
from .errors import InvalidArgument
from .graph import Graph, Multigraph


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    witness: Graph | None = None  # Kuratowski subgraph on the original vertex ids
    kind: str | None = None  # "K5" or "K33"
    rotation: dict[int, list[int]] | None = None  # clockwise neighbour order

    def __bool__(self) -> bool:
        return self.planar


def _to_nx(g: Graph) -> nx.Graph:
    x = nx.Graph()
    x.add_nodes_from(range(g.n))
    x.add_edges_from(g.edges)
    return x


def euler_rejects(g: Graph) -> bool:
    """True when ``|E| > 3|V| - 6`` rules planarity out (``|V| >= 3``)."""
    return g.n >= 3 and len(g.edges) > 3 * g.n - 6


def kuratowski_kind(w: Graph) -> str | None:
    """Classify ``w`` as a subdivision of K5 or K3,3 (isolated vertices ignored)."""
    branch = [v for v in range(w.n) if w.degree(v) > 2]
    if any(w.degree(v) == 1 for v in range(w.n)):
        return None
    # follow each degree-2 thread from a branch vertex to the next branch vertex
    links: dict[tuple[int, int], int] = {}
    bset = set(branch)
    for b in branch:
        for nb in w.adj[b]:
            prev, cur = b, nb
            while cur not in bset:
                nxt = [x for x in w.adj[cur] if x != prev]
                if len(nxt) != 1:
                    return None
                prev, cur = cur, nxt[0]
            if cur == b:
                return None
            key = (min(b, cur), max(b, cur))
            links[key] = links.get(key, 0) + 1
    if any(c != 2 for c in links.values()):  # each thread is seen from both ends
        return None
    pairs = set(links)
    if len(branch) == 5 and len(pairs) == 10:
        return "K5"
    if len(branch) == 6 and len(pairs) == 9:
        side = {branch[0]}
        side |= {x for x in branch if (min(x, branch[0]), max(x, branch[0])) not in pairs and x != branch[0]}
        other = set(branch) - side
        if len(side) == 3 and all((min(a, b), max(a, b)) in pairs for a in side for b in other):
            return "K33"
    return None


def is_planar(g: Graph | Multigraph, with_witness: bool = True) -> PlanarityResult:
    """Planarity of ``g``; loops and parallel edges are ignored."""
    if isinstance(g, Multigraph):
        g = g.simplify()
    planar, cert = nx.check_planarity(_to_nx(g), counterexample=with_witness)
    if planar:
        rot = {v: list(cert.neighbors_cw_order(v)) for v in range(g.n)}
        return PlanarityResult(True, rotation=rot)
    if not with_witness:
        return PlanarityResult(False)
    w = Graph.from_pairs(g.n, [(u, v) for u, v in cert.edges()])
    return PlanarityResult(False, witness=w, kind=kuratowski_kind(w))


def planar(g: Graph | Multigraph) -> bool:
    return is_planar(g, with_witness=False).planar


# -- enveloping cycle ---------------------------------------------------------

@dataclass(frozen=True)
class Envelope:
    """``K°`` and ``K⊙`` as multigraphs.

    Vertices of K keep their ids; the cycle vertex attached to the i-th entry
    of ``(a_1..a_ell, b_k..b_1)`` is ``n + i``; the apex (if any) is last.
    """

    graph: Multigraph
    cycle_vertices: tuple[int, ...]
    apexed: Multigraph
    apex: int | None


def build_envelope(h: BiLabeledGraph) -> Envelope:
    g, n = h.graph, h.graph.n
    c = h.cyclic_tuple()
    L = len(c)
    ends: dict = {}
    for i, (u, v) in enumerate(g.pairs()):
        ends[("K", i)] = (u, v)
    cyc = tuple(range(n, n + L))
    for i, x in enumerate(c):
        ends[("pend", i)] = (x, cyc[i])
    # L = 1 yields a loop and L = 2 a doubled edge, as intended
    for i in range(L):
        ends[("cyc", i)] = (cyc[i], cyc[(i + 1) % L])
    ring = Multigraph(n + L, ends)
    if L == 0:
        return Envelope(ring, cyc, ring, None)
    apex = n + L
    ends2 = dict(ends)
    for i in range(L):
        ends2[("apex", i)] = (apex, cyc[i])
    return Envelope(ring, cyc, Multigraph(n + L + 1, ends2), apex)


def in_P(h: BiLabeledGraph) -> bool:
    """Membership in P: the apexed envelope is planar."""
    return planar(build_envelope(h).apexed)


def in_P_report(h: BiLabeledGraph) -> PlanarityResult:
    return is_planar(build_envelope(h).apexed)


# -- face queries ---------------------------------------------------------------

def _with_apex(g: Graph, targets: Iterable[int]) -> Graph:
    a = g.n
    targets = list(targets)
    return Graph.from_pairs(g.n + 1, g.pairs() + [(a, t) for t in targets])


def is_facial_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """Whether ``cycle`` bounds a face in some planar embedding of ``g``."""
    cyc = list(cycle)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise InvalidArgument("a cycle needs at least three distinct vertices")
    for u, v in zip(cyc, cyc[1:] + cyc[:1]):
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise InvalidArgument(f"{(u, v)} is not an edge")
    return planar(_with_apex(g, cyc))


def common_face(g: Graph, vertices: Iterable[int]) -> bool:
    """Whether ``vertices`` can all lie on one face of a planar embedding of ``g``."""
    s = sorted(set(vertices))
    if any(not 0 <= v < g.n for v in s):
        raise InvalidArgument("vertex out of range")
    return planar(_with_apex(g, s))


def in_P_common_face(h: BiLabeledGraph) -> bool:
    """Low-arity membership criterion (``ell + k <= 3``): tuple vertices share a face."""
    if h.ell + h.k > 3:
        raise InvalidArgument("common-face criterion only applies for ell + k <= 3")
    return common_face(h.graph, h.cyclic_tuple())
