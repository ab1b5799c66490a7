"""Homomorphism-count distinguishers.

``lovasz_iso`` is exact at desk scale; ``planar_distinguish`` only ever
reports a witness or "indistinguishable at size s", never isomorphism.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .enumeration import enumerate_graphs
from .errors import InvalidArgument, ResourceLimit
from .graph import Graph, Multigraph, components, contract_and_simplify
from .hommatrix import hom_count, hom_count_dp

LOVASZ_MAX = 5


@dataclass(frozen=True)
class Verdict:
    distinguished: bool
    size: int
    witness: Graph | None = None
    counts: tuple[int, int] | None = None
    checked: int = 0  # corpus members examined

    def to_json(self) -> dict:
        out = {"verdict": "distinguished" if self.distinguished else f"indistinguishable-at-{self.size}",
               "checked": self.checked}
        if self.witness is not None:
            w = self.witness
            out["witness"] = {"n": w.n, "edges": [list(e) for e in sorted(w.edges)], "loops": sorted(w.loops)}
            out["counts"] = [str(c) for c in self.counts]
        return out


def _corpus(s: int, loops: bool, connected: bool, planar: bool) -> list[Graph]:
    out = []
    for n in range(1, s + 1):
        out.extend(enumerate_graphs(n, connected=connected, planar=planar, allow_loops=loops))
    return out


def _pair_counts(args) -> tuple[int, int]:
    k, g, h = args
    return hom_count_dp(k, g), hom_count_dp(k, h)


def _first_witness(corpus: list[Graph], g: Graph, h: Graph, s: int, jobs: int) -> Verdict:
    if jobs > 1 and len(corpus) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            # map preserves corpus order, so the first mismatch seen is the earliest
            for i, (cg, ch) in enumerate(ex.map(_pair_counts, [(k, g, h) for k in corpus], chunksize=8)):
                if cg != ch:
                    ex.shutdown(wait=False, cancel_futures=True)
                    return Verdict(True, s, corpus[i], (cg, ch), i + 1)
        return Verdict(False, s, checked=len(corpus))
    for i, k in enumerate(corpus):
        cg, ch = _pair_counts((k, g, h))
        if cg != ch:
            return Verdict(True, s, k, (cg, ch), i + 1)
    return Verdict(False, s, checked=len(corpus))


def lovasz_iso(g: Graph, h: Graph) -> Verdict:
    """Compare hom counts from every graph on at most ``|V(g)|`` vertices."""
    n = max(g.n, h.n)
    if n > LOVASZ_MAX:
        raise ResourceLimit(f"exact test limited to {LOVASZ_MAX} vertices")
    loops = bool(g.loops or h.loops)
    return _first_witness(_corpus(max(n, 1), loops, connected=False, planar=False), g, h, n, 1)


def planar_distinguish(g: Graph, h: Graph, s: int, jobs: int = 1, planar: bool = True) -> Verdict:
    """First connected planar K (by size, edges, certificate) with differing counts.

    ``planar=False`` drops the planarity filter, turning this into a
    bounded connected-count comparison.
    """
    if s < 1:
        raise InvalidArgument("size bound must be at least 1")
    loops = bool(g.loops or h.loops)
    return _first_witness(_corpus(s, loops, connected=True, planar=planar), g, h, s, jobs)


def components_check(g: Graph, h: Graph) -> bool:
    return len(components(g)) == len(components(h))


# -- complement identity ------------------------------------------------------------

@dataclass(frozen=True)
class ComplementSides:
    lhs: int  # |S1| + |S4| by direct classification
    rhs: int  # hom(K-e) - hom(K) - hom(K/e) + 2 hom(K')
    parts: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _minus_edge(k: Graph, e: tuple[int, int]) -> Graph:
    return Graph(k.n, k.edges - {e}, k.loops)


def _contract(k: Graph, e: tuple[int, int]) -> tuple[Graph, int]:
    g, vmap = contract_and_simplify(Multigraph.from_graph(k), {("e", *e)})
    return g, vmap[e[0]]


def complement_sides(k: Graph, e: tuple[int, int], x: Graph) -> ComplementSides:
    u, v = sorted(e)
    e = (u, v)
    if e not in k.edges:
        raise InvalidArgument(f"{e} is not an edge of K")
    ke = _minus_edge(k, e)
    s = [0, 0, 0, 0]
    xadj = [x.adj[a] | ({a} if a in x.loops else set()) for a in range(x.n)]
    for img in product(range(x.n), repeat=k.n):
        if any(img[w] not in x.loops for w in ke.loops):
            continue
        if any(img[b] not in xadj[img[a]] for a, b in ke.edges):
            continue
        pu, pv = img[u], img[v]
        if pu == pv:
            s[0 if pu in x.loops else 1] += 1
        else:
            s[2 if x.has_edge(pu, pv) else 3] += 1
    kc, merged = _contract(k, e)
    kprime = Graph(kc.n, kc.edges, kc.loops | {merged})
    rhs = hom_count(ke, x) - hom_count(k, x) - hom_count(kc, x) + 2 * hom_count(kprime, x)
    return ComplementSides(s[0] + s[3], rhs, {"S1": s[0], "S2": s[1], "S3": s[2], "S4": s[3]})


def complement_identity(k: Graph, e: tuple[int, int], x: Graph) -> bool:
    return complement_sides(k, e, x).holds
