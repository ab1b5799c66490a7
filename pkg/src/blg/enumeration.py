"""Isomorphism-class enumeration of small graphs by canonical augmentation.

A child ``C = P + x`` is kept only when the new vertex ``x`` lies in the
Aut(C)-orbit of the vertex that the canonical labeling of ``C`` puts last.
That makes ``C - x`` the canonical parent, so each class arises from exactly
one parent class; children of one parent are deduplicated by certificate.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import Iterator

from .canon import canonical_form, certificate
from .errors import ResourceLimit
from .graph import Graph, is_connected

DEFAULT_LIMIT = 7


def _planar(g: Graph) -> bool:
    from .planarity import is_planar

    return is_planar(g).planar


def _accept(child: Graph) -> bool:
    x = child.n - 1
    lab = canonical_form(child).canonical_labeling
    m = lab.index(child.n - 1)
    if m == x:
        return True
    mark = lambda v: [w == v for w in range(child.n)]  # noqa: E731
    return certificate(child, mark(x)) == certificate(child, mark(m))


@lru_cache(maxsize=None)
def _level(n: int, planar: bool, allow_loops: bool) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    out: list[Graph] = []
    loop_opts = (False, True) if allow_loops else (False,)
    for parent in _level(n - 1, planar, allow_loops):
        seen: set[bytes] = set()
        base = parent.pairs()
        x = n - 1
        for size in range(n):
            for nbrs in combinations(range(n - 1), size):
                for looped in loop_opts:
                    pairs = base + [(v, x) for v in nbrs] + ([(x, x)] if looped else [])
                    child = Graph.from_pairs(n, pairs)
                    if planar and not _planar(child):
                        continue
                    if not _accept(child):
                        continue
                    cert = certificate(child)
                    if cert not in seen:
                        seen.add(cert)
                        out.append(child)
    return tuple(out)


def _order_key(g: Graph) -> tuple:
    return (len(g.edges), len(g.loops), certificate(g))


def enumerate_graphs(
    n: int,
    connected: bool = False,
    planar: bool = False,
    allow_loops: bool = False,
    limit: int = DEFAULT_LIMIT,
) -> Iterator[Graph]:
    """One graph per isomorphism class on exactly ``n`` vertices.

    Order is deterministic: edge count, loop count, then certificate.
    """
    if n > limit:
        raise ResourceLimit(f"enumeration limited to {limit} vertices")
    graphs = [g for g in _level(n, planar, allow_loops) if not connected or is_connected(g)]
    yield from sorted(graphs, key=_order_key)


def enumerate_naive(n: int, connected: bool = False, allow_loops: bool = False) -> list[Graph]:
    """Reference: all labeled graphs, deduplicated by certificate."""
    slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if allow_loops:
        slots += [(u, u) for u in range(n)]
    seen: dict[bytes, Graph] = {}
    for bits in product((0, 1), repeat=len(slots)):
        g = Graph.from_pairs(n, [s for s, b in zip(slots, bits) if b])
        if connected and not is_connected(g):
            continue
        seen.setdefault(certificate(g), g)
    return sorted(seen.values(), key=_order_key)


def enumerate_upto(max_n: int, **kw) -> Iterator[Graph]:
    """Classes on ``1..max_n`` vertices in vertex-count order."""
    for n in range(1, max_n + 1):
        yield from enumerate_graphs(n, **kw)


def rooted_classes(g: Graph) -> list[int]:
    """One root per Aut(g)-orbit (lowest vertex of each orbit)."""
    from .canon import vertex_orbits

    return [orb[0] for orb in vertex_orbits(g)]


def tuple_orbit_reps(g: Graph, length: int) -> list[tuple[int, ...]]:
    """One vertex tuple per Aut(g)-orbit on ``V(g)^length`` (lexicographically first)."""
    from itertools import product

    from .canon import automorphisms

    auts = automorphisms(g)
    seen: set[tuple[int, ...]] = set()
    reps = []
    for c in product(range(g.n), repeat=length):
        if c in seen:
            continue
        seen.update(tuple(p[x] for x in c) for p in auts)
        reps.append(c)
    return reps


def enumerate_blg(n: int, max_arity: int, allow_loops: bool = False, in_p: bool | None = None):
    """Bi-labeled graphs on ``n`` vertices with ``ell + k <= max_arity``, one per class.

    The cyclic tuple ``c = a + reversed(b)`` is enumerated up to Aut(K) and
    every split point gives one ``(a, b)``. ``in_p`` filters on membership in
    P, which depends on ``c`` alone.
    """
    from .bilabeled import BiLabeledGraph
    from .planarity import in_P

    for g in enumerate_graphs(n, allow_loops=allow_loops):
        for length in range(max_arity + 1):
            for c in tuple_orbit_reps(g, length):
                if in_p is not None and in_P(BiLabeledGraph(g, c, ())) != in_p:
                    continue
                for s in range(length + 1):
                    yield BiLabeledGraph(g, c[:s], tuple(reversed(c[s:])))
