"""Graphs with loops, multigraphs, and surgery operations.

Vertices are the integers ``0..n-1``. Loops live in their own set so a
:class:`Graph` can never hold a multi-edge or a doubled loop.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import InvalidArgument, ParseError


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple graph with optional loops (at most one per vertex)."""

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    loops: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidArgument("vertex count must be nonnegative")
        edges = frozenset(_norm(u, v) for u, v in self.edges)
        for u, v in edges:
            if u == v:
                raise InvalidArgument("loops belong in the loops set")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidArgument(f"edge {(u, v)} out of range")
        loops = frozenset(self.loops)
        for u in loops:
            if not 0 <= u < self.n:
                raise InvalidArgument(f"loop {u} out of range")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "loops", loops)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Graph":
        """Build from ``(u, v)`` pairs where ``(u, u)`` denotes a loop."""
        edges, loops = set(), set()
        for u, v in pairs:
            if u == v:
                loops.add(u)
            else:
                edges.add(_norm(u, v))
        return cls(n, frozenset(edges), frozenset(loops))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets, excluding the vertex itself."""
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    def has_edge(self, u: int, v: int) -> bool:
        """Adjacency test; ``u == v`` asks for a loop."""
        if u == v:
            return u in self.loops
        return _norm(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def pairs(self) -> list[tuple[int, int]]:
        """Sorted edge list with loops written as ``(u, u)``."""
        return sorted(self.edges | {(u, u) for u in self.loops})

    @property
    def vertices(self) -> range:
        return range(self.n)

    def adjacency_matrix(self) -> list[list[int]]:
        a = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            a[u][v] = a[v][u] = 1
        for u in self.loops:
            a[u][u] = 1
        return a

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidArgument("not a permutation")
        return Graph(
            self.n,
            frozenset(_norm(perm[u], perm[v]) for u, v in self.edges),
            frozenset(perm[u] for u in self.loops),
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, pairs={self.pairs()})"


@dataclass(frozen=True)
class Multigraph:
    """Multigraph: edge ids mapped to a 2-tuple of endpoints or a 1-tuple (loop)."""

    n: int
    endpoints: Mapping[Hashable, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        ends = dict(self.endpoints)
        for e, p in ends.items():
            if len(p) not in (1, 2) or any(not 0 <= x < self.n for x in p):
                raise InvalidArgument(f"bad endpoints for edge {e!r}: {p}")
            if len(p) == 2 and p[0] == p[1]:
                ends[e] = (p[0],)
        object.__setattr__(self, "endpoints", ends)

    @property
    def edges(self) -> list[Hashable]:
        return list(self.endpoints)

    @classmethod
    def from_graph(cls, g: Graph) -> "Multigraph":
        ends: dict[Hashable, tuple[int, ...]] = {}
        for u, v in sorted(g.edges):
            ends[("e", u, v)] = (u, v)
        for u in sorted(g.loops):
            ends[("l", u)] = (u,)
        return cls(g.n, ends)

    def simplify(self) -> Graph:
        """Drop parallel edges, keep one loop per looped vertex."""
        return Graph.from_pairs(self.n, [(p[0], p[-1]) for p in self.endpoints.values()])


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def contract_and_simplify(g: Multigraph, s: Iterable[Hashable]) -> tuple[Graph, list[int]]:
    """Contract every edge id in ``s`` and simplify the result.

    Each component of the ``s``-subgraph becomes one vertex. Surviving edges
    whose endpoints were merged turn into loops. New vertices are numbered by
    the smallest old vertex of their class.

    Returns:
        The simple graph and the old-to-new vertex map.
    """
    s = list(s)
    uf = _UnionFind(g.n)
    for e in s:
        if e not in g.endpoints:
            raise InvalidArgument(f"unknown edge id {e!r}")
        p = g.endpoints[e]
        uf.union(p[0], p[-1])
    roots = sorted({uf.find(v) for v in range(g.n)})
    index = {r: i for i, r in enumerate(roots)}
    vmap = [index[uf.find(v)] for v in range(g.n)]
    contracted = set(s)
    pairs = [
        (vmap[p[0]], vmap[p[-1]]) for e, p in g.endpoints.items() if e not in contracted
    ]
    return Graph.from_pairs(len(roots), pairs), vmap


def complement(g: Graph) -> Graph:
    """Flip adjacency between distinct vertices, keep loops."""
    edges = {(u, v) for u in range(g.n) for v in range(u + 1, g.n)} - g.edges
    return Graph(g.n, frozenset(edges), g.loops)


def full_complement(g: Graph) -> Graph:
    """Flip adjacency and loops (adjacency matrix J - A)."""
    c = complement(g)
    return Graph(g.n, c.edges, frozenset(range(g.n)) - g.loops)


def subdivide(g: Graph, edge: tuple[int, int], k: int = 1) -> Graph:
    """Replace ``edge`` by a path through ``k`` new vertices ``n..n+k-1``."""
    u, v = _norm(*edge)
    if (u, v) not in g.edges:
        raise InvalidArgument(f"{edge} is not an edge")
    if k < 0:
        raise InvalidArgument("k must be nonnegative")
    if k == 0:
        return g
    path = [u, *range(g.n, g.n + k), v]
    edges = set(g.edges) - {(u, v)}
    edges |= {_norm(a, b) for a, b in zip(path, path[1:])}
    return Graph(g.n + k, frozenset(edges), g.loops)


def unsubdivide(g: Graph, path: Sequence[int]) -> Graph:
    """Remove the interior of ``path`` and join its ends by one edge.

    Remaining vertices keep their relative order. A resulting parallel edge is
    merged with the existing one.
    """
    if len(path) < 3 or len(set(path)) != len(path):
        raise InvalidArgument("path needs at least three distinct vertices")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b) or a == b:
            raise InvalidArgument(f"{(a, b)} is not an edge of the path")
    inner = set(path[1:-1])
    for w in inner:
        if g.degree(w) != 2 or w in g.loops:
            raise InvalidArgument(f"interior vertex {w} does not have degree two")
    keep = [v for v in range(g.n) if v not in inner]
    new = {v: i for i, v in enumerate(keep)}
    pairs = [(new[a], new[b]) for a, b in g.pairs() if a not in inner and b not in inner]
    pairs.append((new[path[0]], new[path[-1]]))
    return Graph.from_pairs(len(keep), pairs)


def induced_subgraph(g: Graph, keep: Sequence[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``keep``, renumbered in the given order."""
    new = {v: i for i, v in enumerate(keep)}
    pairs = [(new[a], new[b]) for a, b in g.pairs() if a in new and b in new]
    return Graph.from_pairs(len(keep), pairs), new


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    return induced_subgraph(g, [w for w in range(g.n) if w != v])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` on ``0..g.n-1`` followed by ``h`` shifted by ``g.n``."""
    pairs = g.pairs() + [(a + g.n, b + g.n) for a, b in h.pairs()]
    return Graph.from_pairs(g.n + h.n, pairs)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


# -- standard families ------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidArgument("simple cycles need at least three vertices")
    return Graph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_pairs(n, [(i, i + 1) for i in range(n - 1)])


def empty_graph(n: int, looped: bool = False) -> Graph:
    return Graph(n, frozenset(), frozenset(range(n)) if looped else frozenset())


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_pairs(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_pairs(10, outer + spokes + inner)


def prism_graph(m: int) -> Graph:
    """Cartesian product of ``C_m`` and ``K_2``: outer ring 0..m-1, inner m..2m-1."""
    ring = [(i, (i + 1) % m) for i in range(m)]
    return Graph.from_pairs(
        2 * m, ring + [(a + m, b + m) for a, b in ring] + [(i, i + m) for i in range(m)]
    )


# -- text format --------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse ``n`` on the first line followed by ``u v`` lines (``u u`` is a loop)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty graph file")
    try:
        n = int(lines[0])
        pairs = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise ParseError(f"bad edge line {ln!r}")
            pairs.append((int(parts[0]), int(parts[1])))
        return Graph.from_pairs(n, pairs)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_graph(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.pairs()]) + "\n"
