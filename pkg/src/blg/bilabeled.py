"""Bi-labeled graphs ``(K, a, b)``: operations, named generators, partitions.

``a`` is the output tuple (length ``ell``), ``b`` the input tuple (length
``k``). Composition and Schur product both go through the multigraph
add-edges-then-contract path of :func:`blg.graph.contract_and_simplify`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .canon import canonical_form
from .errors import InvalidArgument, ParseError
from .graph import Graph, Multigraph, contract_and_simplify, delete_vertex, disjoint_union


@dataclass(frozen=True)
class BiLabeledGraph:
    graph: Graph
    out: tuple[int, ...] = ()
    inp: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "out", tuple(self.out))
        object.__setattr__(self, "inp", tuple(self.inp))
        for v in self.out + self.inp:
            if not 0 <= v < self.graph.n:
                raise InvalidArgument(f"tuple entry {v} is not a vertex")

    @property
    def ell(self) -> int:
        return len(self.out)

    @property
    def k(self) -> int:
        return len(self.inp)

    @property
    def arity(self) -> tuple[int, int]:
        return (len(self.out), len(self.inp))

    @property
    def n(self) -> int:
        return self.graph.n

    def cyclic_tuple(self) -> tuple[int, ...]:
        """``(a_1..a_ell, b_k..b_1)``, the order around the enveloping cycle."""
        return self.out + self.inp[::-1]

    def __repr__(self) -> str:
        return f"BLG(n={self.graph.n}, pairs={self.graph.pairs()}, out={self.out}, in={self.inp})"


# -- operations ---------------------------------------------------------------

def _glue(g1: Graph, g2: Graph, pairs: Iterable[tuple[int, int]]) -> tuple[Graph, list[int]]:
    """Disjoint union, then contract new edges joining ``g1`` vertex x to ``g2`` vertex y."""
    ends: dict = {}
    for i, (u, v) in enumerate(g1.pairs()):
        ends[("l", i)] = (u, v)
    for i, (u, v) in enumerate(g2.pairs()):
        ends[("r", i)] = (u + g1.n, v + g1.n)
    glue = []
    for i, (x, y) in enumerate(pairs):
        ends[("g", i)] = (x, y + g1.n)
        glue.append(("g", i))
    return contract_and_simplify(Multigraph(g1.n + g2.n, ends), glue)


def compose(h1: BiLabeledGraph, h2: BiLabeledGraph) -> BiLabeledGraph:
    """``h1 ∘ h2``: identify the inputs of ``h1`` with the outputs of ``h2``."""
    if h1.k != h2.ell:
        raise InvalidArgument(f"cannot compose arities {h1.arity} and {h2.arity}")
    g, vmap = _glue(h1.graph, h2.graph, zip(h1.inp, h2.out))
    shift = h1.graph.n
    return BiLabeledGraph(g, tuple(vmap[v] for v in h1.out), tuple(vmap[v + shift] for v in h2.inp))


def tensor(h1: BiLabeledGraph, h2: BiLabeledGraph) -> BiLabeledGraph:
    s = h1.graph.n
    return BiLabeledGraph(
        disjoint_union(h1.graph, h2.graph),
        h1.out + tuple(v + s for v in h2.out),
        h1.inp + tuple(v + s for v in h2.inp),
    )


def transpose(h: BiLabeledGraph) -> BiLabeledGraph:
    return BiLabeledGraph(h.graph, h.inp, h.out)


def schur(h1: BiLabeledGraph, h2: BiLabeledGraph) -> BiLabeledGraph:
    """Schur product: glue ``a_i`` to ``a'_i`` and ``b_j`` to ``b'_j``."""
    if h1.arity != h2.arity:
        raise InvalidArgument(f"Schur product needs equal arities, got {h1.arity}, {h2.arity}")
    pairs = list(zip(h1.out, h2.out)) + list(zip(h1.inp, h2.inp))
    g, vmap = _glue(h1.graph, h2.graph, pairs)
    return BiLabeledGraph(g, tuple(vmap[v] for v in h1.out), tuple(vmap[v] for v in h1.inp))


def tensor_power(h: BiLabeledGraph, r: int) -> BiLabeledGraph:
    """``h`` tensored ``r`` times; ``r = 0`` gives the empty bi-labeled graph."""
    out = BiLabeledGraph(Graph(0))
    for _ in range(r):
        out = tensor(out, h)
    return out


def remove_vertex(h: BiLabeledGraph, v: int) -> tuple[Graph, dict[int, int]]:
    """Underlying graph minus ``v`` together with the renumbering map."""
    return delete_vertex(h.graph, v)


# -- generators ---------------------------------------------------------------

def M(ell: int, k: int, looped: bool = False) -> BiLabeledGraph:
    """Single vertex repeated ``ell`` times as output and ``k`` times as input."""
    return BiLabeledGraph(Graph(1, loops=frozenset({0}) if looped else frozenset()), (0,) * ell, (0,) * k)


def ringM(ell: int, k: int) -> BiLabeledGraph:
    return M(ell, k, looped=True)


def identity() -> BiLabeledGraph:
    return M(1, 1)


def A() -> BiLabeledGraph:
    return BiLabeledGraph(Graph.from_pairs(2, [(0, 1)]), (0,), (1,))


def S() -> BiLabeledGraph:
    """The swap: edgeless on two vertices with ``out=(a,b)``, ``in=(b,a)``."""
    return BiLabeledGraph(Graph(2), (0, 1), (1, 0))


def _star_graph(d: int, looped: bool) -> Graph:
    g = Graph.from_pairs(d + 1, [(0, i) for i in range(1, d + 1)])
    return Graph(g.n, g.edges, frozenset({0}) if looped else frozenset())


def star(m: int, d: int, looped: bool = False) -> BiLabeledGraph:
    """Star with centre 0 as ``m`` outputs and leaves ``1..d`` as inputs."""
    return BiLabeledGraph(_star_graph(d, looped), (0,) * m, tuple(range(1, d + 1)))


def star_L(m: int, d: int, looped: bool = False) -> BiLabeledGraph:
    return BiLabeledGraph(_star_graph(d, looped), (0,) * m, (0, *range(1, d + 1)))


def star_R(m: int, d: int, looped: bool = False) -> BiLabeledGraph:
    return BiLabeledGraph(_star_graph(d, looped), (0,) * m, (*range(1, d + 1), 0))


def generator(name: str, *params: int) -> BiLabeledGraph:
    """Look up a generator by name: ``M``, ``ringM``, ``A``, ``S``, ``I``,
    ``star``, ``star_L``, ``star_R`` and ``ring_star*`` (looped centre)."""
    table = {
        "M": M, "ringM": ringM, "A": A, "S": S, "I": identity,
        "star": star, "star_L": star_L, "star_R": star_R,
        "ring_star": lambda m, d: star(m, d, True),
        "ring_star_L": lambda m, d: star_L(m, d, True),
        "ring_star_R": lambda m, d: star_R(m, d, True),
    }
    if name not in table:
        raise InvalidArgument(f"unknown generator {name!r}")
    return table[name](*params)


# -- isomorphism --------------------------------------------------------------

def _position_colors(h: BiLabeledGraph) -> list[tuple]:
    cols: list[list] = [[] for _ in range(h.graph.n)]
    for i, v in enumerate(h.out):
        cols[v].append(("o", i))
    for j, v in enumerate(h.inp):
        cols[v].append(("i", j))
    return [tuple(c) for c in cols]


def blg_certificate(h: BiLabeledGraph) -> bytes:
    """Isomorphism-class key: equal iff bi-labeled isomorphic."""
    cf = canonical_form(h.graph, _position_colors(h))
    return f"{h.ell},{h.k}|".encode() + cf.certificate


def blg_isomorphic(h1: BiLabeledGraph, h2: BiLabeledGraph) -> tuple[bool, tuple[int, ...] | None]:
    """Return ``(True, phi)`` with ``phi[v]`` the image of ``v``, or ``(False, None)``."""
    if h1.arity != h2.arity or h1.graph.n != h2.graph.n or len(h1.graph.edges) != len(h2.graph.edges):
        return False, None
    c1 = canonical_form(h1.graph, _position_colors(h1))
    c2 = canonical_form(h2.graph, _position_colors(h2))
    if c1.certificate != c2.certificate:
        return False, None
    inv2 = [0] * h2.graph.n
    for v, p in enumerate(c2.canonical_labeling):
        inv2[p] = v
    return True, tuple(inv2[c1.canonical_labeling[v]] for v in range(h1.graph.n))


# -- partitions ---------------------------------------------------------------

Point = tuple[str, int]  # ("L", i) or ("U", j); 1-indexed


def _pkey(p: Point) -> tuple[int, int]:
    return (0 if p[0] == "L" else 1, p[1])


@dataclass(frozen=True)
class LabeledPartition:
    """Partition of lower points ``1_L..ell_L`` and upper points ``1_U..k_U``.

    Lower points correspond to outputs. ``empty`` counts empty parts.
    """

    lower: int
    upper: int
    blocks: tuple[tuple[Point, ...], ...]
    empty: int = 0

    def __post_init__(self) -> None:
        blocks = [tuple(sorted(b, key=_pkey)) for b in self.blocks if b]
        blocks.sort(key=lambda b: [_pkey(p) for p in b])
        pts = [p for b in blocks for p in b]
        expect = {("L", i) for i in range(1, self.lower + 1)} | {("U", j) for j in range(1, self.upper + 1)}
        if len(pts) != len(set(pts)) or set(pts) != expect:
            raise InvalidArgument("blocks must partition all points")
        if self.empty < 0:
            raise InvalidArgument("negative empty-part count")
        object.__setattr__(self, "blocks", tuple(blocks))

    def position(self, p: Point) -> int:
        """Place in the order ``1_L < .. < ell_L < k_U < .. < 1_U``."""
        return p[1] - 1 if p[0] == "L" else self.lower + self.upper - p[1]

    def block_of(self, p: Point) -> int:
        for i, b in enumerate(self.blocks):
            if p in b:
                return i
        raise InvalidArgument(f"no point {p}")


def blg_to_partition(h: BiLabeledGraph) -> LabeledPartition:
    groups: dict[int, list[Point]] = {}
    for i, v in enumerate(h.out, 1):
        groups.setdefault(v, []).append(("L", i))
    for j, v in enumerate(h.inp, 1):
        groups.setdefault(v, []).append(("U", j))
    return LabeledPartition(h.ell, h.k, tuple(tuple(b) for b in groups.values()), h.graph.n - len(groups))


def partition_to_blg(p: LabeledPartition, ell: int | None = None, k: int | None = None) -> BiLabeledGraph:
    """Edgeless bi-labeled graph with one vertex per block and per empty part."""
    if (ell is not None and ell != p.lower) or (k is not None and k != p.upper):
        raise InvalidArgument("point counts do not match the partition")
    of = {pt: i for i, b in enumerate(p.blocks) for pt in b}
    return BiLabeledGraph(
        Graph(len(p.blocks) + p.empty),
        tuple(of[("L", i)] for i in range(1, p.lower + 1)),
        tuple(of[("U", j)] for j in range(1, p.upper + 1)),
    )


def is_noncrossing_blocks(blocks: Sequence[Sequence[int]]) -> bool:
    """No ``a < b < c < d`` with ``a, c`` in one block and ``b, d`` in another."""
    owner = {x: i for i, b in enumerate(blocks) for x in b}
    for i, b in enumerate(blocks):
        srt = sorted(b)
        for a, c in zip(srt, srt[1:]):
            # a block touching the open gap (a, c) must stay inside it
            for j in {owner[x] for x in owner if a < x < c}:
                if any(not a < y < c for y in blocks[j]):
                    return False
    return True


def is_noncrossing(p: LabeledPartition) -> bool:
    return is_noncrossing_blocks([[p.position(q) for q in b] for b in p.blocks])


def compose_partitions(p: LabeledPartition, q: LabeledPartition) -> LabeledPartition:
    """Join ``p``'s upper points to ``q``'s lower points; closed blocks become empty parts."""
    if p.upper != q.lower:
        raise InvalidArgument("partition arities do not compose")
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for b in p.blocks:
        for pt in b:
            parent[("p", pt)] = ("p", pt)
        for pt in b[1:]:
            union(("p", b[0]), ("p", pt))
    for b in q.blocks:
        for pt in b:
            parent[("q", pt)] = ("q", pt)
        for pt in b[1:]:
            union(("q", b[0]), ("q", pt))
    for i in range(1, p.upper + 1):
        union(("p", ("U", i)), ("q", ("L", i)))
    classes: dict = {}
    for x in parent:
        classes.setdefault(find(x), []).append(x)
    blocks, closed = [], 0
    for members in classes.values():
        outer = [pt for side, pt in members if (side == "p" and pt[0] == "L") or (side == "q" and pt[0] == "U")]
        if outer:
            blocks.append(tuple(outer))
        else:
            closed += 1
    return LabeledPartition(p.lower, q.upper, tuple(blocks), p.empty + q.empty + closed)


def tensor_partitions(p: LabeledPartition, q: LabeledPartition) -> LabeledPartition:
    shifted = tuple(
        tuple((s, i + (p.lower if s == "L" else p.upper)) for s, i in b) for b in q.blocks
    )
    return LabeledPartition(p.lower + q.lower, p.upper + q.upper, p.blocks + shifted, p.empty + q.empty)


def transpose_partition(p: LabeledPartition) -> LabeledPartition:
    flip = {"L": "U", "U": "L"}
    return LabeledPartition(
        p.upper, p.lower, tuple(tuple((flip[s], i) for s, i in b) for b in p.blocks), p.empty
    )


def all_partitions(items: Sequence) -> Iterable[list[list]]:
    """Set partitions of ``items`` (restricted growth order)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in all_partitions(rest):
        yield [[first]] + sub
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1:]


# -- JSON format --------------------------------------------------------------

def blg_to_json(h: BiLabeledGraph) -> dict:
    return {
        "n": h.graph.n,
        "edges": [list(e) for e in sorted(h.graph.edges)],
        "loops": sorted(h.graph.loops),
        "out": list(h.out),
        "in": list(h.inp),
    }


def blg_from_json(obj: dict | str) -> BiLabeledGraph:
    try:
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not isinstance(obj, dict):
            raise TypeError("expected a JSON object")
        pairs = [tuple(e) for e in obj.get("edges", [])] + [(u, u) for u in obj.get("loops", [])]
        g = Graph.from_pairs(int(obj["n"]), pairs)
        return BiLabeledGraph(g, tuple(obj.get("out", [])), tuple(obj.get("in", [])))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad bi-labeled graph JSON: {exc}") from exc
