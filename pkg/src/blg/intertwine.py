"""Spans of homomorphism matrices, orbit/orbital refinement, and 2-WL.

The refinements approximate quantum orbits and orbitals from above: two
vertices (or pairs) are separated as soon as some planar generator matrix
takes different values on them. Larger size bounds only add generators,
so the partitions get finer as ``s`` grows.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Hashable, Sequence

import numpy as np

from .bilabeled import BiLabeledGraph
from .canon import automorphisms
from .enumeration import enumerate_graphs, rooted_classes
from .errors import InvalidArgument, ResourceLimit
from .graph import Graph, components, disjoint_union
from .hommatrix import HomMatrix, hom_tensor
from .planarity import in_P

DEFAULT_SIZE = 5
WL2_MAX = 64


@dataclass(frozen=True)
class RefinementPartition:
    """Partition of vertices (``ground="vertices"``) or ordered pairs (``"pairs"``)."""

    ground: str
    classes: tuple[tuple, ...]
    size_bound: int | None = None

    @classmethod
    def from_labels(cls, ground: str, items: Sequence[Hashable], labels: Sequence[Hashable],
                    size_bound: int | None = None) -> "RefinementPartition":
        groups: dict[Hashable, list] = {}
        for x, lab in zip(items, labels):
            groups.setdefault(lab, []).append(x)
        classes = sorted((tuple(sorted(c)) for c in groups.values()), key=lambda c: c[0])
        return cls(ground, tuple(classes), size_bound)

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self) -> dict:
        return {x: i for i, c in enumerate(self.classes) for x in c}

    def refines(self, other: "RefinementPartition") -> bool:
        """Every class of ``self`` lies inside a class of ``other``."""
        where = other.class_of()
        return all(len({where[x] for x in c}) == 1 for c in self.classes)

    def to_json(self) -> dict:
        return {"ground": self.ground, "size_bound": self.size_bound,
                "classes": [[list(x) if isinstance(x, tuple) else x for x in c] for c in self.classes]}


# -- exact spans ------------------------------------------------------------------

def _as_vector(m) -> list[Fraction]:
    if isinstance(m, HomMatrix):
        m = m.data
    return [Fraction(x) for x in np.asarray(m, dtype=object).ravel()]


def span_rank(matrices: Sequence) -> tuple[int, list[int]]:
    """Rank of the span and indices of a maximal independent subset (greedy, in order)."""
    vecs = [_as_vector(m) for m in matrices]
    if not vecs:
        return 0, []
    shapes = {np.shape(m.data if isinstance(m, HomMatrix) else m) for m in matrices}
    if len(shapes) != 1:
        raise InvalidArgument("matrices must share one shape")
    pivots: list[tuple[int, list[Fraction]]] = []  # reduced rows keyed by pivot column
    basis: list[int] = []
    for idx, v in enumerate(vecs):
        v = list(v)
        for col, row in pivots:
            if v[col]:
                f = v[col]
                v = [a - f * b for a, b in zip(v, row)]
        col = next((j for j, a in enumerate(v) if a), None)
        if col is None:
            continue
        inv = 1 / v[col]
        v = [a * inv for a in v]
        # keep earlier rows reduced so later eliminations stay single-pass
        pivots = [(c, [a - r[col] * b for a, b in zip(r, v)]) if r[col] else (c, r) for c, r in pivots]
        pivots.append((col, v))
        basis.append(idx)
    return len(basis), basis


# -- generator corpora --------------------------------------------------------------

@lru_cache(maxsize=None)
def rooted_connected_planar(s: int, loops: bool) -> tuple[tuple[Graph, int], ...]:
    """One ``(K, root)`` per rooted isomorphism class; K connected planar, ``|V| <= s``."""
    out = []
    for n in range(1, s + 1):
        for k in enumerate_graphs(n, connected=True, planar=True, allow_loops=loops):
            out.extend((k, r) for r in rooted_classes(k))
    return tuple(out)


def _pair_orbit_reps(k: Graph) -> list[tuple[int, int]]:
    auts = automorphisms(k)
    seen, reps = set(), []
    for a, b in product(range(k.n), repeat=2):
        if (a, b) in seen:
            continue
        reps.append((a, b))
        seen.update((p[a], p[b]) for p in auts)
    return reps


@lru_cache(maxsize=None)
def p11_generators(s: int, loops: bool) -> tuple[BiLabeledGraph, ...]:
    """Members ``(K,(a),(b))`` of P(1,1) with ``|V(K)| <= s``, one per isomorphism class.

    Components holding neither label are dropped: they scale the matrix by a
    constant, which never changes the induced pair partition.
    """
    out = []
    for n in range(1, s + 1):
        for k in enumerate_graphs(n, connected=False, planar=True, allow_loops=loops):
            comps = components(k)
            if len(comps) > 2:
                continue
            for a, b in _pair_orbit_reps(k):
                if any(a not in c and b not in c for c in comps):
                    continue
                h = BiLabeledGraph(k, (a,), (b,))
                if in_P(h):
                    out.append(h)
    return tuple(out)


# -- refinements -------------------------------------------------------------------

def _check_size(s: int) -> None:
    if s < 1:
        raise InvalidArgument("size bound must be at least 1")
    if s > 7:
        raise ResourceLimit("size bound exceeds the enumeration limit 7")


def orbit_refinement(g: Graph, s: int = DEFAULT_SIZE) -> RefinementPartition:
    """Vertices split by rooted counts hom((K,a),(G,u)) over connected planar K."""
    _check_size(s)
    labels: list[list[int]] = [[] for _ in range(g.n)]
    for k, r in rooted_connected_planar(s, bool(g.loops)):
        vec = hom_tensor(k, g, [r])
        for u in range(g.n):
            labels[u].append(int(vec[u]))
    return RefinementPartition.from_labels("vertices", list(range(g.n)), [tuple(x) for x in labels], s)


def orbital_refinement(g: Graph, s: int = DEFAULT_SIZE) -> RefinementPartition:
    """Ordered pairs split by entries of hom matrices of P(1,1) generators."""
    _check_size(s)
    n = g.n
    sigs: list[list[int]] = [[] for _ in range(n * n)]
    for h in p11_generators(s, bool(g.loops)):
        a, b = h.out[0], h.inp[0]
        if a == b:
            diag = hom_tensor(h.graph, g, [a])
            vals = np.zeros((n, n), dtype=object)
            vals[...] = 0
            for u in range(n):
                vals[u, u] = diag[u]
        else:
            vals = hom_tensor(h.graph, g, [a, b])
        flat = vals.ravel()
        for i in range(n * n):
            sigs[i].append(int(flat[i]))
    pairs = [(i, j) for i in range(n) for j in range(n)]
    return RefinementPartition.from_labels("pairs", pairs, [tuple(x) for x in sigs], s)


# -- 2-WL -------------------------------------------------------------------------

def _rel(g: Graph, i: int, j: int) -> int:
    if i == j:
        return 1 if i in g.loops else 0
    return 3 if g.has_edge(i, j) else 2


def wl2_colors(g: Graph, initial: np.ndarray | None = None) -> np.ndarray:
    """Stable 2-WL colour matrix; colours are invariant integers (sorted signatures)."""
    n = g.n
    if n > WL2_MAX:
        raise ResourceLimit(f"2-WL limited to {WL2_MAX} vertices")
    col = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            col[i, j] = _rel(g, i, j) if initial is None else int(initial[i, j])
    col = _compress({(i, j): (int(col[i, j]),) for i in range(n) for j in range(n)}, n)
    while True:
        sig = {}
        for i in range(n):
            for j in range(n):
                sig[i, j] = (int(col[i, j]), tuple(sorted(zip(col[i, :].tolist(), col[:, j].tolist()))))
        new = _compress(sig, n)
        if len(np.unique(new)) == len(np.unique(col)):
            return new
        col = new


def _compress(sig: dict, n: int) -> np.ndarray:
    order = {s: i for i, s in enumerate(sorted(set(sig.values())))}
    out = np.zeros((n, n), dtype=np.int64)
    for (i, j), s in sig.items():
        out[i, j] = order[s]
    return out


def wl2(g: Graph) -> RefinementPartition:
    col = wl2_colors(g)
    pairs = [(i, j) for i in range(g.n) for j in range(g.n)]
    return RefinementPartition.from_labels("pairs", pairs, [int(col[p]) for p in pairs])


def is_coherent(p: RefinementPartition, n: int) -> bool:
    """Transpose-closed, diagonal a union of classes, constant intersection numbers."""
    if p.ground != "pairs":
        raise InvalidArgument("coherence is defined for pair partitions")
    where = p.class_of()
    for c in p.classes:
        t = {(j, i) for i, j in c}
        if len({where[x] for x in t}) != 1 or len(t) != len(c):
            return False
        if len({i == j for i, j in c}) != 1:
            return False
    mats = []
    for c in p.classes:
        m = np.zeros((n, n), dtype=np.int64)
        for i, j in c:
            m[i, j] = 1
        mats.append(m)
    for a in mats:
        for b in mats:
            prod = a @ b
            for c in p.classes:
                if len({int(prod[x]) for x in c}) != 1:
                    return False
    return True


def wl2_equivalent(g: Graph, h: Graph) -> bool:
    """2-WL on the disjoint union; copies are compared by the multisets of their pair colours."""
    if g.n != h.n:
        return False
    u = disjoint_union(g, h)
    col = wl2_colors(u)
    n = g.n
    left = Counter(int(col[i, j]) for i in range(n) for j in range(n))
    right = Counter(int(col[i, j]) for i in range(n, 2 * n) for j in range(n, 2 * n))
    return left == right


def color_multiset(g: Graph) -> Counter:
    return Counter(wl2_colors(g).ravel().tolist())

