"""Canonical labeling and automorphism search by refinement + backtracking.

Colour refinement (loop flag, degree, neighbour colour multiset) is run at
every node of an individualization tree. The canonical leaf is the one with
the largest certificate; automorphisms discovered along the way prune
children that lie in an already-explored orbit of the pointwise stabilizer.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

from .errors import ResourceLimit
from .graph import Graph

MAX_VERTICES = 12  # automorphism enumeration
CANON_LIMIT = 32  # canonical search; pruning keeps symmetric inputs cheap


@dataclass(frozen=True)
class CanonicalForm:
    canonical_labeling: tuple[int, ...]  # vertex -> canonical position
    certificate: bytes


def _refine(g: Graph, colors: list[int]) -> list[int]:
    adj = g.adj
    ncls = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(g.n)]
        keys = {s: i for i, s in enumerate(sorted(set(sig)))}
        colors = [keys[s] for s in sig]
        if len(keys) == ncls:
            return colors
        ncls = len(keys)


def _initial(g: Graph, vertex_colors: Sequence[Hashable] | None) -> tuple[list[int], list]:
    base = [
        (vertex_colors[v] if vertex_colors is not None else 0, v in g.loops)
        for v in range(g.n)
    ]
    keys = {s: i for i, s in enumerate(sorted(set(base), key=repr))}
    return _refine(g, [keys[s] for s in base]), base


def _individualize(g: Graph, colors: list[int], v: int) -> list[int]:
    # v is placed just before the rest of its cell
    c = [2 * x + 1 for x in colors]
    c[v] -= 1
    keys = {x: i for i, x in enumerate(sorted(set(c)))}
    return _refine(g, [keys[x] for x in c])


def _target_cell(colors: list[int]) -> list[int] | None:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    for c in sorted(cells):
        if len(cells[c]) > 1:
            return cells[c]
    return None


def _leaf_key(g: Graph, lab: list[int], base: list) -> tuple:
    inv = [0] * g.n
    for v, p in enumerate(lab):
        inv[p] = v
    return (
        tuple(repr(base[inv[p]]) for p in range(g.n)),
        tuple(sorted(tuple(sorted((lab[u], lab[v]))) for u, v in g.edges)),
    )


def _orbit_reps(cell: list[int], gens: list[tuple[int, ...]]) -> dict[int, int]:
    parent = {v: v for v in cell}

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    for s in gens:
        for v in cell:
            w = s[v]
            if w in parent:
                a, b = find(v), find(w)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    return {v: find(v) for v in cell}


def _search(g: Graph, vertex_colors):
    if g.n > CANON_LIMIT:
        raise ResourceLimit(f"canonical search limited to {CANON_LIMIT} vertices")
    root, base = _initial(g, vertex_colors)
    best: list = [None, None]  # key, labeling
    seen: dict[tuple, list[int]] = {}
    autos: list[tuple[int, ...]] = []

    def rec(colors: list[int], prefix: list[int]) -> None:
        cell = _target_cell(colors)
        if cell is None:
            key = _leaf_key(g, colors, base)
            if key in seen:
                inv_prev = [0] * g.n
                for v, p in enumerate(seen[key]):
                    inv_prev[p] = v
                autos.append(tuple(inv_prev[colors[v]] for v in range(g.n)))
            else:
                seen[key] = colors
            if best[0] is None or key > best[0]:
                best[0], best[1] = key, colors
            return
        done: list[int] = []
        for v in cell:
            if done:
                stab = [s for s in autos if all(s[p] == p for p in prefix)]
                reps = _orbit_reps(cell, stab)
                if any(reps[v] == reps[u] for u in done):
                    continue
            rec(_individualize(g, colors, v), prefix + [v])
            done.append(v)

    rec(root, [])
    return best


def canonical_form(g: Graph, vertex_colors: Sequence[Hashable] | None = None) -> CanonicalForm:
    """Canonical labeling and certificate of ``g`` (optionally vertex-coloured).

    Colours must have a deterministic ``repr``; they are part of the
    certificate, so colour-preserving isomorphism is what equality detects.
    """
    key, lab = _search(g, vertex_colors)
    if key is None:  # empty graph
        return CanonicalForm((), b"0|")
    colors, edges = key
    loops = tuple(sorted(lab[v] for v in g.loops))
    cert = repr((g.n, colors, edges, loops)).encode()
    return CanonicalForm(tuple(lab), cert)


def certificate(g: Graph, vertex_colors: Sequence[Hashable] | None = None) -> bytes:
    return canonical_form(g, vertex_colors).certificate


def automorphisms(g: Graph, vertex_colors: Sequence[Hashable] | None = None) -> list[tuple[int, ...]]:
    """All (colour-, loop- and adjacency-preserving) automorphisms as tuples ``v -> image``."""
    if g.n == 0:
        return [()]
    if g.n > MAX_VERTICES:
        raise ResourceLimit(f"automorphism search limited to {MAX_VERTICES} vertices")
    # Leaves equivalent to the first one are exactly its images under Aut(g).
    root, base = _initial(g, vertex_colors)
    first: list = []
    out: list[tuple[int, ...]] = []
    path_shapes: list[tuple[int, ...]] = []

    def rec(colors, depth, on_first):
        sh = tuple(_cell_sizes(colors))
        if on_first:
            path_shapes.append(sh)
        elif path_shapes[depth] != sh:
            return
        cell = _target_cell(colors)
        if cell is None:
            key = _leaf_key(g, colors, base)
            if not first:
                first.extend([key, colors])
                out.append(tuple(range(g.n)))
            elif key == first[0]:
                inv = [0] * g.n
                for v, p in enumerate(first[1]):
                    inv[p] = v
                out.append(tuple(inv[colors[v]] for v in range(g.n)))
            return
        for i, v in enumerate(cell):
            rec(_individualize(g, colors, v), depth + 1, on_first and i == 0)

    rec(root, 0, True)
    return out


def _cell_sizes(colors: list[int]) -> list[int]:
    counts = [0] * (max(colors) + 1)
    for c in colors:
        counts[c] += 1
    return counts


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and len(g.edges) == len(h.edges) and certificate(g) == certificate(h)


def vertex_orbits(g: Graph, vertex_colors: Sequence[Hashable] | None = None) -> list[list[int]]:
    """Orbits of Aut(g), found by comparing certificates with one vertex marked."""
    base = list(vertex_colors) if vertex_colors is not None else [0] * g.n
    groups: dict[bytes, list[int]] = {}
    for v in range(g.n):
        cols = [(c, v == w) for w, c in enumerate(base)]
        groups.setdefault(certificate(g, cols), []).append(v)
    return sorted(groups.values())
