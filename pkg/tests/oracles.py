"""Brute-force reference implementations, independent of the package internals.

Everything here works from raw vertex/edge sets with itertools, so a bug in
the package's search, DP or canonical forms cannot leak into the oracle.
"""
from __future__ import annotations

from itertools import combinations, permutations, product

import numpy as np


def edge_set(g):
    return {frozenset(e) for e in g.edges}


def is_hom(k, g, phi) -> bool:
    for v in k.loops:
        if phi[v] not in g.loops:
            return False
    for u, v in k.edges:
        a, b = phi[u], phi[v]
        if a == b:
            if a not in g.loops:
                return False
        elif frozenset((a, b)) not in edge_set(g):
            return False
    return True


def hom_count(k, g) -> int:
    gl, ge = set(g.loops), edge_set(g)
    total = 0
    for phi in product(range(g.n), repeat=k.n):
        if any(phi[v] not in gl for v in k.loops):
            continue
        ok = True
        for u, v in k.edges:
            a, b = phi[u], phi[v]
            if (a == b and a not in gl) or (a != b and frozenset((a, b)) not in ge):
                ok = False
                break
        total += ok
    return total


def hom_matrix(h, g) -> np.ndarray:
    n = g.n
    out = np.zeros((n ** h.ell, n ** h.k), dtype=object)
    out[...] = 0
    for phi in product(range(g.n), repeat=h.graph.n):
        if not is_hom(h.graph, g, phi):
            continue
        r = sum(phi[v] * n ** (h.ell - 1 - i) for i, v in enumerate(h.out))
        c = sum(phi[v] * n ** (h.k - 1 - i) for i, v in enumerate(h.inp))
        out[r, c] += 1
    return out


def _maps(g1, g2):
    if g1.n != g2.n or len(g1.edges) != len(g2.edges) or len(g1.loops) != len(g2.loops):
        return
    e2 = edge_set(g2)
    for p in permutations(range(g1.n)):
        if {p[v] for v in g1.loops} == set(g2.loops) and all(frozenset((p[u], p[v])) in e2 for u, v in g1.edges):
            yield p


def isomorphic(g1, g2) -> bool:
    return next(_maps(g1, g2), None) is not None


def blg_isomorphic(h1, h2) -> bool:
    if h1.arity != h2.arity:
        return False
    for p in _maps(h1.graph, h2.graph):
        if tuple(p[x] for x in h1.out) == h2.out and tuple(p[x] for x in h1.inp) == h2.inp:
            return True
    return False


def automorphism_count(g) -> int:
    return sum(1 for _ in _maps(g, g))


def class_count(n: int, connected: bool = False, loops: bool = False) -> int:
    """Isomorphism classes by min-over-permutations encoding (n <= 5)."""
    slots = list(combinations(range(n), 2))
    seen = set()
    perms = list(permutations(range(n)))
    for bits in product((0, 1), repeat=len(slots)):
        edges = [s for s, b in zip(slots, bits) if b]
        for lbits in product((0, 1), repeat=n if loops else 0):
            lp = [v for v in range(n) if lbits and lbits[v]]
            if connected and not _connected(n, edges):
                continue
            key = min(
                (tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges)), tuple(sorted(p[v] for v in lp)))
                for p in perms
            )
            seen.add(key)
    return len(seen)


def _connected(n, edges) -> bool:
    if n == 0:
        return True
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    stack, seen = [0], {0}
    while stack:
        for w in adj[stack.pop()] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == n


def trace_power(g, m: int) -> int:
    a = np.array(g.adjacency_matrix(), dtype=object).reshape(g.n, g.n)
    out = np.eye(g.n, dtype=object)
    for _ in range(m):
        out = out.dot(a)
    return int(sum(out[i, i] for i in range(g.n)))


def noncrossing(blocks, order) -> bool:
    """Direct a < b < c < d test over every pair of blocks, positions from ``order``."""
    pos = [sorted(order[x] for x in b) for b in blocks]
    for x, y in combinations(pos, 2):
        for a, c in combinations(x, 2):
            for b, d in combinations(y, 2):
                if a < b < c < d or b < a < d < c:
                    return False
    return True
