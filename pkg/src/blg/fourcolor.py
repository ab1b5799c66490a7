"""The S4 Cayley pair and the colouring checks around it.

``H`` uses every element of order two as connection set and ``G`` the
double transpositions together with the 4-cycles. Permutations are tuples
of images of ``(0, 1, 2, 3)``; vertex ``i`` of either graph is the ``i``-th
permutation in lexicographic order.
"""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from itertools import permutations
from pathlib import Path
from typing import Sequence

from .enumeration import enumerate_graphs
from .errors import InvalidArgument
from .graph import Graph, complete_graph, is_connected
from .hommatrix import hom_count_dp, homomorphisms
from .isotest import planar_distinguish

Perm = tuple[int, ...]
S4: tuple[Perm, ...] = tuple(permutations(range(4)))
IDENTITY: Perm = (0, 1, 2, 3)


def mul(p: Perm, q: Perm) -> Perm:
    """``p q`` acting on the right first: ``(p q)(x) = p(q(x))``."""
    return tuple(p[q[x]] for x in range(len(q)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def cycle_type(p: Perm) -> tuple[int, ...]:
    seen, lens = set(), []
    for s in range(len(p)):
        if s in seen:
            continue
        n, x = 0, s
        while x not in seen:
            seen.add(x)
            x = p[x]
            n += 1
        lens.append(n)
    return tuple(sorted(lens, reverse=True))


def order(p: Perm) -> int:
    from math import lcm

    return lcm(*cycle_type(p))


@dataclass(frozen=True)
class CayleySpec:
    name: str
    connection: frozenset[Perm]

    def __post_init__(self) -> None:
        if IDENTITY in self.connection:
            raise InvalidArgument("connection set must not contain the identity")
        if any(inverse(p) not in self.connection for p in self.connection):
            raise InvalidArgument("connection set must be closed under inverses")


def connection_set(which: str) -> CayleySpec:
    if which == "H":
        conn = [p for p in S4 if order(p) == 2]
    elif which == "G":
        conn = [p for p in S4 if cycle_type(p) in ((2, 2), (4,))]
    else:
        raise InvalidArgument("which must be 'G' or 'H'")
    return CayleySpec(which, frozenset(conn))


def cayley_graph(spec: CayleySpec) -> Graph:
    idx = {p: i for i, p in enumerate(S4)}
    pairs = [(idx[u], idx[v]) for u in S4 for v in S4 if idx[u] < idx[v] and mul(u, inverse(v)) in spec.connection]
    return Graph.from_pairs(len(S4), pairs)


def cayley_s4(which: str) -> Graph:
    return cayley_graph(connection_set(which))


# -- solvers ---------------------------------------------------------------------

def colorability(g: Graph, k: int) -> list[int] | None:
    """A proper ``k``-colouring, or ``None`` after exhausting the search.

    DSATUR-style branching with forward checking; colours are introduced in
    increasing order to break the symmetry between them.
    """
    if k > 8:
        raise InvalidArgument("at most 8 colours supported")
    if g.loops:
        return None
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None
    color = [-1] * n
    domains = [set(range(k)) for _ in range(n)]

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if color[v] < 0:
                kk = (len(domains[v]), -g.degree(v), v)
                if key is None or kk < key:
                    best, key = v, kk
        return best

    def rec(used: int) -> bool:
        v = pick()
        if v < 0:
            return True
        for c in sorted(domains[v]):
            if c > used:
                break
            removed = []
            ok = True
            for w in g.adj[v]:
                if color[w] < 0 and c in domains[w]:
                    domains[w].discard(c)
                    removed.append(w)
                    if not domains[w]:
                        ok = False
            color[v] = c
            if ok and rec(max(used, c + 1)):
                return True
            color[v] = -1
            for w in removed:
                domains[w].add(c)
        return False

    if not rec(0):
        return None
    assert is_proper_coloring(g, color)
    return color


def is_proper_coloring(g: Graph, color: Sequence[int]) -> bool:
    return not g.loops and all(color[u] != color[v] for u, v in g.edges)


def is_homomorphism(k: Graph, g: Graph, phi: Sequence[int]) -> bool:
    if len(phi) != k.n or any(not 0 <= x < g.n for x in phi):
        return False
    if any(phi[v] not in g.loops for v in k.loops):
        return False
    return all((phi[u] == phi[v] and phi[u] in g.loops) or g.has_edge(phi[u], phi[v]) for u, v in k.edges)


def hom_exists(k: Graph, g: Graph) -> list[int] | None:
    """A homomorphism ``K -> G`` as an image list, or ``None``."""
    # maps into a loopless complete graph are colourings; use the stronger solver
    if not g.loops and len(g.edges) == g.n * (g.n - 1) // 2:
        phi = colorability(k, g.n)
    else:
        phi = next((list(img) for img in homomorphisms(k, g)), None)
    if phi is not None and not is_homomorphism(k, g, phi):
        raise AssertionError("solver returned a non-homomorphism")
    return phi


def coset_coloring() -> list[int]:
    """Colour of ``u`` in G: the right coset of the stabiliser of 3, read off as ``u^{-1}(3)``.

    That stabiliser is the subgroup generated by (123) and (23) in 1-based
    notation, and it avoids the connection set of G.
    """
    return [inverse(u)[3] for u in S4]


def k4_in_g() -> list[int]:
    """Identity plus the three double transpositions: a K4 in G."""
    idx = {p: i for i, p in enumerate(S4)}
    return [idx[IDENTITY]] + sorted(idx[p] for p in S4 if cycle_type(p) == (2, 2))


# -- report ------------------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)


@dataclass
class FourColorConfig:
    size: int = 5
    jobs: int = 1


@dataclass
class Report:
    config: FourColorConfig
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failing(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"passed": self.passed, "seconds": round(self.seconds, 3), "config": asdict(self.config),
                "checks": [asdict(c) for c in self.checks]}


def verify_theorem(config: FourColorConfig | None = None, report_path: str | Path | None = None) -> Report:
    cfg = config or FourColorConfig()
    rep = Report(cfg)
    t0 = time.perf_counter()
    add = lambda name, ok, **d: rep.checks.append(Check(name, bool(ok), d))  # noqa: E731

    G, H = cayley_s4("G"), cayley_s4("H")
    K4 = complete_graph(4)
    for name, g in (("G", G), ("H", H)):
        degs = sorted({g.degree(v) for v in range(g.n)})
        add(f"{name}: 24 vertices, 9-regular, connected", g.n == 24 and degs == [9] and is_connected(g),
            degrees=degs)

    cos = coset_coloring()
    add("G: coset colouring is proper", is_proper_coloring(G, cos), colors=len(set(cos)))
    add("G: 4-colourable", colorability(G, 4) is not None)
    clique = k4_in_g()
    add("K4 -> G via identity and double transpositions", is_homomorphism(K4, G, clique), image=clique)
    add("K4 -> G found by search", hom_exists(K4, G) is not None)
    add("H: not 4-colourable", colorability(H, 4) is None)
    add("H -> K4: none", hom_exists(H, K4) is None)
    five = colorability(H, 5)
    add("H: 5-colourable (chromatic number 5)", five is not None)
    add("K4 -> H exists", hom_exists(K4, H) is not None)

    v = planar_distinguish(G, H, cfg.size, jobs=cfg.jobs)
    add(f"G, H indistinguishable by connected planar K <= {cfg.size}", not v.distinguished, **v.to_json())

    mismatch_counts, mismatch_color = [], []
    corpus = [k for n in range(1, cfg.size + 1) for k in enumerate_graphs(n, connected=True, planar=True)]
    for k in corpus:
        if hom_count_dp(k, G) != hom_count_dp(k, H):
            mismatch_counts.append(sorted(k.edges))
        if (colorability(k, 4) is not None) != (hom_exists(k, H) is not None):
            mismatch_color.append(sorted(k.edges))
    add("hom(K,G) = hom(K,H) over the corpus", not mismatch_counts, corpus=len(corpus), failures=mismatch_counts)
    add("4-colourable iff hom to H over the corpus", not mismatch_color, corpus=len(corpus), failures=mismatch_color)

    rep.seconds = time.perf_counter() - t0
    if report_path is not None:
        Path(report_path).write_text(json.dumps(rep.to_json(), indent=2, default=str))
    return rep
