"""Homomorphism counts and homomorphism matrices, exact.

Matrices are numpy object arrays of Python ints (or Fractions), shape
``(n**ell, n**k)``; row ``(u_1..u_ell)`` sits at ``sum u_i n**(ell-i)``.
The tree-decomposition DP runs in int64 only when ``n**|V(K)|`` cannot
overflow it, otherwise in object dtype.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Mapping, Sequence

import numpy as np

from .bilabeled import BiLabeledGraph
from .errors import InvalidArgument
from .graph import Graph


# -- matrices -----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class HomMatrix:
    n: int
    ell: int
    k: int
    data: np.ndarray  # object dtype, shape (n**ell, n**k)

    def __post_init__(self) -> None:
        d = np.asarray(self.data, dtype=object)
        shape = (self.n ** self.ell, self.n ** self.k)
        if d.shape != shape:
            d = d.reshape(shape)
        object.__setattr__(self, "data", d)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomMatrix):
            return NotImplemented
        return (self.n, self.ell, self.k) == (other.n, other.ell, other.k) and bool(
            np.array_equal(self.data, other.data)
        )

    __hash__ = None  # type: ignore[assignment]

    @property
    def entries(self) -> list:
        return list(self.data.ravel())

    def entry(self, rows: Sequence[int], cols: Sequence[int]) -> int:
        return self.data[_index(rows, self.n), _index(cols, self.n)]

    def to_json(self) -> dict:
        return {
            "n": self.n, "out_arity": self.ell, "in_arity": self.k,
            "entries": [str(x) for x in self.data.ravel()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "HomMatrix":
        vals = [Fraction(s) if "/" in s else int(s) for s in obj["entries"]]
        return cls(obj["n"], obj["out_arity"], obj["in_arity"], np.array(vals, dtype=object))


ExactMatrix = HomMatrix


def _index(tup: Sequence[int], n: int) -> int:
    i = 0
    for u in tup:
        i = i * n + u
    return i


def _mat(n: int, ell: int, k: int, data) -> HomMatrix:
    return HomMatrix(n, ell, k, np.asarray(data, dtype=object).reshape(n ** ell, n ** k))


def multiply(x: HomMatrix, y: HomMatrix) -> HomMatrix:
    if x.n != y.n or x.k != y.ell:
        raise InvalidArgument("dimension mismatch in multiply")
    return _mat(x.n, x.ell, y.k, x.data.dot(y.data))


def tensor(x: HomMatrix, y: HomMatrix) -> HomMatrix:
    if x.n != y.n:
        raise InvalidArgument("dimension mismatch in tensor")
    return _mat(x.n, x.ell + y.ell, x.k + y.k, np.kron(x.data, y.data))


def schur(x: HomMatrix, y: HomMatrix) -> HomMatrix:
    if (x.n, x.ell, x.k) != (y.n, y.ell, y.k):
        raise InvalidArgument("dimension mismatch in schur")
    return _mat(x.n, x.ell, x.k, x.data * y.data)


def transpose(x: HomMatrix) -> HomMatrix:
    return _mat(x.n, x.k, x.ell, x.data.T.copy())


def scale(c, x: HomMatrix) -> HomMatrix:
    return _mat(x.n, x.ell, x.k, x.data * c)


def add(x: HomMatrix, y: HomMatrix) -> HomMatrix:
    if (x.n, x.ell, x.k) != (y.n, y.ell, y.k):
        raise InvalidArgument("dimension mismatch in add")
    return _mat(x.n, x.ell, x.k, x.data + y.data)


def matrix_algebra(op: str, *args) -> HomMatrix:
    table = {"multiply": multiply, "tensor": tensor, "schur": schur,
             "transpose": transpose, "scale": scale, "add": add}
    if op not in table:
        raise InvalidArgument(f"unknown matrix op {op!r}")
    return table[op](*args)


def sum_entries(t: HomMatrix) -> int:
    return sum(t.data.ravel().tolist(), 0)


def adjacency(g: Graph) -> HomMatrix:
    return _mat(g.n, 1, 1, g.adjacency_matrix())


def mult_map(n: int, ell: int, k: int) -> HomMatrix:
    """0/1 matrix supported on constant index tuples (``[[n]]`` when ``ell = k = 0``)."""
    d = np.zeros((n ** ell, n ** k), dtype=object)
    d[...] = 0
    for i in range(n):
        d[_index([i] * ell, n), _index([i] * k, n)] += 1
    return HomMatrix(n, ell, k, d)


def identity_matrix(n: int) -> HomMatrix:
    return mult_map(n, 1, 1)


def swap_matrix(n: int) -> HomMatrix:
    d = np.zeros((n * n, n * n), dtype=object)
    d[...] = 0
    for i in range(n):
        for j in range(n):
            d[i * n + j, j * n + i] = 1
    return HomMatrix(n, 2, 2, d)


def partition_matrix(p, n: int) -> HomMatrix:
    """``n**e(P)`` times the indicator that index tuples are constant on every block."""
    ell, k = p.lower, p.upper
    d = np.zeros((n ** ell, n ** k), dtype=object)
    d[...] = 0
    weight = n ** p.empty
    # blocks may share a value; only equality inside a block is forced
    for vals in product(range(n), repeat=len(p.blocks)):
        row, col = [0] * ell, [0] * k
        for b, val in zip(p.blocks, vals):
            for side, i in b:
                (row if side == "L" else col)[i - 1] = val
        d[_index(row, n), _index(col, n)] = weight
    return HomMatrix(n, ell, k, d)


# -- brute force --------------------------------------------------------------

def _order(k: Graph, first: Sequence[int] = ()) -> list[int]:
    order, seen = [], set()
    for v in first:
        if v not in seen:
            seen.add(v)
            order.append(v)
    # grow by maximum number of already-placed neighbours
    while len(order) < k.n:
        best = max(
            (v for v in range(k.n) if v not in seen),
            key=lambda v: (len(k.adj[v] & seen), -v),
        )
        seen.add(best)
        order.append(best)
    return order


def homomorphisms(
    k: Graph, g: Graph, fixed: Mapping[int, int] | None = None, first: Sequence[int] = ()
) -> Iterator[list[int]]:
    """All homomorphisms ``K -> G`` extending ``fixed``, as image lists.

    Vertices in ``first`` are placed early so their images prune the search.
    The yielded list is reused between iterations; copy it to keep it.
    """
    fixed = dict(fixed or {})
    order = _order(k, list(fixed) + list(first))
    pos = {v: i for i, v in enumerate(order)}
    back = [[w for w in k.adj[v] if pos[w] < pos[v]] for v in order]
    looped = [v in k.loops for v in order]
    img = [-1] * k.n
    # closed neighbourhoods for looped targets: adjacent K-vertices may share a looped image
    gadj = [g.adj[x] | {x} if x in g.loops else g.adj[x] for x in range(g.n)]
    gloops = g.loops

    def rec(i: int):
        if i == len(order):
            yield img
            return
        v = order[i]
        if v in fixed:
            cands = [fixed[v]]
        elif back[i]:
            cands = sorted(gadj[img[back[i][0]]])
        else:
            cands = range(g.n)
        for c in cands:
            if looped[i] and c not in gloops:
                continue
            if all(c in gadj[img[w]] for w in back[i]):
                img[v] = c
                yield from rec(i + 1)
        img[v] = -1

    yield from rec(0)


def hom_count(k: Graph, g: Graph) -> int:
    """Brute-force count of homomorphisms ``K -> G`` (loops must map to loops)."""
    return sum(1 for _ in homomorphisms(k, g))


def hom_matrix_brute(h: BiLabeledGraph, g: Graph) -> HomMatrix:
    n = g.n
    d = np.zeros((n ** h.ell, n ** h.k), dtype=object)
    d[...] = 0
    for img in homomorphisms(h.graph, g, first=h.out + h.inp):
        d[_index([img[v] for v in h.out], n), _index([img[v] for v in h.inp], n)] += 1
    return HomMatrix(n, h.ell, h.k, d)


# -- tree decompositions ------------------------------------------------------

@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[frozenset[int], ...]
    parent: tuple[int | None, ...]  # index of the parent bag, None at roots

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def validate(self, k: Graph) -> None:
        if len(self.bags) != len(self.parent):
            raise InvalidArgument("bags and parent links differ in length")
        for i, p in enumerate(self.parent):
            if p is not None and not 0 <= p < len(self.bags):
                raise InvalidArgument("parent index out of range")
        for u, v in k.edges:
            if not any(u in b and v in b for b in self.bags):
                raise InvalidArgument(f"edge {(u, v)} not covered")
        for v in range(k.n):
            holders = [i for i, b in enumerate(self.bags) if v in b]
            if not holders:
                raise InvalidArgument(f"vertex {v} not covered")
            # connected iff exactly one holder has its parent outside the holder set
            tops = [i for i in holders if self.parent[i] is None or self.parent[i] not in holders]
            if len(tops) != 1:
                raise InvalidArgument(f"bags holding {v} are not a subtree")
        # acyclicity: following parents must terminate
        for i in range(len(self.bags)):
            seen, j = set(), i
            while j is not None:
                if j in seen:
                    raise InvalidArgument("parent links contain a cycle")
                seen.add(j)
                j = self.parent[j]


def min_fill_decomposition(k: Graph, keep: Sequence[int] = ()) -> TreeDecomposition:
    """Elimination-order decomposition (min-fill, ties by degree then id).

    Vertices in ``keep`` are never eliminated; they share one root bag.
    """
    keep = list(dict.fromkeys(keep))
    nb = {v: set(k.adj[v]) for v in range(k.n)}
    for a in keep:
        nb[a] |= set(keep) - {a}
    elim: list[tuple[int, frozenset[int]]] = []
    free = [v for v in range(k.n) if v not in set(keep)]
    while free:
        def cost(v):
            ns = list(nb[v])
            fill = sum(1 for i, x in enumerate(ns) for y in ns[i + 1:] if y not in nb[x])
            return (fill, len(ns), v)

        x = min(free, key=cost)
        ns = nb[x]
        for a in ns:
            nb[a] |= ns - {a}
            nb[a].discard(x)
        elim.append((x, frozenset(ns | {x})))
        free.remove(x)
        del nb[x]
    bags = [b for _, b in elim]
    pos = {x: i for i, (x, _) in enumerate(elim)}
    root = len(bags) if keep else None
    parent: list[int | None] = []
    for x, b in elim:
        later = [pos[y] for y in b if y != x and y in pos]
        if later:
            parent.append(min(later))  # earliest-eliminated neighbour
        elif len(b) > 1:
            parent.append(root)  # only kept neighbours remain
        else:
            parent.append(None)
    if keep:
        bags.append(frozenset(keep))
        parent.append(None)
    return TreeDecomposition(tuple(bags), tuple(parent))


def _dtype_for(k: Graph, g: Graph):
    return np.int64 if g.n ** max(k.n, 1) < 2 ** 62 else object


def _expand(arr: np.ndarray, fvars: Sequence[int], bvars: Sequence[int]) -> np.ndarray:
    present = [v for v in bvars if v in fvars]
    arr = np.transpose(arr, [list(fvars).index(v) for v in present])
    shape = [arr.shape[present.index(v)] if v in present else 1 for v in bvars]
    return arr.reshape(shape)


def _dp(k: Graph, g: Graph, td: TreeDecomposition, pinned: Mapping[int, int], keep: Sequence[int]):
    n = g.n
    dt = _dtype_for(k, g)
    A = np.array(g.adjacency_matrix(), dtype=dt).reshape(n, n)
    loopvec = np.array([1 if v in g.loops else 0 for v in range(n)], dtype=dt)
    nbags = len(td.bags)
    children: list[list[int]] = [[] for _ in range(nbags)]
    roots = []
    for i, p in enumerate(td.parent):
        (roots if p is None else children[p]).append(i)
    # assign factors to the first bag (in index order) holding their variables
    assigned: list[list[tuple[tuple[int, ...], np.ndarray]]] = [[] for _ in range(nbags)]
    for u, v in sorted(k.edges):
        i = next(i for i, b in enumerate(td.bags) if u in b and v in b)
        assigned[i].append(((u, v), A))
    for v in sorted(k.loops):
        i = next(i for i, b in enumerate(td.bags) if v in b)
        assigned[i].append(((v,), loopvec))
    for v, img in sorted(pinned.items()):
        i = next(i for i, b in enumerate(td.bags) if v in b)
        e = np.zeros(n, dtype=dt)
        e[img] = 1
        assigned[i].append(((v,), e))

    order: list[int] = []
    stack = list(roots)
    while stack:
        i = stack.pop()
        order.append(i)
        stack.extend(children[i])
    msgs: dict[int, tuple[list[int], np.ndarray]] = {}
    keep_set = set(keep)
    results = []
    for i in reversed(order):
        bv = sorted(td.bags[i])
        t = np.ones((n,) * len(bv), dtype=dt)
        for fv, arr in assigned[i]:
            t = t * _expand(arr, fv, bv)
        for c in children[i]:
            cv, carr = msgs.pop(c)
            t = t * _expand(carr, cv, bv)
        p = td.parent[i]
        target = sorted(td.bags[p]) if p is not None else [v for v in bv if v in keep_set]
        axes = tuple(j for j, v in enumerate(bv) if v not in target)
        red = t.sum(axis=axes) if axes else t
        outv = [v for v in bv if v in target]
        if p is None:
            results.append((outv, red))
        else:
            msgs[i] = (outv, red)
    return results


def hom_count_dp(
    k: Graph,
    g: Graph,
    td: TreeDecomposition | None = None,
    pinned: Mapping[int, int] | None = None,
) -> int:
    """Homomorphism count through a tree decomposition of ``K``."""
    pinned = dict(pinned or {})
    for v, img in pinned.items():
        if not (0 <= v < k.n and 0 <= img < g.n):
            raise InvalidArgument("pinned map out of range")
    if k.n == 0:
        return 1
    if g.n == 0:
        return 0
    if td is None:
        td = min_fill_decomposition(k)
    else:
        td.validate(k)
    total = 1
    for _, arr in _dp(k, g, td, pinned, ()):
        total *= int(arr)
    return total


def hom_tensor(k: Graph, g: Graph, labeled: Sequence[int]) -> np.ndarray:
    """Object array ``T[x_1..x_r]`` = homs with ``labeled[i] -> x_i`` (distinct ``labeled``)."""
    labeled = list(labeled)
    if len(set(labeled)) != len(labeled):
        raise InvalidArgument("labeled vertices must be distinct")
    n = g.n
    if not labeled:
        return np.array(hom_count_dp(k, g), dtype=object)
    td = min_fill_decomposition(k, keep=labeled)
    out = np.ones((n,) * len(labeled), dtype=object)
    for outv, arr in _dp(k, g, td, {}, labeled):
        arr = np.asarray(arr).astype(object)
        if outv:
            out = out * _expand(arr, outv, labeled)
        else:
            out = out * arr
    return out


def hom_matrix_dp(h: BiLabeledGraph, g: Graph) -> HomMatrix:
    n = g.n
    tup = list(h.out) + list(h.inp)
    uniq = list(dict.fromkeys(tup))
    if n == 0 or h.graph.n == 0:
        return hom_matrix_brute(h, g)
    t = hom_tensor(h.graph, g, uniq)
    full = np.zeros((n,) * len(tup), dtype=object)
    full[...] = 0
    if tup:
        grids = np.indices((n,) * len(uniq))
        where = {v: i for i, v in enumerate(uniq)}
        full[tuple(grids[where[v]] for v in tup)] = t
    else:
        full = t
    return _mat(n, h.ell, h.k, full)


def hom_matrix(h: BiLabeledGraph, g: Graph, method: str = "auto") -> HomMatrix:
    """``T^{K -> G}``: entry ``(u, v)`` counts homs with ``a -> u`` and ``b -> v``."""
    if method == "brute":
        return hom_matrix_brute(h, g)
    if method == "dp":
        return hom_matrix_dp(h, g)
    if method != "auto":
        raise InvalidArgument(f"unknown method {method!r}")
    free = h.graph.n - len(set(h.out + h.inp))
    cheap = g.n ** free * max(1, g.n) ** min(len(set(h.out + h.inp)), 2) <= 50_000
    return hom_matrix_brute(h, g) if cheap else hom_matrix_dp(h, g)


# -- memoization --------------------------------------------------------------

class HomCache:
    """Thread-safe memo of counts keyed by canonical certificates of ``(K, G)``.

    An optional ``store`` with ``get``/``put`` makes entries persistent.
    """

    def __init__(self, store=None) -> None:
        self._lock = threading.Lock()
        self._mem: dict[tuple[bytes, bytes], int] = {}
        self.store = store
        self.hits = 0
        self.misses = 0

    def count(self, k: Graph, g: Graph) -> int:
        from .canon import certificate

        key = (certificate(k), _big_certificate(g))
        with self._lock:
            if key in self._mem:
                self.hits += 1
                return self._mem[key]
        val = self.store.get(key) if self.store is not None else None
        if val is None:
            val = hom_count_dp(k, g)
            if self.store is not None:
                self.store.put(key, val)
        with self._lock:
            self.misses += 1
            self._mem[key] = val
        return val


def _big_certificate(g: Graph) -> bytes:
    # targets may exceed the canonical-search limit; fall back to the exact labeled form
    from .canon import CANON_LIMIT, certificate

    if g.n <= CANON_LIMIT:
        return certificate(g)
    return b"L" + repr((g.n, sorted(g.edges), sorted(g.loops))).encode()
