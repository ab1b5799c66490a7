"""Generator expressions, their evaluation, and plucking decomposition of P.

Every member of P is written over the leaves ``M10`` (unit), ``M12``
(multiplication) and ``A`` (adjacency) using composition ``o``, tensor ``x``
and transpose ``t``. ``S`` (swap) is accepted as a leaf for expressions of
the full category but never produced by :func:`decompose`.

The decomposition removes one vertex per step. The removed vertex ``v``
occurs consecutively in the cyclic tuple ``(a_1..a_ell, b_k..b_1)`` and its
neighbours are ordered by a rotation system of a planar embedding of the
apexed envelope with ``v``'s cycle block contracted.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import bilabeled as bl
from .bilabeled import BiLabeledGraph
from .errors import InvalidArgument, ParseError
from .graph import Graph, delete_vertex
from .hommatrix import HomMatrix, adjacency, hom_matrix, mult_map, swap_matrix
from .planarity import in_P, is_planar

log = logging.getLogger(__name__)

LEAVES = ("M10", "M12", "A", "S")
_LEAF_ARITY = {"M10": (1, 0), "M12": (1, 2), "A": (1, 1), "S": (2, 2)}


# -- expressions --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Expr:
    """Expression node: a leaf name, or ``o``/``x`` with two children, or ``t`` with one.

    ``const`` leaves wrap an arbitrary bi-labeled graph; they only appear in
    identity checks and are never produced by :func:`decompose`.
    """

    kind: str
    children: tuple["Expr", ...] = ()
    const: BiLabeledGraph | None = None
    arity: tuple[int, int] = field(init=False)

    def __post_init__(self) -> None:
        c = self.children
        if self.kind in _LEAF_ARITY:
            ar = _LEAF_ARITY[self.kind]
        elif self.kind == "const":
            if self.const is None:
                raise InvalidArgument("const leaf needs a graph")
            ar = self.const.arity
        elif self.kind == "o":
            if c[0].arity[1] != c[1].arity[0]:
                raise InvalidArgument(f"compose arity mismatch {c[0].arity} o {c[1].arity}")
            ar = (c[0].arity[0], c[1].arity[1])
        elif self.kind == "x":
            ar = (c[0].arity[0] + c[1].arity[0], c[0].arity[1] + c[1].arity[1])
        elif self.kind == "t":
            ar = (c[0].arity[1], c[0].arity[0])
        else:
            raise InvalidArgument(f"unknown node kind {self.kind!r}")
        object.__setattr__(self, "arity", ar)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Expr):
            return NotImplemented
        return to_string(self) == to_string(other)

    def __hash__(self) -> int:
        return hash(to_string(self))

    def __str__(self) -> str:
        return to_string(self)

    def leaves(self) -> set[str]:
        out, stack = set(), [self]
        while stack:
            e = stack.pop()
            if e.children:
                stack.extend(e.children)
            else:
                out.add(e.kind)
        return out

    def size(self) -> int:
        return 1 + sum(c.size() for c in self.children)


def leaf(name: str) -> Expr:
    if name not in LEAVES:
        raise InvalidArgument(f"unknown leaf {name!r}")
    return Expr(name)


def const(h: BiLabeledGraph) -> Expr:
    return Expr("const", const=h)


def ocomp(*es: Expr) -> Expr:
    """Left-to-right composition chain ``e1 o e2 o ...``."""
    out = es[-1]
    for e in reversed(es[:-1]):
        out = Expr("o", (e, out))
    return out


def otens(*es: Expr | None) -> Expr:
    """Tensor chain; ``None`` entries (empty tensor powers) are skipped."""
    items = [e for e in es if e is not None]
    if not items:
        raise InvalidArgument("empty tensor product")
    out = items[0]
    for e in items[1:]:
        out = Expr("x", (out, e))
    return out


def otr(e: Expr) -> Expr:
    return Expr("t", (e,))


def to_string(e: Expr) -> str:
    parts: list[str] = []

    def walk(x: Expr) -> None:
        if x.kind == "const":
            parts.append(f"<const {x.const!r}>")
        elif not x.children:
            parts.append(x.kind)
        else:
            parts.append("(" + x.kind)
            for c in x.children:
                parts.append(" ")
                walk(c)
            parts.append(")")

    walk(e)
    return "".join(parts)


def parse_expr(text: str) -> Expr:
    """Parse prefix terms such as ``(o M12 (t M12))``; tokens M10 M12 A S o x t."""
    toks = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def node() -> Expr:
        nonlocal pos
        if pos >= len(toks):
            raise ParseError("unexpected end of expression")
        tok = toks[pos]
        pos += 1
        if tok in LEAVES:
            return Expr(tok)
        if tok != "(":
            raise ParseError(f"unexpected token {tok!r}")
        if pos >= len(toks):
            raise ParseError("unexpected end of expression")
        op = toks[pos]
        pos += 1
        want = {"o": 2, "x": 2, "t": 1}.get(op)
        if want is None:
            raise ParseError(f"unknown operator {op!r}")
        kids = [node() for _ in range(want)]
        if pos >= len(toks) or toks[pos] != ")":
            raise ParseError("expected ')'")
        pos += 1
        try:
            return Expr(op, tuple(kids))
        except InvalidArgument as exc:
            raise ParseError(str(exc)) from exc

    e = node()
    if pos != len(toks):
        raise ParseError("trailing tokens after expression")
    return e


# -- macros over the generators -------------------------------------------------

def e_I() -> Expr:
    return ocomp(leaf("M12"), otr(leaf("M12")))


def e_pow(e: Expr | Callable[[], Expr], r: int) -> Expr | None:
    """``e`` tensored ``r`` times, ``None`` when ``r = 0``."""
    if r <= 0:
        return None
    make = e if callable(e) else (lambda: e)
    return otens(*[make() for _ in range(r)])


def _e_M1k(k: int) -> Expr:
    if k == 0:
        return leaf("M10")
    if k == 1:
        return e_I()
    out = leaf("M12")
    # M^{1,j+1} = M^{1,j} o (M^{1,2} x I^{j-1})
    for j in range(2, k):
        out = ocomp(out, otens(leaf("M12"), e_pow(e_I, j - 1)))
    return out


def e_M(ell: int, k: int) -> Expr:
    """``M^{ell,k}`` from ``M10`` and ``M12`` (``M^{ell,1} o M^{1,k}``)."""
    if ell == 1:
        return _e_M1k(k)
    if k == 1:
        return otr(_e_M1k(ell))
    if ell == 0:
        return ocomp(otr(leaf("M10")), _e_M1k(k))
    return ocomp(otr(_e_M1k(ell)), _e_M1k(k))


def e_ringM(ell: int, k: int) -> Expr:
    """Looped vertex: ``M^{ell,1} o (M12 o (A x I) o M21) o M^{1,k}``."""
    core = ocomp(leaf("M12"), otens(leaf("A"), e_I()), otr(leaf("M12")))
    chain = []
    if ell != 1:
        chain.append(e_M(ell, 1))
    chain.append(core)
    if k != 1:
        chain.append(e_M(1, k))
    return ocomp(*chain)


def _center(m: int, j: int, looped: bool) -> Expr:
    return e_ringM(m, j) if looped else e_M(m, j)


def e_star(m: int, d: int, looped: bool = False) -> Expr:
    """``S^{m,d} = M^{m,d} o A^{x d}``."""
    if d == 0:
        return _center(m, 0, looped)
    return ocomp(_center(m, d, looped), e_pow(lambda: leaf("A"), d))


def e_star_R(m: int, d: int, looped: bool = False) -> Expr:
    """``S_R^{m,d} = M^{m,d+1} o (A^{x d} x I)``."""
    if d == 0:
        return _center(m, 1, looped)
    return ocomp(_center(m, d + 1, looped), otens(e_pow(lambda: leaf("A"), d), e_I()))


def e_star_L(m: int, d: int, looped: bool = False) -> Expr:
    """``S_L^{m,d} = M^{m,d+1} o (I x A^{x d})``."""
    if d == 0:
        return _center(m, 1, looped)
    return ocomp(_center(m, d + 1, looped), otens(e_I(), e_pow(lambda: leaf("A"), d)))


# -- evaluation -----------------------------------------------------------------

def eval_blg(e: Expr) -> BiLabeledGraph:
    memo: dict[int, BiLabeledGraph] = {}

    def ev(x: Expr) -> BiLabeledGraph:
        key = id(x)
        if key in memo:
            return memo[key]
        if x.kind == "M10":
            r = bl.M(1, 0)
        elif x.kind == "M12":
            r = bl.M(1, 2)
        elif x.kind == "A":
            r = bl.A()
        elif x.kind == "S":
            r = bl.S()
        elif x.kind == "const":
            r = x.const
        elif x.kind == "o":
            r = bl.compose(ev(x.children[0]), ev(x.children[1]))
        elif x.kind == "x":
            r = bl.tensor(ev(x.children[0]), ev(x.children[1]))
        else:
            r = bl.transpose(ev(x.children[0]))
        memo[key] = r
        return r

    return ev(e)


class _Kron:
    """Lazy tensor product: a list of dense factors ``(array, ell_i, k_i)``."""

    __slots__ = ("n", "factors")

    def __init__(self, n: int, factors: list[tuple[np.ndarray, int, int]]):
        self.n = n
        self.factors = factors

    @property
    def ell(self) -> int:
        return sum(f[1] for f in self.factors)

    @property
    def k(self) -> int:
        return sum(f[2] for f in self.factors)

    def dense_size(self) -> int:
        return self.n ** (self.ell + self.k)

    def dense(self) -> np.ndarray:
        out = np.ones((1, 1), dtype=object)
        for arr, _, _ in self.factors:
            out = np.kron(out, arr)
        return out

    def transpose(self) -> "_Kron":
        return _Kron(self.n, [(a.T, k, l) for a, l, k in self.factors])


def _apply_left(kr: _Kron, dense: np.ndarray) -> np.ndarray:
    """``kr @ dense`` one factor at a time (dense has ``n**kr.k`` rows)."""
    n = kr.n
    cols = dense.shape[1]
    t = dense.reshape(1, n ** kr.k, cols)
    done_out, rest_in = 1, kr.k
    for arr, li, ki in kr.factors:
        rest_in -= ki
        t = t.reshape(done_out, n ** ki, n ** rest_in * cols)
        if not _is_identity(arr):
            t = np.tensordot(arr, t, axes=([1], [1]))  # (n^li, done_out, rest)
            t = np.moveaxis(t, 0, 1)
        done_out *= n ** li
    return t.reshape(n ** kr.ell, cols)


def _is_identity(arr: np.ndarray) -> bool:
    return arr.shape[0] == arr.shape[1] and bool(np.array_equal(arr, np.eye(arr.shape[0], dtype=object)))


def _compose_vals(x: _Kron, y: _Kron) -> _Kron:
    n = x.n
    # factorwise when the factor boundaries line up
    xs = [f[2] for f in x.factors]
    ys = [f[1] for f in y.factors]
    if xs == ys:
        return _Kron(n, [(a.dot(b), la, kb) for (a, la, _), (b, _, kb) in zip(x.factors, y.factors)])
    if y.dense_size() <= x.dense_size():
        return _Kron(n, [(_apply_left(x, y.dense()), x.ell, y.k)])
    # (x y)^T = y^T x^T
    xt = x.dense().T
    res = _apply_left(y.transpose(), xt).T
    return _Kron(n, [(np.ascontiguousarray(res), x.ell, y.k)])


def eval_matrix(e: Expr, g: Graph) -> HomMatrix:
    """Evaluate ``e`` by matrix algebra over the generator matrices of ``g``."""
    n = g.n
    memo: dict[int, _Kron] = {}
    base = {
        "M10": mult_map(n, 1, 0).data,
        "M12": mult_map(n, 1, 2).data,
        "A": adjacency(g).data,
        "S": swap_matrix(n).data,
    }

    def ev(x: Expr) -> _Kron:
        key = id(x)
        if key in memo:
            return memo[key]
        if x.kind in base:
            r = _Kron(n, [(base[x.kind], *x.arity)])
        elif x.kind == "const":
            r = _Kron(n, [(hom_matrix(x.const, g).data, *x.arity)])
        elif x.kind == "o":
            r = _compose_vals(ev(x.children[0]), ev(x.children[1]))
        elif x.kind == "x":
            a, b = ev(x.children[0]), ev(x.children[1])
            r = _Kron(n, a.factors + b.factors)
        else:
            r = ev(x.children[0]).transpose()
        memo[key] = r
        return r

    val = ev(e)
    return HomMatrix(n, e.arity[0], e.arity[1], val.dense())


def eval_expr(e: Expr, mode: str = "as_blg", target: Graph | None = None):
    if mode == "as_blg":
        return eval_blg(e)
    if mode == "as_matrix":
        if target is None:
            raise InvalidArgument("as_matrix needs a target graph")
        return eval_matrix(e, target)
    raise InvalidArgument(f"unknown mode {mode!r}")


# -- plucking -------------------------------------------------------------------

@dataclass(frozen=True)
class PluckResult:
    """One plucking step; ``kprime`` is the smaller graph in the returned equation.

    case 1: ``h = (I^r x S^{m,d} x I^t) o kprime``
    case 2: ``h = kprime o (I^r x S^{m,d} x I^t)^*``
    case 3: ``h = (S_L^{m,d} x I^t) o (M^{1,r} x kprime)``
    case 4: ``h = (I^t x S_R^{m,d}) o (kprime x M^{1,r})``

    Looped stars replace the plain ones when ``looped``.
    """

    case: int
    looped: bool
    r: int
    m: int
    d: int
    t: int
    vertex: int
    kprime: BiLabeledGraph
    fallback: bool = False  # neighbour order needed the permutation search

    @property
    def case_id(self) -> str:
        return f"{self.case}{'o' if self.looped else ''}"

    def rebuild(self, sub: BiLabeledGraph | None = None) -> BiLabeledGraph:
        """Evaluate the step's equation with ``sub`` (default ``kprime``) plugged in."""
        kp = self.kprime if sub is None else sub
        lp, I = self.looped, bl.identity()

        def tens(*hs):
            out = hs[0]
            for h in hs[1:]:
                out = bl.tensor(out, h)
            return out

        ids = lambda r: [I] * r  # noqa: E731
        if self.case == 1:
            return bl.compose(tens(*ids(self.r), bl.star(self.m, self.d, lp), *ids(self.t)), kp)
        if self.case == 2:
            return bl.compose(kp, bl.transpose(tens(*ids(self.r), bl.star(self.m, self.d, lp), *ids(self.t))))
        if self.case == 3:
            return bl.compose(tens(bl.star_L(self.m, self.d, lp), *ids(self.t)), tens(bl.M(1, self.r), kp))
        return bl.compose(tens(*ids(self.t), bl.star_R(self.m, self.d, lp)), tens(kp, bl.M(1, self.r)))

    def expression(self, sub: Expr) -> Expr:
        """Expression for ``h`` given an expression ``sub`` for ``kprime``."""
        lp = self.looped
        if self.case == 1:
            return ocomp(otens(e_pow(e_I, self.r), e_star(self.m, self.d, lp), e_pow(e_I, self.t)), sub)
        if self.case == 2:
            return ocomp(sub, otr(otens(e_pow(e_I, self.r), e_star(self.m, self.d, lp), e_pow(e_I, self.t))))
        if self.case == 3:
            return ocomp(otens(e_star_L(self.m, self.d, lp), e_pow(e_I, self.t)), otens(e_M(1, self.r), sub))
        return ocomp(otens(e_pow(e_I, self.t), e_star_R(self.m, self.d, lp)), otens(sub, e_M(1, self.r)))


def _cyclic_interval(positions: set[int], L: int) -> bool:
    if not positions:
        return False
    if len(positions) == L:
        return True
    # exactly one maximal run around the cycle
    starts = [i for i in positions if (i - 1) % L not in positions]
    return len(starts) == 1


def _prefix(ps: set[int], length: int) -> bool:
    return bool(ps) and ps == set(range(1, len(ps) + 1)) and len(ps) <= length


def _suffix(ps: set[int], length: int) -> bool:
    return bool(ps) and ps == set(range(length - len(ps) + 1, length + 1))


def _linear(ps: set[int]) -> tuple[int, int] | None:
    if ps and max(ps) - min(ps) + 1 == len(ps):
        return min(ps), max(ps)
    return None


def select_vertex(h: BiLabeledGraph, case_order: Sequence[int] = (1, 2, 3, 4)) -> tuple[int, int]:
    """Pick ``(case, v)``: first applicable case in ``case_order``, lowest vertex id within it."""
    c = h.cyclic_tuple()
    if not c:
        return 1, 0
    L = len(c)
    found: dict[int, int] = {}
    for v in sorted(set(c)):
        cyc = {i for i, x in enumerate(c) if x == v}
        if not _cyclic_interval(cyc, L):
            continue
        pa = {i + 1 for i, x in enumerate(h.out) if x == v}
        pb = {j + 1 for j, x in enumerate(h.inp) if x == v}
        if not pb and _linear(pa):
            found.setdefault(1, v)
        elif not pa and _linear(pb):
            found.setdefault(2, v)
        elif _prefix(pa, h.ell) and _prefix(pb, h.k):
            found.setdefault(3, v)
        elif _suffix(pa, h.ell) and _suffix(pb, h.k):
            found.setdefault(4, v)
    for case in case_order:
        if case in found:
            return case, found[case]
    raise InvalidArgument("no vertex occurs consecutively; the input is not in P")


def _rotation_order(h: BiLabeledGraph, v: int, p: int, q: int) -> list[int]:
    """Neighbours of ``v`` ordered from the ``a_{p-1}`` side to the ``a_{q+1}`` side.

    ``v`` must occupy exactly the output positions ``p..q`` (1-indexed) and no
    input. The cycle block ``alpha_p..alpha_q`` is contracted into ``v``;
    the two boundary cycle edges are subdivided by ``w1`` (towards
    ``alpha_{p-1}``) and ``w2`` (towards ``alpha_{q+1}``).
    """
    g, n = h.graph, h.graph.n
    nbrs = sorted(g.adj[v])
    c = h.cyclic_tuple()
    L = len(c)
    block = set(range(p - 1, q))
    rest = [i for i in range(L) if i not in block]
    if not rest:
        rot = is_planar(g).rotation
        return list(rot[v]) if rot else nbrs
    # vertex ids: K = 0..n-1, cycle position i -> n + i, w1, w2, apex
    w1, w2, z = n + L, n + L + 1, n + L + 2
    pairs = list(g.edges)
    for i in rest:
        pairs.append((c[i], n + i))
        pairs.append((z, n + i))
    # outer arc from alpha_{q+1} around to alpha_{p-1}
    arc = [(q + j) % L for j in range(len(rest))]
    for x, y in zip(arc, arc[1:]):
        pairs.append((n + x, n + y))
    pairs += [(n + arc[-1], w1), (w1, v), (v, w2), (w2, n + arc[0]), (v, z)]
    aug = Graph.from_pairs(n + L + 3, pairs)
    res = is_planar(aug)
    if not res.planar:
        raise InvalidArgument("contracted envelope is not planar; input not in P")
    rot = list(res.rotation[v])
    i = rot.index(w1)
    rot = rot[i:] + rot[:i]
    if rot.index(z) < rot.index(w2):
        rot = [rot[0]] + rot[1:][::-1]
    iw2, iz = rot.index(w2), rot.index(z)
    Y = rot[1:iw2]
    W = rot[iw2 + 1:iz]
    X = rot[iz + 1:]
    return [x for x in X + Y + W if x < n]


def _fix_order(make: Callable[[Sequence[int]], BiLabeledGraph], order: list[int],
               verify: bool) -> tuple[BiLabeledGraph, bool]:
    cand = make(order)
    if not verify or in_P(cand):
        return cand, False
    log.warning("rotation-derived neighbour order rejected; searching permutations")
    if len(order) > 7:
        raise InvalidArgument("neighbour order search exceeds budget")
    for perm in itertools.permutations(order):
        cand = make(list(perm))
        if in_P(cand):
            return cand, True
    raise InvalidArgument("no neighbour order keeps the smaller graph in P")


def pluck(h: BiLabeledGraph, check: bool = True, case_order: Sequence[int] = (1, 2, 3, 4),
          verify: bool = True) -> PluckResult:
    """Remove one vertex from ``h`` in P, returning the step's equation data.

    ``check`` tests ``h`` for membership first; ``verify`` tests the smaller
    graph and falls back to a permutation search if the rotation-derived
    neighbour order were ever rejected.
    """
    if h.graph.n < 2:
        raise InvalidArgument("pluck needs at least two vertices; use the base case")
    if check and not in_P(h):
        raise InvalidArgument("input is not in P")
    case, v = select_vertex(h, case_order)
    looped = v in h.graph.loops
    ell, k = h.ell, h.k

    if case == 1 or case == 2:
        work = h if case == 1 else bl.transpose(h)
        pa = [i + 1 for i, x in enumerate(work.out) if x == v]
        p, q = (pa[0], pa[-1]) if pa else (1, 0)
        order, rest, new = _rotation_order(work, v, p, q), *delete_vertex(work.graph, v)
        a, b = work.out, work.inp

        def make(o):
            return BiLabeledGraph(rest, tuple(new[x] for x in a[: p - 1]) + tuple(new[x] for x in o)
                                  + tuple(new[x] for x in a[q:]), tuple(new[x] for x in b))

        kp, fb = _fix_order(make, order, verify)
        m, r, t = q - p + 1, p - 1, len(a) - q
        if case == 2:
            kp = bl.transpose(kp)
        return PluckResult(case, looped, r, m, len(order), t, v, kp, fb)

    pa = [i for i, x in enumerate(h.out) if x == v]
    pb = [j for j, x in enumerate(h.inp) if x == v]
    m, r = len(pa), len(pb)
    if case == 3:
        hat = BiLabeledGraph(h.graph, h.out, h.inp[r:])
        order = _rotation_order(hat, v, 1, m)
        rest, new = delete_vertex(h.graph, v)

        def make(o):
            return BiLabeledGraph(rest, tuple(new[x] for x in o) + tuple(new[x] for x in h.out[m:]),
                                  tuple(new[x] for x in h.inp[r:]))
    else:
        hat = BiLabeledGraph(h.graph, h.out, h.inp[: k - r])
        order = _rotation_order(hat, v, ell - m + 1, ell)
        rest, new = delete_vertex(h.graph, v)

        def make(o):
            return BiLabeledGraph(rest, tuple(new[x] for x in h.out[: ell - m]) + tuple(new[x] for x in o),
                                  tuple(new[x] for x in h.inp[: k - r]))

    kp, fb = _fix_order(make, order, verify)
    return PluckResult(case, looped, r, m, len(order), ell - m, v, kp, fb)


def base_expression(h: BiLabeledGraph) -> Expr:
    if h.graph.n != 1:
        raise InvalidArgument("base case needs exactly one vertex")
    return e_ringM(h.ell, h.k) if 0 in h.graph.loops else e_M(h.ell, h.k)


def decompose_steps(h: BiLabeledGraph, case_order: Sequence[int] = (1, 2, 3, 4),
                    verify: bool = False, check: bool = True) -> list[PluckResult]:
    """The full sequence of plucks down to a single vertex.

    Every step's equation is an identity whatever neighbour order is used, so
    the per-step membership check is off by default; only ``h`` is tested,
    and only when ``check`` is set.
    """
    if h.graph.n == 0:
        raise InvalidArgument("the empty bi-labeled graph is not generated")
    if check and not in_P(h):
        raise InvalidArgument("input is not in P")
    steps = []
    cur = h
    while cur.graph.n > 1:
        st = pluck(cur, check=False, case_order=case_order, verify=verify)
        steps.append(st)
        cur = st.kprime
    return steps


def decompose(h: BiLabeledGraph, case_order: Sequence[int] = (1, 2, 3, 4), check: bool = True) -> Expr:
    """Expression over ``M10``, ``M12``, ``A`` evaluating to a copy of ``h``.

    ``check=False`` skips the membership test for callers that already know ``h`` is in P.
    """
    if bl.blg_isomorphic(h, bl.A())[0]:
        return leaf("A")
    steps = decompose_steps(h, case_order, check=check)
    last = steps[-1].kprime if steps else h
    e = base_expression(last)
    for st in reversed(steps):
        e = st.expression(e)
    return e


# -- identity library -----------------------------------------------------------

def _I(r: int = 1):
    return e_pow(e_I, r)


def identity_pairs(name: str, *params) -> tuple[Expr, Expr]:
    """Both sides of a named identity as expressions.

    Names: ``Mup``, ``Mdown`` (ell, k >= 1), ``M_construct`` (ell, k),
    ``M12_M21``, ``M01_M10``, ``M_transpose`` (ell, k), ``schur_11``,
    ``schur_10``, ``schur_02`` (h1, h2), ``ringM11``, ``ringM`` (ell, k),
    ``star``, ``star_L``, ``star_R`` (m, d, looped), ``star_remarks``.
    """
    c = lambda h: const(h)  # noqa: E731
    if name == "Mup":
        ell, k = params
        return c(bl.M(ell, k + 1)), ocomp(c(bl.M(ell, k)), otens(leaf("M12"), _I(k - 1)))
    if name == "Mdown":
        ell, k = params
        return c(bl.M(ell, k)), ocomp(c(bl.M(ell, k + 1)), otens(otr(leaf("M12")), _I(k - 1)))
    if name == "M_construct":
        ell, k = params
        return c(bl.M(ell, k)), e_M(ell, k)
    if name == "M12_M21":
        return c(bl.identity()), ocomp(leaf("M12"), otr(leaf("M12")))
    if name == "M01_M10":
        return c(bl.M(0, 0)), ocomp(otr(leaf("M10")), leaf("M10"))
    if name == "M_transpose":
        ell, k = params
        return c(bl.M(k, ell)), otr(c(bl.M(ell, k)))
    if name == "schur_11":
        h1, h2 = params
        return c(bl.schur(h1, h2)), ocomp(leaf("M12"), otens(c(h1), c(h2)), otr(leaf("M12")))
    if name == "schur_10":
        h1, h2 = params
        return c(bl.schur(h1, h2)), ocomp(leaf("M12"), otens(c(h1), c(h2)))
    if name == "schur_02":
        h1, h2 = params
        m02 = lambda: c(bl.M(0, 2))  # noqa: E731
        m21 = lambda: otr(leaf("M12"))  # noqa: E731
        rhs = ocomp(otens(m02(), m02()), otens(e_I(), otr(c(h1)), c(h2), e_I()), otens(m21(), m21()))
        return c(bl.schur(h1, h2)), rhs
    if name == "ringM11":
        return c(bl.ringM(1, 1)), ocomp(leaf("M12"), otens(leaf("A"), e_I()), otr(leaf("M12")))
    if name == "ringM":
        ell, k = params
        return c(bl.ringM(ell, k)), ocomp(c(bl.M(ell, 1)), c(bl.ringM(1, 1)), c(bl.M(1, k)))
    if name in ("star", "star_L", "star_R"):
        m, d, looped = params
        ctr = bl.ringM if looped else bl.M
        A_d = e_pow(lambda: leaf("A"), d)
        if name == "star":
            rhs = ocomp(c(ctr(m, d)), A_d) if d else c(ctr(m, 0))
            return c(bl.star(m, d, looped)), rhs
        if name == "star_R":
            rhs = ocomp(c(ctr(m, d + 1)), otens(A_d, e_I())) if d else c(ctr(m, 1))
            return c(bl.star_R(m, d, looped)), rhs
        rhs = ocomp(c(ctr(m, d + 1)), otens(e_I(), A_d)) if d else c(ctr(m, 1))
        return c(bl.star_L(m, d, looped)), rhs
    raise InvalidArgument(f"unknown identity {name!r}")


def identity_library(name: str, *params, targets: Sequence[Graph] = ()) -> bool:
    """Check a named identity as bi-labeled isomorphism and as matrix equality."""
    lhs, rhs = identity_pairs(name, *params)
    ok, _ = bl.blg_isomorphic(eval_blg(lhs), eval_blg(rhs))
    if not ok:
        return False
    return all(eval_matrix(lhs, g) == eval_matrix(rhs, g) for g in targets)


def star_remarks() -> bool:
    """``S_L^{1,0} = S_R^{1,0} = I`` and ``S^{1,1} = A``."""
    iso = lambda x, y: bl.blg_isomorphic(x, y)[0]  # noqa: E731
    return iso(bl.star_L(1, 0), bl.identity()) and iso(bl.star_R(1, 0), bl.identity()) and iso(bl.star(1, 1), bl.A())
