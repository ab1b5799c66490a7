"""``blg`` command line.

Exit codes: 0 success, 1 a check came back negative (non-planar, not in P,
distinguished, failed report), 2 bad input or usage, 3 resource limit.
"""
from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from pathlib import Path
from typing import Callable

from . import bilabeled as bl
from .cache import store_from_env
from .category import decompose, eval_blg, eval_matrix, parse_expr, to_string
from .enumeration import enumerate_graphs
from .errors import InvalidArgument, ParseError, ResourceLimit
from .fourcolor import FourColorConfig, verify_theorem
from .graph import Graph, parse_graph
from .hommatrix import HomCache, hom_matrix
from .intertwine import orbit_refinement, orbital_refinement, wl2
from .isotest import planar_distinguish
from .planarity import in_P_report, is_planar

log = logging.getLogger("blg")

DEFAULT_SEED = 20240229


def graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)], "loops": sorted(g.loops)}


def _read_graph(path: str) -> Graph:
    return parse_graph(Path(path).read_text())


def _read_blg(path: str) -> bl.BiLabeledGraph:
    try:
        return bl.blg_from_json(Path(path).read_text())
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: not a bi-labeled graph: {exc}") from exc


def random_target(rng: random.Random, n: int = 4) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u, n) if rng.random() < 0.5]
    return Graph.from_pairs(n, pairs)


# -- commands ---------------------------------------------------------------------
# each returns (payload, exit code)

def cmd_planar(a):
    r = is_planar(_read_graph(a.graph))
    out = {"planar": r.planar}
    if not r.planar:
        out["kind"] = r.kind
        out["witness"] = graph_json(r.witness)
    return out, 0 if r.planar else 1


def cmd_inP(a):
    h = _read_blg(a.blg)
    r = in_P_report(h)
    out = {"in_P": r.planar, "arity": list(h.arity)}
    if not r.planar:
        out["reason"] = "apexed envelope is not planar"
        out["kind"] = r.kind
        out["witness"] = graph_json(r.witness)
    return out, 0 if r.planar else 1


def cmd_hom(a):
    cache = HomCache(store_from_env())
    return cache.count(_read_graph(a.K), _read_graph(a.G)), 0


def cmd_hommatrix(a):
    return hom_matrix(_read_blg(a.blg), _read_graph(a.G)).to_json(), 0


def _binary(op: Callable) -> Callable:
    def run(a):
        return bl.blg_to_json(op(_read_blg(a.left), _read_blg(a.right))), 0
    return run


def cmd_decompose(a):
    h = _read_blg(a.blg)
    e = decompose(h)
    out = {"expression": to_string(e), "size": e.size()}
    if a.check:
        g = random_target(random.Random(a.seed))
        iso = bl.blg_isomorphic(eval_blg(e), h)[0]
        mat = eval_matrix(e, g) == hom_matrix(h, g)
        out["check"] = {"isomorphic": iso, "matrix_equal": mat, "target": graph_json(g)}
        return out, 0 if iso and mat else 1
    return out, 0


def cmd_eval(a):
    e = parse_expr(Path(a.expr).read_text())
    if a.target:
        return eval_matrix(e, _read_graph(a.target)).to_json(), 0
    return bl.blg_to_json(eval_blg(e)), 0


def cmd_orbits(a):
    return orbit_refinement(_read_graph(a.G), a.size).to_json(), 0


def cmd_orbitals(a):
    return orbital_refinement(_read_graph(a.G), a.size).to_json(), 0


def cmd_wl2(a):
    return wl2(_read_graph(a.G)).to_json(), 0


def cmd_distinguish(a):
    g, h = _read_graph(a.G), _read_graph(a.H)
    v = planar_distinguish(g, h, a.size, jobs=a.jobs, planar=a.planar_only)
    return v.to_json(), 1 if v.distinguished else 0


def cmd_fourcolor(a):
    rep = verify_theorem(FourColorConfig(size=a.size, jobs=a.jobs), a.report)
    return rep.to_json(), 0 if rep.passed else 1


def cmd_enumerate(a):
    gs = enumerate_graphs(a.n, connected=a.connected, planar=a.planar, allow_loops=a.loops)
    return [graph_json(g) for g in gs], 0


# -- parser -------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 2 with the usage line
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="blg", description="Bi-labeled graph calculus toolkit.")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, *args, **help_):
        sp = sub.add_parser(name, **help_)
        for arg in args:
            sp.add_argument(arg)
        sp.set_defaults(fn=fn)
        return sp

    add("planar", cmd_planar, "graph", help="planarity with a Kuratowski witness")
    add("inP", cmd_inP, "blg", help="membership in P")
    add("hom", cmd_hom, "K", "G", help="hom(K, G)")
    add("hommatrix", cmd_hommatrix, "blg", "G", help="homomorphism matrix")
    add("compose", _binary(bl.compose), "left", "right")
    add("tensor", _binary(bl.tensor), "left", "right")
    add("schur", _binary(bl.schur), "left", "right")
    sp = add("decompose", cmd_decompose, "blg", help="expression over M10, M12, A")
    sp.add_argument("--check", action="store_true", help="verify against a seeded random target")
    sp = add("eval", cmd_eval, "expr")
    sp.add_argument("--target")
    for name, fn in (("orbits", cmd_orbits), ("orbitals", cmd_orbitals)):
        sp = add(name, fn, "G")
        sp.add_argument("--size", type=int, default=5)
    add("wl2", cmd_wl2, "G")
    sp = add("distinguish", cmd_distinguish, "G", "H")
    sp.add_argument("--size", type=int, default=5)
    sp.add_argument("--planar-only", action="store_true", help="restrict the corpus to planar K")
    sp = add("fourcolor", cmd_fourcolor, help="S4 Cayley pair report")
    sp.add_argument("action", choices=["verify"])
    sp.add_argument("--size", type=int, default=5)
    sp.add_argument("--report")
    sp = add("enumerate", cmd_enumerate)
    sp.add_argument("n", type=int)
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--planar", action="store_true")
    sp.add_argument("--loops", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING)
    try:
        payload, code = a.fn(a)
    except (ParseError, InvalidArgument, FileNotFoundError) as exc:
        print(f"blg: error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimit as exc:
        print(f"blg: resource limit: {exc}", file=sys.stderr)
        return 3
    text = json.dumps(payload, sort_keys=True)
    if a.out:
        Path(a.out).write_text(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
