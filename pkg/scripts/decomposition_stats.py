"""Expression sizes and plucking-case frequencies over enumerated members of P."""
from __future__ import annotations

import argparse
import statistics
from collections import Counter
from dataclasses import dataclass

from blg.category import decompose, decompose_steps
from blg.enumeration import enumerate_blg


@dataclass
class Config:
    max_n: int = 4
    max_arity: int = 3
    loops: bool = False
    case_order: tuple[int, ...] = (1, 2, 3, 4)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--max-arity", type=int, default=Config.max_arity)
    ap.add_argument("--loops", action="store_true")
    ap.add_argument("--case-order", type=int, nargs=4, default=list(Config.case_order))
    a = ap.parse_args()
    cfg = Config(a.max_n, a.max_arity, a.loops, tuple(a.case_order))
    for n in range(1, cfg.max_n + 1):
        cases: Counter = Counter()
        sizes = []
        for h in enumerate_blg(n, cfg.max_arity, allow_loops=cfg.loops, in_p=True):
            if n > 1:
                cases.update(st.case_id for st in decompose_steps(h, cfg.case_order))
            sizes.append(decompose(h, cfg.case_order).size())
        hist = " ".join(f"{k}:{v}" for k, v in sorted(cases.items()))
        print(f"n={n}  members={len(sizes):6d}  size mean={statistics.mean(sizes):7.1f} "
              f"max={max(sizes):5d}  cases {hist}")


if __name__ == "__main__":
    main()
