"""Run the S4 Cayley-pair report at increasing corpus sizes and tabulate timings."""
from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass

from blg.fourcolor import FourColorConfig, verify_theorem


@dataclass
class Config:
    sizes: tuple[int, ...] = (4, 5, 6)
    jobs: int = 1
    out: str | None = None


def run(cfg: Config) -> list[dict]:
    rows = []
    for s in cfg.sizes:
        rep = verify_theorem(FourColorConfig(size=s, jobs=cfg.jobs))
        corpus = next(c.detail.get("corpus") for c in rep.checks if "corpus" in c.detail)
        rows.append({"size": s, "passed": rep.passed, "corpus": corpus,
                     "seconds": round(rep.seconds, 2), "failing": rep.failing()})
        print(f"s={s}  corpus={corpus:6d}  passed={rep.passed}  {rep.seconds:7.1f} s", flush=True)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=list(Config.sizes))
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out")
    a = ap.parse_args()
    cfg = Config(tuple(a.sizes), a.jobs, a.out)
    rows = run(cfg)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
