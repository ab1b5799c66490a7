"""Class counts of the hom-based refinements against 2-WL on a few graphs."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from blg.fourcolor import cayley_s4
from blg.graph import complete_bipartite, cycle_graph, path_graph, petersen_graph, prism_graph
from blg.intertwine import orbit_refinement, orbital_refinement, wl2

GRAPHS = {
    "C6": lambda: cycle_graph(6),
    "P5": lambda: path_graph(5),
    "prism5": lambda: prism_graph(5),
    "K33": lambda: complete_bipartite(3, 3),
    "petersen": petersen_graph,
    "cayleyG": lambda: cayley_s4("G"),
    "cayleyH": lambda: cayley_s4("H"),
}


@dataclass
class Config:
    max_size: int = 5
    graphs: tuple[str, ...] = tuple(GRAPHS)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=Config.max_size)
    ap.add_argument("--graphs", nargs="+", default=list(GRAPHS), choices=list(GRAPHS))
    a = ap.parse_args()
    cfg = Config(a.max_size, tuple(a.graphs))
    sizes = range(1, cfg.max_size + 1)
    print("graph      " + " ".join(f"orb{s}" for s in sizes) + "  " + " ".join(f"pair{s}" for s in sizes) + "  wl2")
    for name in cfg.graphs:
        g = GRAPHS[name]()
        orb = [len(orbit_refinement(g, s)) for s in sizes]
        pairs = [len(orbital_refinement(g, s)) for s in sizes]
        print(f"{name:10s} " + " ".join(f"{x:4d}" for x in orb) + "  "
              + " ".join(f"{x:5d}" for x in pairs) + f"  {len(wl2(g)):3d}")


if __name__ == "__main__":
    main()
