import os
import random
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from blg.bilabeled import BiLabeledGraph  # noqa: E402
from blg.graph import Graph  # noqa: E402
from blg.planarity import in_P  # noqa: E402

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=0, max_n=5, loops=True, p=None):
    n = draw(st.integers(min_n, max_n))
    slots = [(u, v) for u in range(n) for v in range(u if loops else u + 1, n)]
    if p is None:
        pairs = [s for s in slots if draw(st.booleans())]
    else:
        pairs = [s for s in slots if draw(st.floats(0, 1)) < p]
    return Graph.from_pairs(n, pairs)


@st.composite
def blgs(draw, max_n=5, max_ell=3, max_k=3, loops=True, ell=None, k=None):
    g = draw(graphs(min_n=1, max_n=max_n, loops=loops))
    ell = draw(st.integers(0, max_ell)) if ell is None else ell
    k = draw(st.integers(0, max_k)) if k is None else k
    vert = st.integers(0, g.n - 1)
    return BiLabeledGraph(g, tuple(draw(vert) for _ in range(ell)), tuple(draw(vert) for _ in range(k)))


def random_graph(rng: random.Random, n: int, p: float = 0.5, loops: bool = True) -> Graph:
    slots = [(u, v) for u in range(n) for v in range(u if loops else u + 1, n)]
    return Graph.from_pairs(n, [s for s in slots if rng.random() < p])


def random_blg(rng: random.Random, n: int, ell: int, k: int, p: float = 0.4, loops: bool = True) -> BiLabeledGraph:
    g = random_graph(rng, n, p, loops)
    return BiLabeledGraph(g, tuple(rng.randrange(n) for _ in range(ell)), tuple(rng.randrange(n) for _ in range(k)))


def random_member(rng: random.Random, max_n: int, ell: int, k: int, loops: bool = True) -> BiLabeledGraph:
    """Rejection-sample a member of P(ell, k); sparser graphs as attempts grow."""
    for attempt in range(1000):
        n = rng.randint(1, max_n)
        h = random_blg(rng, n, ell, k, p=max(0.1, 0.45 - attempt * 0.01), loops=loops)
        if in_P(h):
            return h
    raise RuntimeError("could not sample a member of P")


@st.composite
def members(draw, max_n=5, max_ell=3, max_k=3, ell=None, k=None):
    seed = draw(st.integers(0, 2 ** 32 - 1))
    ell = draw(st.integers(0, max_ell)) if ell is None else ell
    k = draw(st.integers(0, max_k)) if k is None else k
    return random_member(random.Random(seed), max_n, ell, k)


# -- acceptance summary ------------------------------------------------------------
# tests marked ``criterion(n, text)`` get one PASS/FAIL line in the terminal summary

_criteria: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number and summary")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    n, text = mark.args
    _criteria[n] = (text, "FAIL" if call.excinfo is not None else "PASS", call.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        text, verdict, secs = _criteria[n]
        terminalreporter.write_line(f"criterion {n:2d}: {verdict}  {text} ({secs:.1f} s)")
