from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from nmvc.graph import Graph
from nmvc.io import read_edge_list

DATA = Path(__file__).parent / "data"
FIG1_PATH = DATA / "fig1.el"

ACCEPTANCE_LINES = []

settings.register_profile("default", deadline=None)
settings.load_profile("default")


class Named:
    """Resolve paper-style vertex names (``v1`` ...) on a labelled graph."""

    def __init__(self, g):
        self.g = g
        self.ids = {g.label(v): v for v in g.vertices}

    def __call__(self, *names):
        if len(names) == 1:
            return self.ids[names[0]]
        return [self.ids[x] for x in names]

    def set(self, *names):
        return {self.ids[x] for x in names}

    def edges(self, *pairs):
        out = set()
        for pair in pairs:
            a, b = (self.ids[x] for x in pair.split("-"))
            out.add((min(a, b), max(a, b)))
        return out

    def labels(self, vs):
        return {self.g.label(v) for v in vs}


@pytest.fixture
def fig1():
    return read_edge_list(FIG1_PATH)


@pytest.fixture
def v(fig1):
    return Named(fig1)


@st.composite
def graphs(draw, max_vertices=10, min_vertices=1):
    k = draw(st.integers(min_vertices, max_vertices))
    pairs = [(a, b) for a in range(k) for b in range(a + 1, k)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(range(k), chosen)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
