import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from cotransversal.planted import PlantedGraph
from cotransversal.transversal import TransversalPresentation

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


@st.composite
def planted_graphs(draw, max_vertices=6, min_vertices=1):
    n = draw(st.integers(min_vertices, max_vertices))
    vertices = [str(i) for i in range(1, n + 1)]
    sinks = draw(st.sets(st.sampled_from(vertices))) if vertices else set()
    pairs = [(a, b) for a in vertices if a not in sinks for b in vertices if b != a]
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return PlantedGraph(frozenset(vertices), frozenset(edges), frozenset(sinks))


@st.composite
def families(draw, max_sets=4, max_ground=6):
    s = draw(st.integers(1, max_ground))
    ground = [str(i) for i in range(1, s + 1)]
    r = draw(st.integers(0, max_sets))
    sets = [frozenset(draw(st.sets(st.sampled_from(ground)))) for _ in range(r)]
    return TransversalPresentation(frozenset(ground), tuple(sets))


@pytest.fixture
def fixtures_dir():
    return FIXTURES


# one summary line per acceptance criterion

_criteria = {}
NOTES = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call" and not (call.when == "setup" and call.excinfo):
        return
    number, title = marker.args
    passed = call.excinfo is None
    prev = _criteria.get(number, (title, True))
    _criteria[number] = (title, prev[1] and passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}")
    for note in NOTES:
        terminalreporter.write_line(f"  note: {note}")
