"""Shared fixtures and the acceptance-criteria report hook."""

import random
from itertools import combinations

import pytest

from removahedra import graphical_building_set, make_building_set
from removahedra.corpus import (
    complete_graph,
    cycle_graph,
    path_graph,
    random_connected_graph,
    random_intersection_closed_building_set,
)

GROUND4 = ["1", "2", "3", "4"]
GROUND5 = ["1", "2", "3", "4", "5"]


def _subsets(ground):
    out = []
    for k in range(1, len(ground) + 1):
        out.extend(set(c) for c in combinations(ground, k))
    return out


@pytest.fixture(scope="session")
def b0():
    return make_building_set(GROUND4, _subsets(GROUND4))


@pytest.fixture(scope="session")
def b1():
    blocks = [s for s in _subsets(GROUND4) if s != {"1", "3"}]
    return make_building_set(GROUND4, blocks)


@pytest.fixture(scope="session")
def b2():
    removed = [{"1", "3"}, {"1", "4"}, {"1", "3", "4"}]
    blocks = [s for s in _subsets(GROUND4) if s not in removed]
    return make_building_set(GROUND4, blocks)


@pytest.fixture(scope="session")
def b3():
    blocks = [{e} for e in GROUND5]
    blocks += [{"1", "2", "3"}, {"1", "3", "4", "5"}, set(GROUND5)]
    return make_building_set(GROUND5, blocks)


@pytest.fixture(scope="session")
def b4():
    blocks = [{e} for e in GROUND5]
    blocks += [{"1", "2", "3", "4"}, {"3", "4", "5"}, set(GROUND5)]
    return make_building_set(GROUND5, blocks)


@pytest.fixture(scope="session")
def b5p():
    ground = ["1", "2", "3"]
    blocks = [{"1"}, {"2"}, {"3"}, {"1", "2"}, {"1", "2", "3"}]
    return make_building_set(ground, blocks)


@pytest.fixture(scope="session")
def cycles():
    return {n: graphical_building_set(cycle_graph(n)) for n in (4, 5, 6)}


@pytest.fixture(scope="session")
def paths():
    return {n: graphical_building_set(path_graph(n)) for n in (3, 4, 5)}


@pytest.fixture(scope="session")
def k4():
    return graphical_building_set(complete_graph(4))


@pytest.fixture(scope="session")
def random_graphs():
    """200 random connected graphs on at most 7 vertices, fixed seed."""
    rng = random.Random(20240811)
    return [random_connected_graph(rng, min_n=3, max_n=7) for _ in range(200)]


@pytest.fixture(scope="session")
def random_closed():
    """100 random intersection-closed building sets on at most 6 elements."""
    rng = random.Random(20240812)
    return [random_intersection_closed_building_set(rng) for _ in range(100)]


# -- acceptance criterion reporting ------------------------------------------

_outcomes: dict[int, bool] = {}
_descriptions: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(num, desc): acceptance criterion identity"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and report.when == "call":
        num, desc = marker.args
        _outcomes[num] = _outcomes.get(num, True) and report.passed
        _descriptions[num] = desc


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _outcomes:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for num in sorted(_outcomes):
        word = "PASS" if _outcomes[num] else "FAIL"
        terminalreporter.write_line(
            f"  criterion {num:2d}: {word} - {_descriptions[num]}"
        )
