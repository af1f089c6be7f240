import random

from removahedra import (
    graphical_building_set,
    is_closed_under_intersection,
    make_building_set,
)
from removahedra.corpus import (
    complete_building_set,
    complete_graph,
    cycle_graph,
    path_graph,
    random_connected_graph,
    random_intersection_closed_building_set,
)


def test_named_graphs():
    assert len(path_graph(4).edges) == 3
    assert len(cycle_graph(5).edges) == 5
    assert len(complete_graph(4).edges) == 6


def test_complete_building_set():
    b = complete_building_set(3)
    assert len(b.masks) == 7
    assert b == graphical_building_set(complete_graph(3))


def test_random_graphs_are_connected_and_reproducible():
    g1 = [random_connected_graph(random.Random(5)) for _ in range(10)]
    g2 = [random_connected_graph(random.Random(5)) for _ in range(10)]
    assert [(g.vertices, g.edges) for g in g1] == [
        (g.vertices, g.edges) for g in g2
    ]
    for g in g1:
        b = graphical_building_set(g)  # validates connectivity on the way
        assert b.full == (1 << len(g.vertices)) - 1


def test_random_closed_sets_are_valid():
    rng = random.Random(9)
    for _ in range(10):
        b = random_intersection_closed_building_set(rng)
        assert is_closed_under_intersection(b)
        # revalidate the axioms from scratch
        assert make_building_set(b.ground, b.blocks) == b
        assert 3 <= b.n <= 6
