"""Seeded random instance generators for verification suites."""

from __future__ import annotations

import random
from itertools import combinations

from .building import BuildingSet, Graph, graphical_building_set, make_building_set


def path_graph(n: int) -> Graph:
    vs = [str(i) for i in range(1, n + 1)]
    return Graph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    vs = [str(i) for i in range(1, n + 1)]
    return Graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def complete_graph(n: int) -> Graph:
    vs = [str(i) for i in range(1, n + 1)]
    return Graph(vs, list(combinations(vs, 2)))


def complete_building_set(n: int) -> BuildingSet:
    return graphical_building_set(complete_graph(n))


def random_connected_graph(rng: random.Random, min_n: int = 3, max_n: int = 7) -> Graph:
    """Random spanning tree plus Bernoulli extra edges at a random density."""
    n = rng.randint(min_n, max_n)
    vs = [str(i) for i in range(1, n + 1)]
    order = vs[:]
    rng.shuffle(order)
    edges = {frozenset((order[i], rng.choice(order[:i]))) for i in range(1, n)}
    p = rng.random()
    for u, v in combinations(vs, 2):
        if rng.random() < p:
            edges.add(frozenset((u, v)))
    return Graph(vs, [tuple(e) for e in edges])


def _close(masks: set[int], full: int) -> set[int]:
    """Stabilize under union-of-intersecting and intersection."""
    masks = set(masks)
    changed = True
    while changed:
        changed = False
        for a, b in combinations(sorted(masks), 2):
            if a & b:
                for c in (a | b, a & b):
                    if c not in masks:
                        masks.add(c)
                        changed = True
    return masks


def random_intersection_closed_building_set(
    rng: random.Random, min_n: int = 3, max_n: int = 6
) -> BuildingSet:
    """Singletons, the ground set, and a few random seed blocks, stabilized
    under unions of intersecting blocks and under intersections."""
    n = rng.randint(min_n, max_n)
    ground = [str(i) for i in range(1, n + 1)]
    full = (1 << n) - 1
    masks = {1 << i for i in range(n)} | {full}
    for _ in range(rng.randint(1, 3)):
        size = rng.randint(2, n)
        subset = rng.sample(range(n), size)
        masks.add(sum(1 << i for i in subset))
    masks = _close(masks, full)
    b = BuildingSet(tuple(ground), ())
    blocks = [b.sorted_elems(m) for m in masks]
    out = make_building_set(ground, blocks)
    assert out.closed_under_intersection
    return out
