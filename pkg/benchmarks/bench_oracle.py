"""Benchmark the two vertex-enumeration paths against each other.

The oracle scans every (n-1)-subset of the constraint rows and solves the
resulting square integer system.  Two implementations exist: a numba @njit
int64 kernel (used whenever a Hadamard-style bound rules out overflow) and a
pure big-integer twin.  This script times both on the same inputs and checks
that they produce identical vertex sets.

Run:  python3 benchmarks/bench_oracle.py
"""

import random
import time
from itertools import combinations

from removahedra import (
    enumerate_vertices,
    graphical_building_set,
    make_building_set,
    removahedron_hrep,
)
from removahedra.corpus import (
    complete_graph,
    cycle_graph,
    random_intersection_closed_building_set,
)
from removahedra.minkowski import canonical_weights, defo_hrep, weights_to_rhs


def _power_set_building(n):
    ground = [str(i + 1) for i in range(n)]
    blocks = [set(c) for k in range(1, n + 1) for c in combinations(ground, k)]
    return make_building_set(ground, blocks)


def cases():
    yield "permutahedron n=5", removahedron_hrep(_power_set_building(5))
    yield "cyclohedron C6", removahedron_hrep(
        graphical_building_set(cycle_graph(6))
    )
    yield "K5 associahedron", removahedron_hrep(
        graphical_building_set(complete_graph(5))
    )
    rng = random.Random(42)
    b = random_intersection_closed_building_set(rng, min_n=5, max_n=5)
    yield "random deformation n=5", defo_hrep(weights_to_rhs(canonical_weights(b)))


def main():
    header = f"{'case':28} {'vertices':>8} {'kernel':>10} {'pure':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    # trigger jit compilation outside the timed region
    enumerate_vertices(removahedron_hrep(_power_set_building(3)))
    for name, p in cases():
        t0 = time.perf_counter()
        fast = enumerate_vertices(p)
        t_fast = time.perf_counter() - t0
        t0 = time.perf_counter()
        pure = enumerate_vertices(p, force_pure=True)
        t_pure = time.perf_counter() - t0
        assert fast.vertices == pure.vertices, name
        print(
            f"{name:28} {len(fast.vertices):>8} {t_fast:>9.3f}s "
            f"{t_pure:>9.3f}s {t_pure / t_fast:>7.1f}x"
        )


if __name__ == "__main__":
    main()
