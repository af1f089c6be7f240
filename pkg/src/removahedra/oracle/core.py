"""Brute-force exact polytope oracle.

Vertex enumeration scans every d-subset of constraints together with the
sum-hyperplane, keeps the feasible intersection points, and deduplicates.
Deliberately naive: this module is the independent check against which the
combinatorial machinery is verified, so it shares no theory with it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm

import numpy as np

from ..building import BuildingSet
from ..errors import EmptyPolytope, GroundTooLarge, Unbounded
from ..geometry import HPolytope, Point, interior_functional
from ..nested import nested_complex
from .kernels import solve_batch

ORACLE_GROUND_LIMIT = 8
ORACLE_SUBSET_LIMIT = 50_000_000


@dataclass(frozen=True)
class VertexSet:
    polytope: HPolytope
    vertices: tuple[Point, ...]
    incidence: tuple[frozenset[int], ...]  # tight constraint indices per vertex


def _scaled_system(p: HPolytope):
    n = len(p.ground)
    denoms = [p.sum_rhs.denominator] + [rhs.denominator for _, rhs in p.constraints]
    scale = lcm(*denoms) if denoms else 1
    rows = []
    rhs = []
    for mask, r in p.constraints:
        rows.append([1 if mask >> i & 1 else 0 for i in range(n)])
        rhs.append(int(r * scale))
    eq_rhs = int(p.sum_rhs * scale)
    return rows, rhs, eq_rhs, scale


def _check_bounded(p: HPolytope, rows, rhs):
    """Recession-cone probe: the polytope is unbounded iff some nonzero
    direction keeps the sum and weakly improves every constraint."""
    n = len(p.ground)
    masks = {mask for mask, _ in p.constraints}
    if all((1 << i) in masks for i in range(n)):
        # each coordinate is bounded below, and the fixed sum bounds it above
        return
    # lineality: a direction satisfying every constraint with equality
    basis = _nullspace([[Fraction(1)] * n] + [[Fraction(v) for v in row] for row in rows])
    if basis:
        raise Unbounded("constraint normals do not span; recession line found")
    # pointed cone: scan potential extreme rays (n-2 tight constraints)
    if n >= 2:
        for subset in combinations(range(len(rows)), n - 2):
            mat = [[Fraction(1)] * n] + [
                [Fraction(v) for v in rows[i]] for i in subset
            ]
            for direction in _nullspace(mat):
                for d in (direction, tuple(-x for x in direction)):
                    if all(
                        sum(d[j] for j in range(n) if row[j]) >= 0 for row in rows
                    ):
                        raise Unbounded(
                            f"recession direction {d} satisfies all constraints"
                        )


def _nullspace(rows: list[list[Fraction]]) -> list[tuple[Fraction, ...]]:
    """Basis of the null space of a rational matrix (Gaussian elimination)."""
    if not rows:
        return []
    n = len(rows[0])
    mat = [row[:] for row in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][fc]
        basis.append(tuple(vec))
    return basis


def enumerate_vertices(p: HPolytope, force_pure: bool = False) -> VertexSet:
    """Exact vertex set with per-vertex tight-constraint incidence."""
    n = len(p.ground)
    if n > ORACLE_GROUND_LIMIT:
        raise GroundTooLarge(f"oracle limited to {ORACLE_GROUND_LIMIT} elements")
    rows, rhs, eq_rhs, scale = _scaled_system(p)
    m = len(rows)
    d = n - 1
    if n == 1:
        v = (p.sum_rhs,)
        if all(p.sum_rhs >= r for _, r in p.constraints):
            inc = frozenset(
                i for i, (_, r) in enumerate(p.constraints) if p.sum_rhs == r
            )
            return VertexSet(p, (v,), (inc,))
        raise EmptyPolytope("single constraint infeasible")
    _check_bounded(p, rows, rhs)
    if m < d:
        raise EmptyPolytope("not enough constraints for a bounded nonempty polytope")
    if comb(m, d) > ORACLE_SUBSET_LIMIT:
        raise GroundTooLarge(
            f"too many constraint subsets: C({m},{d}) exceeds the scan limit"
        )
    raw = solve_batch(rows, rhs, eq_rhs, d, force_pure=force_pure)
    seen: dict[Point, None] = {}
    for num, den in raw:
        pt = tuple(Fraction(x, den * scale) for x in num)
        seen.setdefault(pt, None)
    if not seen:
        raise EmptyPolytope("no feasible intersection point found")
    vertices = tuple(sorted(seen))
    incidence = []
    for v in vertices:
        tight = frozenset(
            i
            for i, (mask, r) in enumerate(p.constraints)
            if sum(v[j] for j in range(n) if mask >> j & 1) == r
        )
        incidence.append(tight)
    return VertexSet(p, vertices, tuple(incidence))


def minimize(p: HPolytope, f: Point, vs: VertexSet | None = None) -> tuple[Point, ...]:
    """All vertices attaining the exact minimum of <f, .> over p."""
    if vs is None:
        vs = enumerate_vertices(p)
    values = [sum(fi * xi for fi, xi in zip(f, v)) for v in vs.vertices]
    best = min(values)
    return tuple(v for v, val in zip(vs.vertices, values) if val == best)


def facet_indices(vs: VertexSet) -> frozenset[int]:
    """Constraints whose removal changes the vertex set (the irredundant,
    facet-defining ones)."""
    p = vs.polytope
    base = set(vs.vertices)
    out = set()
    for i in range(len(p.constraints)):
        reduced = HPolytope(
            ground=p.ground,
            sum_rhs=p.sum_rhs,
            constraints=tuple(c for j, c in enumerate(p.constraints) if j != i),
        )
        try:
            if set(enumerate_vertices(reduced).vertices) != base:
                out.add(i)
        except (Unbounded, EmptyPolytope):
            out.add(i)
    return frozenset(out)


def is_simple(vs: VertexSet, dim: int) -> bool:
    """Every vertex lies on exactly `dim` facet-defining constraints."""
    facets = facet_indices(vs)
    return all(len(tight & facets) == dim for tight in vs.incidence)


def offending_vertex(vs: VertexSet, dim: int) -> Point | None:
    facets = facet_indices(vs)
    for v, tight in zip(vs.vertices, vs.incidence):
        if len(tight & facets) != dim:
            return v
    return None


def polytopes_equal(p1: HPolytope, p2: HPolytope) -> bool:
    """Exact equality of vertex sets (H-descriptions may differ redundantly)."""
    if p1.ground != p2.ground:
        return False
    v1 = enumerate_vertices(p1).vertices
    v2 = enumerate_vertices(p2).vertices
    return set(v1) == set(v2)


def normal_fan_matches(b: BuildingSet, p: HPolytope) -> bool:
    """Semantic fan check: one vertex per maximal nested set, each the unique
    minimizer of an interior functional of its cone, all distinct.

    The minimizations run as one scaled-integer matrix product.  Functionals
    have denominators dividing n, vertex coordinates share the lcm of their
    denominators; after clearing both, everything is exact integer arithmetic
    (object dtype, so no overflow is possible)."""
    maximal = nested_complex(b, maximal_only=True)
    try:
        vs = enumerate_vertices(p)
    except (Unbounded, EmptyPolytope):
        return False
    if len(vs.vertices) != len(maximal):
        return False
    n = len(p.ground)
    vscale = lcm(*(x.denominator for v in vs.vertices for x in v), 1)
    vrows = [[int(x * vscale) for x in v] for v in vs.vertices]
    frows = [
        [int(x * n) for x in interior_functional(ns)] for ns in maximal
    ]
    vmax = max((abs(x) for row in vrows for x in row), default=0)
    fmax = max((abs(x) for row in frows for x in row), default=0)
    dtype = np.int64 if n * vmax * max(fmax, 1) < 2**62 else object
    vmat = np.array(vrows, dtype=dtype)
    fmat = np.array(frows, dtype=dtype)
    values = fmat @ vmat.T  # one row of <f, v> values per nested set
    hit = set()
    for row in values:
        best = min(row)
        argmin = [j for j, val in enumerate(row) if val == best]
        if len(argmin) != 1:
            return False
        hit.add(argmin[0])
    return len(hit) == len(maximal)
