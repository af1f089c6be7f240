"""Minkowski sums of dilated simplex faces: canonical weights, deformation
right-hand sides, face computations, and fan verification."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

from .building import (
    BuildingSet,
    all_b_path_masks,
    b_hull_mask,
    is_generating_masks,
)
from .errors import (
    BlockNotInBuildingSet,
    CrossCheckFailed,
    NonGenericFunctional,
    NotGenerating,
    NotNested,
)
from .geometry import HPolytope, Point
from .nested import NestedSet, _is_nested_masks
from .oracle import enumerate_vertices, minimize, normal_fan_matches


@dataclass(frozen=True)
class MinkowskiWeights:
    """Nonnegative dilation factor per subset mask; absent means zero."""

    ground: tuple[str, ...]
    weights: Mapping[int, Fraction]

    def __post_init__(self):
        object.__setattr__(
            self,
            "weights",
            {m: Fraction(y) for m, y in self.weights.items() if y != 0},
        )
        if any(y < 0 for y in self.weights.values()):
            raise ValueError("weights must be nonnegative")
        if not self.weights:
            raise ValueError("support must be nonempty")

    @property
    def support(self) -> tuple[int, ...]:
        n = len(self.ground)
        return tuple(
            sorted(self.weights, key=lambda m: [i for i in range(n) if m >> i & 1])
        )

    def items_by_block(self) -> list[tuple[tuple[str, ...], Fraction]]:
        n = len(self.ground)
        return [
            (tuple(self.ground[i] for i in range(n) if m >> i & 1), self.weights[m])
            for m in self.support
        ]


@dataclass(frozen=True)
class DeformationRHS:
    """Right-hand sides z_R for every nonempty subset R, guaranteed
    supermodular with z of the empty set read as zero."""

    ground: tuple[str, ...]
    z: Mapping[int, Fraction]

    @cached_property
    def _z(self):
        return dict(self.z)

    def value(self, mask: int) -> Fraction:
        return self._z.get(mask, Fraction(0))

    def check_supermodular(self):
        full = (1 << len(self.ground)) - 1
        for r in range(1, full + 1):
            for rp in range(r + 1, full + 1):
                if self.value(r) + self.value(rp) > self.value(r | rp) + self.value(
                    r & rp
                ):
                    raise CrossCheckFailed(
                        f"supermodularity fails at masks {r}, {rp}"
                    )


def canonical_weights(b: BuildingSet) -> MinkowskiWeights:
    """Count, for each block, the unordered element pairs (repetition allowed)
    whose hull is that block.

    The unordered reading is forced by the binomial subset-sum identity the
    weights must satisfy on every block.
    """
    b.require_intersection_closed()
    counts: dict[int, int] = {}
    for i in range(b.n):
        for j in range(i, b.n):
            hull = b_hull_mask(b, (1 << i) | (1 << j))
            counts[hull] = counts.get(hull, 0) + 1
    return MinkowskiWeights(b.ground, {m: Fraction(c) for m, c in counts.items()})


def weights_to_rhs(w: MinkowskiWeights) -> DeformationRHS:
    """z_R = sum of the weights of the summands contained in R."""
    n = len(w.ground)
    full = (1 << n) - 1
    z: dict[int, Fraction] = {}
    for r in range(1, full + 1):
        total = sum(
            (y for m, y in w.weights.items() if m & r == m), Fraction(0)
        )
        if total:
            z[r] = total
    rhs = DeformationRHS(w.ground, z)
    rhs.check_supermodular()
    return rhs


def defo_hrep(rhs: DeformationRHS) -> HPolytope:
    """Inequality description: one constraint per nonempty proper subset with a
    positive right-hand side."""
    n = len(rhs.ground)
    full = (1 << n) - 1
    return HPolytope(
        ground=rhs.ground,
        sum_rhs=rhs.value(full),
        constraints=tuple(
            (r, rhs.value(r)) for r in range(1, full) if rhs.value(r) > 0
        ),
    )


def minkowski_vertex(w: MinkowskiWeights, f: Point) -> Point:
    """Vertex of the weighted sum whose (maximization) normal cone contains f:
    per summand, the unique f-maximizing vertex of the dilated simplex face."""
    n = len(w.ground)
    coords = [Fraction(0)] * n
    for m, y in w.weights.items():
        idxs = [i for i in range(n) if m >> i & 1]
        best = max(f[i] for i in idxs)
        arg = [i for i in idxs if f[i] == best]
        if len(arg) != 1:
            raise NonGenericFunctional(
                f"functional ties on summand {[w.ground[i] for i in idxs]}"
            )
        coords[arg[0]] += y
    return tuple(coords)


def face_of_nested(
    w: MinkowskiWeights, b: BuildingSet, n: NestedSet
) -> tuple[list[tuple[int, int, Fraction]], int]:
    """Summand-by-summand face of the weighted sum selected by a nested set.

    Returns ((summand mask, face mask, weight), ...) and the face dimension,
    computed as the graphic rank of the union of the face cliques.
    """
    support = list(w.weights)
    if any(m not in b.mask_set for m in support):
        raise BlockNotInBuildingSet("weight support must consist of blocks")
    if not is_generating_masks(b, support):
        raise NotGenerating("weight support does not generate the building set")
    if not _is_nested_masks(b, n.masks):
        raise NotNested("not a nested set of this building set")
    # labels of the members and of the implicit root
    members = list(n.masks) + [b.full]
    labels: dict[int, int] = {}
    for m in members:
        lab = m
        for other in members:
            if other != m and other | m == m:
                lab &= ~other
        labels[m] = lab
    decomposition = []
    for c in sorted(support, key=b.key):
        containing = [m for m in members if c | m == m]
        host = min(containing, key=lambda m: m.bit_count())
        decomposition.append((c, c & labels[host], w.weights[c]))
    dim = _mink_dimension([face for _, face, _ in decomposition], len(w.ground))
    return decomposition, dim


def _mink_dimension(faces: Iterable[int], n: int) -> int:
    """Dimension of a Minkowski sum of simplex faces: number of elements in
    the union minus the number of connected components of the face
    hypergraph (union-find over shared elements)."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    touched = 0
    for face in faces:
        touched |= face
        idxs = [i for i in range(n) if face >> i & 1]
        for i in idxs[1:]:
            parent[find(i)] = find(idxs[0])
    roots = {find(i) for i in range(n) if touched >> i & 1}
    return touched.bit_count() - len(roots)


def mink_realizes_fan(b: BuildingSet, w: MinkowskiWeights) -> bool:
    """Oracle check that the weighted sum's normal fan is the nested fan."""
    if any(m not in b.mask_set for m in w.weights):
        raise BlockNotInBuildingSet("weight support must consist of blocks")
    return normal_fan_matches(b, defo_hrep(weights_to_rhs(w)))
