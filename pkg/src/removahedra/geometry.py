"""Vertex coordinates, flip coefficients, H-descriptions, and realizability.

All arithmetic in this module is exact; coordinates are Python Fractions (or
ints where integrality is guaranteed) in ground-set order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .building import BuildingSet
from .errors import CrossCheckFailed, GammaTooSmall, NotMaximal
from .nested import (
    BTree,
    Flip,
    FlipContext,
    NestedSet,
    all_flips,
    btree_from_nested,
    flip_context,
    nested_complex,
)

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class HPolytope:
    """Half-space description restricted to the hyperplane sum(x) == sum_rhs.

    Each constraint (mask, rhs) reads: the coordinates indexed by mask sum to
    at least rhs.
    """

    ground: tuple[str, ...]
    sum_rhs: Fraction
    constraints: tuple[tuple[int, Fraction], ...]

    def constraint_blocks(self) -> list[tuple[tuple[str, ...], Fraction]]:
        n = len(self.ground)
        return [
            (tuple(self.ground[i] for i in range(n) if m >> i & 1), rhs)
            for m, rhs in self.constraints
        ]


@dataclass(frozen=True)
class SkewParams:
    gamma: Fraction

    def __post_init__(self):
        if self.gamma <= 2:
            raise GammaTooSmall(f"gamma must exceed 2, got {self.gamma}")

    def scaled_powers(self, n: int) -> tuple[int, ...]:
        """gamma**k times denominator**n for k = 0..n: integer workalikes of
        the powers of gamma, all on the common denominator q**n."""
        return _scaled_powers(self.gamma, n)


def btree_point(t: BTree) -> tuple[int, ...]:
    """Coordinates of a maximal tree: at each node, the number of tree paths
    (trivial ones included) whose topmost vertex is that node."""
    t.require_maximal()
    b = t.owner
    coords = [0] * b.n
    for e in t.parent:
        sizes = [t.subtree_mask[c].bit_count() for c in t.children_of[e]]
        total = sum(sizes)
        cross = sum(
            sizes[i] * sizes[j]
            for i in range(len(sizes))
            for j in range(i + 1, len(sizes))
        )
        coords[b.index[e]] = 1 + total + cross
    return tuple(coords)


def delta_from_context(ctx: FlipContext) -> int:
    return (
        (ctx.delta_s + 1) * (ctx.delta_s_prime + 1)
        + ctx.delta_r_prime * (ctx.delta_s + ctx.delta_s_prime + ctx.delta_r + 2)
        + ctx.pi_r_prime
        - ctx.pi_r
    )


def delta(t: BTree, t_prime: BTree) -> int:
    """Flip coefficient, cross-checked against the coordinate difference of
    the two trees' points."""
    ctx = flip_context(t, t_prime)
    d = delta_from_context(ctx)
    _check_point_difference(
        t, t_prime, ctx, Fraction(d), btree_point(t), btree_point(t_prime)
    )
    return d


def _check_point_difference(t, t_prime, ctx, d, p, p_prime):
    b = t.owner
    i_s = b.index[ctx.s]
    i_sp = b.index[ctx.s_prime]
    for i in range(b.n):
        expect = d if i == i_s else -d if i == i_sp else 0
        if p_prime[i] - p[i] != expect:
            raise CrossCheckFailed(
                "flip coefficient disagrees with the point difference: "
                f"coeff {d}, points {p} -> {p_prime}"
            )


def removahedron_hrep(b: BuildingSet) -> HPolytope:
    """One permutahedron facet inequality per proper block; the ground set
    contributes the defining equality."""
    n = b.n
    return HPolytope(
        ground=b.ground,
        sum_rhs=Fraction(comb(n + 1, 2)),
        constraints=tuple(
            (m, Fraction(comb(m.bit_count() + 1, 2))) for m in b.proper_masks
        ),
    )


def skew_removahedron_hrep(b: BuildingSet, p: SkewParams) -> HPolytope:
    """Right-hand sides gamma**|B| instead of the binomial values."""
    return HPolytope(
        ground=b.ground,
        sum_rhs=p.gamma**b.n,
        constraints=tuple((m, p.gamma ** m.bit_count()) for m in b.proper_masks),
    )


def interior_functional(n: NestedSet) -> Point:
    """Sum over the members of the projections of their indicator vectors to
    the sum-zero hyperplane; lies in the relative interior of the member cone."""
    if not n.is_maximal:
        raise NotMaximal("interior functionals are defined for maximal nested sets")
    b = n.owner
    coords = [Fraction(0)] * b.n
    for m in n.masks:
        size = m.bit_count()
        shift = Fraction(size, b.n)
        for i in range(b.n):
            coords[i] += (1 if m >> i & 1 else 0) - shift
    return tuple(coords)


@lru_cache(maxsize=None)
def _scaled_powers(gamma: Fraction, n: int) -> tuple[int, ...]:
    p, q = gamma.numerator, gamma.denominator
    return tuple(p**k * q ** (n - k) for k in range(n + 1))


def _skew_point_scaled(t: BTree, pows: tuple[int, ...]) -> list[int]:
    """Coordinates times denominator**n, as plain integers."""
    t.require_maximal()
    b = t.owner
    coords = [0] * b.n
    for e in t.parent:
        val = pows[t.subtree_mask[e].bit_count()]
        for c in t.children_of[e]:
            val -= pows[t.subtree_mask[c].bit_count()]
        coords[b.index[e]] = val
    return coords


def skew_point(t: BTree, p: SkewParams) -> Point:
    """Unique point whose subtree sums equal gamma**|D(s)| at every node s."""
    qn = p.gamma.denominator ** t.owner.n
    scaled = _skew_point_scaled(t, p.scaled_powers(t.owner.n))
    return tuple(Fraction(x, qn) for x in scaled)


def skew_delta(
    t: BTree, t_prime: BTree, p: SkewParams, ctx: FlipContext | None = None
) -> Fraction:
    """Skew flip coefficient, cross-checked against the skew point difference;
    strictly positive for every flip once gamma exceeds 2."""
    if ctx is None:
        ctx = flip_context(t, t_prime)
    b = t.owner
    pows = p.scaled_powers(b.n)
    gamma_r = sum(pows[t.subtree_mask[c].bit_count()] for c in ctx.moved_to_s_prime)
    gamma_rp = sum(pows[t.subtree_mask[c].bit_count()] for c in ctx.moved_to_s)
    d = (
        pows[2 + ctx.delta_s + ctx.delta_r_prime + ctx.delta_s_prime + ctx.delta_r]
        - pows[1 + ctx.delta_s_prime + ctx.delta_r]
        - pows[1 + ctx.delta_s + ctx.delta_r]
        + gamma_r
        - gamma_rp
    )
    _check_point_difference(
        t,
        t_prime,
        ctx,
        d,
        _skew_point_scaled(t, pows),
        _skew_point_scaled(t_prime, pows),
    )
    return Fraction(d, p.gamma.denominator**b.n)


@dataclass(frozen=True)
class FlipCertificate:
    """A flip together with its coefficient, re-checkable by hand."""

    nested_pair: tuple[NestedSet, NestedSet]
    blocks: tuple[frozenset[str], frozenset[str]]
    context: FlipContext
    coefficient: Fraction


@dataclass(frozen=True)
class RealizabilityResult:
    realizable: bool
    # one (nested set, point) per maximal nested set when realizable
    vertices: tuple[tuple[NestedSet, tuple[int, ...]], ...] | None
    certificate: FlipCertificate | None
    flip_count: int


def _flip_certificate(b: BuildingSet, f: Flip, skew: SkewParams | None = None):
    t = btree_from_nested(b, f.n1)
    tp = btree_from_nested(b, f.n2)
    ctx = flip_context(t, tp)
    if skew is None:
        d = Fraction(delta(t, tp))
    else:
        d = skew_delta(t, tp, skew)
    return FlipCertificate(
        nested_pair=(f.n1, f.n2), blocks=(f.b1, f.b2), context=ctx, coefficient=d
    )


def iter_flip_certificates(b: BuildingSet, skew: SkewParams | None = None):
    """Certificates for every flip, in deterministic wall order."""
    for f in all_flips(b):
        yield _flip_certificate(b, f, skew)


def is_removahedron_realizable(
    b: BuildingSet, collect_vertices: bool = True
) -> RealizabilityResult:
    """Decide whether every flip coefficient is positive; on failure, return
    the first failing flip (deterministic order) as a certificate."""
    maximal = nested_complex(b, maximal_only=True)
    flips = all_flips(b, maximal)
    for f in flips:
        cert = _flip_certificate(b, f)
        if cert.coefficient <= 0:
            return RealizabilityResult(
                realizable=False,
                vertices=None,
                certificate=cert,
                flip_count=len(flips),
            )
    vertices = None
    if collect_vertices:
        vertices = tuple(
            (n, btree_point(btree_from_nested(b, n))) for n in maximal
        )
    return RealizabilityResult(
        realizable=True, vertices=vertices, certificate=None, flip_count=len(flips)
    )


def delta_symmetric(t: BTree, t_prime: BTree) -> bool:
    return delta(t, t_prime) == delta(t_prime, t)


def as_mapping(ground: Sequence[str], point: Point) -> dict[str, Fraction]:
    return dict(zip(ground, point))
