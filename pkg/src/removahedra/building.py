"""Building sets, graphical building sets, and their structural predicates.

Blocks are represented internally as bitmasks over the ground-set order; the
public API speaks frozensets of element identifiers.  Everything is immutable
and pure, so values can be shared freely between threads.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Collection, Iterable, Sequence

from .errors import (
    BlockNotInBuildingSet,
    EmptyBlock,
    GroundTooLarge,
    MissingSingleton,
    NotConnected,
    NotIntersectionClosed,
    UnionMissing,
    UnknownElement,
)

GROUND_LIMIT = 12


def _check_ground(ground: Sequence[str]) -> tuple[str, ...]:
    ground = tuple(str(g) for g in ground)
    if not ground:
        raise EmptyBlock("ground set must be nonempty")
    if len(set(ground)) != len(ground):
        raise UnknownElement(f"duplicate ground elements in {ground}")
    if len(ground) > GROUND_LIMIT:
        raise GroundTooLarge(
            f"ground set has {len(ground)} elements; limit is {GROUND_LIMIT}"
        )
    return ground


class BuildingSet:
    """A validated connected building set on an ordered ground set.

    Construct through :func:`make_building_set` or
    :func:`graphical_building_set`; the constructor trusts its arguments.
    """

    def __init__(self, ground: tuple[str, ...], masks: tuple[int, ...]):
        self.ground = ground
        self.index = {g: i for i, g in enumerate(ground)}
        self.masks = masks
        self.mask_set = frozenset(masks)
        self.n = len(ground)
        self.full = (1 << self.n) - 1

    # -- mask helpers -----------------------------------------------------

    def mask(self, elems: Iterable[str]) -> int:
        m = 0
        for e in elems:
            i = self.index.get(e)
            if i is None:
                raise UnknownElement(f"element {e!r} not in ground set {self.ground}")
            m |= 1 << i
        return m

    def unmask(self, mask: int) -> frozenset[str]:
        return frozenset(self.ground[i] for i in range(self.n) if mask >> i & 1)

    def sorted_elems(self, mask: int) -> tuple[str, ...]:
        return tuple(self.ground[i] for i in range(self.n) if mask >> i & 1)

    def key(self, mask: int) -> tuple[int, ...]:
        """Canonical sort key of a block: its element indices in ground order."""
        return tuple(i for i in range(self.n) if mask >> i & 1)

    def sort_masks(self, masks: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(masks, key=self.key))

    # -- views -------------------------------------------------------------

    @cached_property
    def blocks(self) -> tuple[frozenset[str], ...]:
        return tuple(self.unmask(m) for m in self.masks)

    @cached_property
    def proper_masks(self) -> tuple[int, ...]:
        return tuple(m for m in self.masks if m != self.full)

    def __eq__(self, other):
        return (
            isinstance(other, BuildingSet)
            and self.ground == other.ground
            and self.mask_set == other.mask_set
        )

    def __hash__(self):
        return hash((self.ground, self.mask_set))

    def __repr__(self):
        return f"BuildingSet(ground={self.ground}, {len(self.masks)} blocks)"

    # -- structural predicates ----------------------------------------------

    @cached_property
    def intersection_witness(self) -> tuple[frozenset[str], frozenset[str]] | None:
        """A pair of blocks whose intersection is neither empty nor a block."""
        for a, b in combinations(self.masks, 2):
            inter = a & b
            if inter and inter not in self.mask_set:
                return (self.unmask(a), self.unmask(b))
        return None

    @property
    def closed_under_intersection(self) -> bool:
        return self.intersection_witness is None

    def require_intersection_closed(self):
        w = self.intersection_witness
        if w is not None:
            raise NotIntersectionClosed(
                f"not closed under intersection, witness {sorted(w[0])}, {sorted(w[1])}"
            )


def make_building_set(
    ground: Sequence[str], blocks: Iterable[Collection[str]]
) -> BuildingSet:
    """Validate and build a connected building set.

    Duplicate blocks are deduplicated.  Raises MissingSingleton, UnionMissing
    (with a witness pair), NotConnected, EmptyBlock or GroundTooLarge.
    """
    ground = _check_ground(ground)
    b = BuildingSet(ground, ())
    masks = set()
    for blk in blocks:
        m = b.mask(blk)
        if m == 0:
            raise EmptyBlock("blocks must be nonempty")
        masks.add(m)
    for i in range(b.n):
        if (1 << i) not in masks:
            raise MissingSingleton(ground[i])
    for x, y in combinations(sorted(masks), 2):
        if x & y and (x | y) not in masks:
            raise UnionMissing(b.unmask(x), b.unmask(y))
    if b.full not in masks:
        # singletons + union axiom hold, so the maximal blocks are disjoint
        raise NotConnected(
            "the full ground set is not a block (building set is disconnected)"
        )
    return BuildingSet(ground, b.sort_masks(masks))


class Graph:
    """A finite simple connected graph on an ordered vertex set."""

    def __init__(self, vertices: Sequence[str], edges: Iterable[Collection[str]]):
        self.vertices = _check_ground(vertices)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self.n = len(self.vertices)
        adj = [0] * self.n
        edge_set = set()
        for e in edges:
            pair = tuple(e)
            if len(pair) != 2 or pair[0] == pair[1]:
                raise EmptyBlock(f"edge {pair} is not a pair of distinct vertices")
            u, v = pair
            if u not in self.index or v not in self.index:
                raise UnknownElement(f"edge {pair} references unknown vertex")
            iu, iv = self.index[u], self.index[v]
            adj[iu] |= 1 << iv
            adj[iv] |= 1 << iu
            edge_set.add(frozenset((u, v)))
        self.adjacency = tuple(adj)
        self.edges = frozenset(edge_set)
        if not self._mask_connected((1 << self.n) - 1):
            raise NotConnected("graph is not connected")

    def _mask_connected(self, mask: int) -> bool:
        if mask == 0:
            return False
        start = mask & -mask
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                bit = m & -m
                m ^= bit
                nxt |= self.adjacency[bit.bit_length() - 1]
            frontier = nxt & mask & ~seen
            seen |= frontier
        return seen == mask

    def __repr__(self):
        return f"Graph(vertices={self.vertices}, {len(self.edges)} edges)"


def graphical_building_set(g: Graph) -> BuildingSet:
    """All vertex sets inducing connected subgraphs of a connected graph."""
    masks = [m for m in range(1, 1 << g.n) if g._mask_connected(m)]
    b = BuildingSet(g.vertices, ())
    return BuildingSet(g.vertices, b.sort_masks(masks))


def is_closed_under_intersection(b: BuildingSet) -> bool:
    return b.closed_under_intersection


def intersection_witness(b: BuildingSet) -> tuple[frozenset[str], frozenset[str]] | None:
    return b.intersection_witness


def is_chordful(g: Graph) -> bool:
    """True iff every cycle of g induces a clique.

    Decided through the equivalence with intersection-closure of the
    graphical building set, which avoids enumerating cycles.
    """
    return graphical_building_set(g).closed_under_intersection


def b_hull(b: BuildingSet, r: Collection[str]) -> frozenset[str]:
    """Inclusion-minimal block containing r (requires intersection closure)."""
    return b.unmask(b_hull_mask(b, b.mask(r)))


def b_hull_mask(b: BuildingSet, r: int) -> int:
    b.require_intersection_closed()
    if r == 0:
        raise EmptyBlock("hull of the empty set is undefined")
    hull = b.full
    for m in b.masks:
        if m & r == r and m | hull != m:
            hull &= m
    # intersection closure makes the intersection of containing blocks a block
    assert hull in b.mask_set
    return hull


def b_path(b: BuildingSet, s: str, t: str) -> frozenset[str]:
    """Smallest block containing {s, t}; equals {s} when s == t."""
    return b.unmask(b_hull_mask(b, b.mask((s, t))))


def all_b_paths(b: BuildingSet) -> set[frozenset[str]]:
    """The hulls of all unordered element pairs (repetition allowed)."""
    return {b.unmask(m) for m in all_b_path_masks(b)}


def all_b_path_masks(b: BuildingSet) -> set[int]:
    out = set()
    for i in range(b.n):
        for j in range(i, b.n):
            out.add(b_hull_mask(b, (1 << i) | (1 << j)))
    return out


def is_generating(b: BuildingSet, s: Iterable[Collection[str]]) -> bool:
    """True iff every block is covered from inside through each of its elements.

    Concretely: for every block B and x in B, the union of the members C of s
    with x in C and C a subset of B must be B itself.
    """
    s_masks = []
    for c in s:
        m = b.mask(c)
        if m not in b.mask_set:
            raise BlockNotInBuildingSet(f"{sorted(c)} is not a block")
        s_masks.append(m)
    return is_generating_masks(b, s_masks)


def is_generating_masks(b: BuildingSet, s_masks: Iterable[int]) -> bool:
    s_masks = list(s_masks)
    for blk in b.masks:
        m = blk
        while m:
            bit = m & -m
            m ^= bit
            union = 0
            for c in s_masks:
                if c & bit and c | blk == blk:
                    union |= c
            if union != blk:
                return False
    return True
