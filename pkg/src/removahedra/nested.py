"""Nested sets, nested-complex enumeration, building trees, and flips."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Collection, Iterable

from .building import BuildingSet
from .errors import (
    BlockNotInBuildingSet,
    GroundSetMember,
    GroundTooLarge,
    MultipleFlipsFound,
    NoFlipFound,
    NotAdjacent,
    NotMaximal,
    NotNested,
)

ENUMERATION_LIMIT = 12


class NestedSet:
    """An antichain-free family of proper blocks of a building set."""

    def __init__(self, owner: BuildingSet, masks: Iterable[int]):
        self.owner = owner
        self.masks = owner.sort_masks(masks)
        self.mask_set = frozenset(self.masks)

    @cached_property
    def blocks(self) -> tuple[frozenset[str], ...]:
        return tuple(self.owner.unmask(m) for m in self.masks)

    @property
    def is_maximal(self) -> bool:
        return len(self.masks) == self.owner.n - 1

    def __eq__(self, other):
        return (
            isinstance(other, NestedSet)
            and self.owner == other.owner
            and self.mask_set == other.mask_set
        )

    def __hash__(self):
        return hash((self.owner.ground, self.mask_set))

    def __repr__(self):
        return f"NestedSet({[sorted(blk) for blk in self.blocks]})"


def _pair_ok(a: int, b: int) -> bool:
    u = a | b
    return a & b == 0 or u == a or u == b


def _disjoint_union_hits_block(
    b: BuildingSet, members: Collection[int], new: int
) -> bool:
    """Does some pairwise-disjoint subfamily extend `new` to a union in b?

    Only subfamilies containing `new` need checking when `members` is already
    known to be nested.
    """
    disj = [m for m in members if m & new == 0]

    def rec(i: int, union: int, count: int) -> bool:
        if count >= 2 and union in b.mask_set:
            return True
        for j in range(i, len(disj)):
            m = disj[j]
            if m & union == 0 and rec(j + 1, union | m, count + 1):
                return True
        return False

    return rec(0, new, 1)


def _is_nested_masks(b: BuildingSet, masks: Collection[int]) -> bool:
    masks = list(masks)
    for i, x in enumerate(masks):
        for y in masks[i + 1 :]:
            if not _pair_ok(x, y):
                return False
    for i, x in enumerate(masks):
        if _disjoint_union_hits_block(b, masks[:i], x):
            return False
    return True


def is_nested(b: BuildingSet, n: Iterable[Collection[str]]) -> bool:
    """Check conditions (N1) pairwise nested-or-disjoint and (N2) no
    pairwise-disjoint subfamily whose union is a block."""
    masks = []
    for blk in n:
        m = b.mask(blk)
        if m not in b.mask_set:
            raise BlockNotInBuildingSet(f"{sorted(blk)} is not a block")
        if m == b.full:
            raise GroundSetMember("nested sets may not contain the ground set")
        masks.append(m)
    return _is_nested_masks(b, masks)


def nested_set(b: BuildingSet, blocks: Iterable[Collection[str]]) -> NestedSet:
    """Validated NestedSet constructor; raises NotNested on (N1)/(N2) failure."""
    if not is_nested(b, blocks):
        raise NotNested(f"{[sorted(x) for x in blocks]} is not nested")
    return NestedSet(b, (b.mask(blk) for blk in blocks))


def _enumerate_nested_masks(b: BuildingSet, maximal_only: bool) -> list[tuple[int, ...]]:
    if b.n > ENUMERATION_LIMIT:
        raise GroundTooLarge(f"nested-complex enumeration limited to {ENUMERATION_LIMIT}")
    proper = b.proper_masks
    want = b.n - 1
    out: list[tuple[int, ...]] = []
    current: list[int] = []

    def extend(start: int):
        if not maximal_only or len(current) == want:
            out.append(tuple(current))
        if len(current) == want:
            # maximal nested sets of a connected building set have n-1 members
            return
        for i in range(start, len(proper)):
            c = proper[i]
            if all(_pair_ok(c, m) for m in current) and not _disjoint_union_hits_block(
                b, current, c
            ):
                current.append(c)
                extend(i + 1)
                current.pop()

    extend(0)
    return out


def nested_complex(b: BuildingSet, maximal_only: bool = False) -> list[NestedSet]:
    """All nested sets of b (or only the inclusion-maximal ones), in a
    deterministic order."""
    return [NestedSet(b, masks) for masks in _enumerate_nested_masks(b, maximal_only)]


# -- building trees ---------------------------------------------------------


@dataclass(frozen=True)
class BTreeNode:
    label: int  # mask of the label set
    descendant: int  # mask of the descendant set D(v)
    children: tuple["BTreeNode", ...]


class BTree:
    """Rooted tree whose label sets partition the ground set and whose
    descendant sets are blocks."""

    def __init__(self, owner: BuildingSet, root: BTreeNode):
        self.owner = owner
        self.root = root

    @cached_property
    def nodes(self) -> tuple[BTreeNode, ...]:
        out = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(v.children)
        return tuple(out)

    @property
    def is_maximal(self) -> bool:
        return all(v.label.bit_count() == 1 for v in self.nodes)

    # element-level views, defined for maximal trees only

    @cached_property
    def element_of(self) -> dict[BTreeNode, str]:
        self.require_maximal()
        b = self.owner
        return {v: b.ground[v.label.bit_length() - 1] for v in self.nodes}

    @cached_property
    def parent(self) -> dict[str, str | None]:
        elem = self.element_of
        par: dict[str, str | None] = {elem[self.root]: None}
        for v in self.nodes:
            for c in v.children:
                par[elem[c]] = elem[v]
        return par

    @cached_property
    def children_of(self) -> dict[str, tuple[str, ...]]:
        elem = self.element_of
        return {elem[v]: tuple(elem[c] for c in v.children) for v in self.nodes}

    @cached_property
    def subtree_mask(self) -> dict[str, int]:
        elem = self.element_of
        return {elem[v]: v.descendant for v in self.nodes}

    @property
    def root_element(self) -> str:
        return self.element_of[self.root]

    def require_maximal(self):
        if not self.is_maximal:
            raise NotMaximal("operation requires a maximal building tree")

    def __eq__(self, other):
        return (
            isinstance(other, BTree)
            and self.owner == other.owner
            and self.root == other.root
        )

    def __hash__(self):
        return hash((self.owner.ground, self.root))


def btree_from_nested(b: BuildingSet, n: NestedSet) -> BTree:
    """Hasse diagram of the members of n together with the ground set."""
    members = sorted(n.masks, key=lambda m: m.bit_count())
    parents: dict[int, int] = {}
    for i, m in enumerate(members):
        best = b.full
        for other in members[i + 1 :]:
            if m | other == other and other != m and other | best == best:
                best = other
        parents[m] = best

    def build(mask: int) -> BTreeNode:
        kids = tuple(
            build(m) for m in members if parents.get(m) == mask and m != mask
        )
        label = mask
        for k in kids:
            label &= ~k.descendant
        return BTreeNode(label=label, descendant=mask, children=kids)

    return BTree(b, build(b.full))


def nested_from_btree(t: BTree) -> NestedSet:
    """Descendant sets of all non-root nodes."""
    masks = [v.descendant for v in t.nodes if v is not t.root]
    if not _is_nested_masks(t.owner, masks):
        raise NotNested("tree descendant sets do not form a nested set")
    return NestedSet(t.owner, masks)


def flip(
    b: BuildingSet, n: NestedSet, removed: Collection[str]
) -> tuple[NestedSet, frozenset[str]]:
    """Exchange `removed` for the unique other block completing n minus it.

    Implemented by exhaustive candidate search, which doubles as an audit of
    the uniqueness implied by the fan being complete and simplicial.
    """
    if not n.is_maximal:
        raise NotMaximal("flips are defined on maximal nested sets")
    rm = b.mask(removed) if not isinstance(removed, int) else removed
    if rm not in n.mask_set:
        raise BlockNotInBuildingSet(f"{removed} is not a member of the nested set")
    base = [m for m in n.masks if m != rm]
    found = []
    for c in b.proper_masks:
        if c == rm or c in n.mask_set:
            continue
        if all(_pair_ok(c, m) for m in base) and _is_nested_masks(b, base + [c]):
            found.append(c)
    if not found:
        raise NoFlipFound("no exchange completes the wall; fan is inconsistent")
    if len(found) > 1:
        raise MultipleFlipsFound("several exchanges complete the wall")
    added = found[0]
    return NestedSet(b, base + [added]), b.unmask(added)


@dataclass(frozen=True)
class Flip:
    """An unordered adjacency of maximal nested sets: n1 minus {b1} equals
    n2 minus {b2}."""

    n1: NestedSet
    n2: NestedSet
    b1: frozenset[str]
    b2: frozenset[str]


def all_flips(b: BuildingSet, maximal: list[NestedSet] | None = None) -> list[Flip]:
    """Every flip once, by grouping the walls of all maximal nested sets.

    Each wall (a maximal nested set minus one member) must occur in exactly
    two chambers; anything else is an internal inconsistency and aborts.
    """
    if maximal is None:
        maximal = nested_complex(b, maximal_only=True)
    walls: dict[frozenset[int], list[tuple[NestedSet, int]]] = {}
    for n in maximal:
        for m in n.masks:
            walls.setdefault(n.mask_set - {m}, []).append((n, m))
    flips = []
    for wall, chambers in sorted(
        walls.items(), key=lambda kv: sorted(b.key(m) for m in kv[0])
    ):
        if len(chambers) < 2:
            raise NoFlipFound(f"wall {wall} lies in a single chamber")
        if len(chambers) > 2:
            raise MultipleFlipsFound(f"wall {wall} lies in {len(chambers)} chambers")
        (na, ma), (nb, mb) = sorted(chambers, key=lambda c: b.key(c[1]))
        flips.append(Flip(n1=na, n2=nb, b1=b.unmask(ma), b2=b.unmask(mb)))
    return flips


def exchangeable_pairs(b: BuildingSet) -> set[frozenset[frozenset[str]]]:
    """All unordered pairs of blocks swapped by some flip."""
    return {frozenset((f.b1, f.b2)) for f in all_flips(b)}


def exchangeable_closure_holds(b: BuildingSet) -> bool:
    """True iff the intersection of any two exchangeable blocks is empty or a
    block."""
    for pair in exchangeable_pairs(b):
        x, y = pair
        inter = b.mask(x) & b.mask(y)
        if inter and inter not in b.mask_set:
            return False
    return True


# -- flip contexts -----------------------------------------------------------


@dataclass(frozen=True)
class FlipContext:
    """Classification of the children around an exchanged pair of nodes.

    s is a child of s_prime in the first tree and its parent in the second;
    same_s / same_s_prime keep their parent across the flip, moved_to_s_prime
    hang under s then s_prime, moved_to_s the other way around.
    """

    s: str
    s_prime: str
    same_s: frozenset[str]  # S: children of s in both trees
    same_s_prime: frozenset[str]  # S': children of s' in both trees
    moved_to_s_prime: frozenset[str]  # R: under s first, under s' second
    moved_to_s: frozenset[str]  # R': under s' first, under s second
    delta_s: int
    delta_s_prime: int
    delta_r: int
    delta_r_prime: int
    pi_s: int
    pi_s_prime: int
    pi_r: int
    pi_r_prime: int
    removed: frozenset[str]  # D(s) in the first tree
    added: frozenset[str]  # D(s') in the second tree


def _delta_pi(t: BTree, elems: Iterable[str]) -> tuple[int, int]:
    sizes = [t.subtree_mask[e].bit_count() for e in elems]
    delta = sum(sizes)
    pi = sum(
        sizes[i] * sizes[j] for i in range(len(sizes)) for j in range(i + 1, len(sizes))
    )
    return delta, pi


def flip_context(t: BTree, t_prime: BTree) -> FlipContext:
    """Identify the exchanged nodes of two adjacent maximal trees and classify
    the children of the contracted node."""
    t.require_maximal()
    t_prime.require_maximal()
    if t.owner != t_prime.owner:
        raise NotAdjacent("trees belong to different building sets")
    n1 = {v.descendant for v in t.nodes if v is not t.root}
    n2 = {v.descendant for v in t_prime.nodes if v is not t_prime.root}
    removed = n1 - n2
    added = n2 - n1
    if len(removed) != 1 or len(added) != 1:
        raise NotAdjacent("trees do not differ in exactly one block")
    b = t.owner
    rm = removed.pop()
    ad = added.pop()
    s = None
    for e, m in t.subtree_mask.items():
        if m == rm:
            s = e
            break
    if s is None:
        raise NotAdjacent("removed block is not a subtree of the first tree")
    s_prime = t.parent[s]
    if s_prime is None:
        raise NotAdjacent("removed block is the whole ground set")
    if t_prime.subtree_mask.get(s_prime) != ad or t_prime.parent[s_prime] != s:
        raise NotAdjacent("exchanged nodes are not flipped between the trees")
    same_s, same_sp, moved_sp, moved_s = [], [], [], []
    for c in t.children_of[s]:
        (same_s if t_prime.parent[c] == s else moved_sp).append(c)
        if t_prime.parent[c] not in (s, s_prime):
            raise NotAdjacent(f"child {c} moved outside the exchanged pair")
    for c in t.children_of[s_prime]:
        if c == s:
            continue
        (same_sp if t_prime.parent[c] == s_prime else moved_s).append(c)
        if t_prime.parent[c] not in (s, s_prime):
            raise NotAdjacent(f"child {c} moved outside the exchanged pair")
    d_s, p_s = _delta_pi(t, same_s)
    d_sp, p_sp = _delta_pi(t, same_sp)
    d_r, p_r = _delta_pi(t, moved_sp)
    d_rp, p_rp = _delta_pi(t, moved_s)
    return FlipContext(
        s=s,
        s_prime=s_prime,
        same_s=frozenset(same_s),
        same_s_prime=frozenset(same_sp),
        moved_to_s_prime=frozenset(moved_sp),
        moved_to_s=frozenset(moved_s),
        delta_s=d_s,
        delta_s_prime=d_sp,
        delta_r=d_r,
        delta_r_prime=d_rp,
        pi_s=p_s,
        pi_s_prime=p_sp,
        pi_r=p_r,
        pi_r_prime=p_rp,
        removed=b.unmask(rm),
        added=b.unmask(ad),
    )
