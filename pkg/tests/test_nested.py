import pytest

from removahedra import (
    all_flips,
    btree_from_nested,
    exchangeable_closure_holds,
    exchangeable_pairs,
    flip,
    flip_context,
    is_nested,
    nested_complex,
    nested_from_btree,
    nested_set,
)
from removahedra.corpus import complete_building_set
from removahedra.errors import NotAdjacent, NotNested


def test_is_nested_counterexamples(b0, b3):
    assert not is_nested(b0, [{"1"}, {"2"}])  # union {1,2} is a block
    assert not is_nested(b3, [{"1", "2", "3"}, {"1", "3", "4", "5"}])


def test_is_nested_positive(b0, b3):
    assert is_nested(b0, [{"1"}, {"1", "2"}, {"1", "2", "3"}])
    assert is_nested(b3, [{"2"}, {"4"}])  # union {2,4} is not a block


def test_nested_set_validates(b0):
    with pytest.raises(NotNested):
        nested_set(b0, [{"1"}, {"2"}])
    n = nested_set(b0, [{"1"}, {"1", "2"}])
    assert set(n.blocks) == {frozenset("1"), frozenset("12")}


def test_maximal_size_is_n_minus_one(b2, b3, b4):
    for b in (b2, b3, b4):
        for n in nested_complex(b, maximal_only=True):
            assert len(n.masks) == b.n - 1


def test_nested_complex_counts(b5p, paths):
    assert len(nested_complex(b5p, maximal_only=True)) == 4
    # Catalan numbers for path graphs
    assert len(nested_complex(paths[3], maximal_only=True)) == 5
    assert len(nested_complex(paths[4], maximal_only=True)) == 14


def test_nested_complex_contains_faces(b5p):
    all_sets = {n.mask_set for n in nested_complex(b5p)}
    for n in nested_complex(b5p, maximal_only=True):
        for m in n.masks:
            assert (n.mask_set - {m}) in all_sets


def test_btree_roundtrip(b2):
    for n in nested_complex(b2, maximal_only=True):
        t = btree_from_nested(b2, n)
        assert nested_from_btree(t) == n
        for v in t.nodes:
            assert v.descendant in b2.mask_set


def test_btree_structure(b5p):
    n = nested_set(b5p, [{"1"}, {"1", "2"}])
    t = btree_from_nested(b5p, n)
    assert t.root_element == "3"
    assert t.parent == {"3": None, "2": "3", "1": "2"}


def test_flip(b5p):
    n = nested_set(b5p, [{"1"}, {"1", "2"}])
    n2, added = flip(b5p, n, {"1"})
    assert added == frozenset("2")
    assert n2.mask_set == {b5p.mask("2"), b5p.mask("12")}


def test_all_flips_pentagon(paths):
    b = paths[3]
    flips = all_flips(b)
    # the 3-path associahedron is a pentagon: five maximal cones, five walls
    assert len(flips) == 5
    for f in flips:
        assert f.n1.mask_set - {b.mask(f.b1)} == f.n2.mask_set - {b.mask(f.b2)}


def test_flip_count_matches_edge_count(b2):
    maximal = nested_complex(b2, maximal_only=True)
    flips = all_flips(b2, maximal)
    # a simple (n-1)-polytope has |vertices| * (n-1) / 2 edges
    assert len(flips) == len(maximal) * (b2.n - 1) // 2


def test_exchangeable_pairs_b4(b4):
    assert frozenset(
        (frozenset("1234"), frozenset("345"))
    ) in exchangeable_pairs(b4)


def test_exchangeable_closure_b4(b4):
    assert not exchangeable_closure_holds(b4)


def test_exchangeable_closure_complete():
    assert exchangeable_closure_holds(complete_building_set(4))


def test_flip_context_chains():
    b = complete_building_set(3)
    t = btree_from_nested(b, nested_set(b, [{"1"}, {"1", "2"}]))
    tp = btree_from_nested(b, nested_set(b, [{"2"}, {"1", "2"}]))
    ctx = flip_context(t, tp)
    assert (ctx.s, ctx.s_prime) == ("1", "2")
    assert ctx.same_s == ctx.same_s_prime == frozenset()
    assert ctx.moved_to_s == ctx.moved_to_s_prime == frozenset()
    assert ctx.delta_s == ctx.delta_s_prime == ctx.delta_r == ctx.delta_r_prime == 0


def test_flip_context_with_descendants(b5p):
    t = btree_from_nested(b5p, nested_set(b5p, [{"1"}, {"1", "2"}]))
    tp = btree_from_nested(b5p, nested_set(b5p, [{"2"}, {"1", "2"}]))
    ctx = flip_context(t, tp)
    assert (ctx.s, ctx.s_prime) == ("1", "2")
    assert ctx.removed == frozenset("1")
    assert ctx.added == frozenset("2")


def test_flip_context_rejects_non_adjacent(b2):
    maximal = nested_complex(b2, maximal_only=True)
    trees = [btree_from_nested(b2, n) for n in maximal]
    adjacent = {
        frozenset((f.n1.mask_set, f.n2.mask_set)) for f in all_flips(b2, maximal)
    }
    for i, t in enumerate(trees):
        for tp in trees[i + 1:]:
            key = frozenset(
                (nested_from_btree(t).mask_set, nested_from_btree(tp).mask_set)
            )
            if key not in adjacent:
                with pytest.raises(NotAdjacent):
                    flip_context(t, tp)
                break
        else:
            continue
        break
