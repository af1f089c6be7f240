"""Acceptance suite: twelve numbered end-to-end criteria, exact arithmetic
throughout (zero tolerance).  One pass/fail line per criterion is printed in
the terminal summary (see conftest)."""

from fractions import Fraction
from itertools import permutations
from math import comb

import pytest

from removahedra import (
    SkewParams,
    all_flips,
    btree_from_nested,
    btree_point,
    canonical_weights,
    defo_hrep,
    delta,
    enumerate_vertices,
    exchangeable_closure_holds,
    graphical_building_set,
    is_chordful,
    is_closed_under_intersection,
    is_removahedron_realizable,
    is_simple,
    mink_realizes_fan,
    nested_complex,
    normal_fan_matches,
    polytopes_equal,
    removahedron_hrep,
    skew_delta,
    skew_removahedron_hrep,
    weights_to_rhs,
)
from removahedra.nested import flip_context
GAMMAS = (Fraction(3), Fraction(5, 2))
SKEWS = tuple(SkewParams(g) for g in GAMMAS)

# constraint-subset budget for the per-instance oracle fan checks; dense
# 7-element instances above it are covered by the flip-coefficient check only
FAN_CHECK_BUDGET = 2_000_000


def _within_oracle_capacity(p):
    n = len(p.ground)
    return n <= 8 and comb(len(p.constraints) + 1, n - 1) <= FAN_CHECK_BUDGET


@pytest.mark.criterion(1, "B5' vertices and Minkowski weights match exactly")
def test_criterion_1(b5p):
    decision = is_removahedron_realizable(b5p)
    assert decision.realizable
    points = {pt for _, pt in decision.vertices}
    assert points == {(1, 2, 3), (2, 1, 3), (1, 4, 1), (4, 1, 1)}
    oracle_points = {
        tuple(map(int, v))
        for v in enumerate_vertices(removahedron_hrep(b5p)).vertices
    }
    assert oracle_points == points
    weights = dict(canonical_weights(b5p).items_by_block())
    assert weights == {
        ("1", "2", "3"): 2,
        ("1", "2"): 1, ("1",): 1, ("2",): 1, ("3",): 1,
    }


@pytest.mark.criterion(2, "B0 is the permutahedron: 24 vertices, simple")
def test_criterion_2(b0):
    vs = enumerate_vertices(removahedron_hrep(b0))
    assert set(vs.vertices) == {
        tuple(map(Fraction, p)) for p in permutations((1, 2, 3, 4))
    }
    assert len(vs.vertices) == 24
    assert is_simple(vs, b0.n - 1)


@pytest.mark.criterion(3, "B1 not realizable, certificate <= 0, not simple")
def test_criterion_3(b1):
    decision = is_removahedron_realizable(b1)
    assert not decision.realizable
    assert decision.certificate is not None
    assert decision.certificate.coefficient <= 0
    vs = enumerate_vertices(removahedron_hrep(b1))
    assert not is_simple(vs, b1.n - 1)


@pytest.mark.criterion(4, "B2 realizable, fan matches, one vertex per nested set")
def test_criterion_4(b2):
    decision = is_removahedron_realizable(b2)
    assert decision.realizable
    assert normal_fan_matches(b2, removahedron_hrep(b2))
    vs = enumerate_vertices(removahedron_hrep(b2))
    assert len(vs.vertices) == len(nested_complex(b2, maximal_only=True))


@pytest.mark.criterion(5, "B3 realizable, not intersection-closed, "
                          "exchangeable closure holds")
def test_criterion_5(b3):
    assert is_removahedron_realizable(b3, collect_vertices=False).realizable
    assert not is_closed_under_intersection(b3)
    assert exchangeable_closure_holds(b3)


@pytest.mark.criterion(6, "B4 realizable without exchangeable closure; "
                          "the {1,2,3,4}/{3,4,5} flips have delta 1")
def test_criterion_6(b4):
    assert is_removahedron_realizable(b4, collect_vertices=False).realizable
    assert not exchangeable_closure_holds(b4)
    target = {frozenset("1234"), frozenset("345")}
    hits = 0
    for f in all_flips(b4):
        if {f.b1, f.b2} == target:
            hits += 1
            assert delta(btree_from_nested(b4, f.n1),
                         btree_from_nested(b4, f.n2)) == 1
    assert hits > 0


@pytest.mark.criterion(7, "cycles C4-C6 not chordful, not realizable")
def test_criterion_7(cycles):
    from removahedra.corpus import cycle_graph

    for n, b in cycles.items():
        assert not is_chordful(cycle_graph(n))
        decision = is_removahedron_realizable(b, collect_vertices=False)
        assert not decision.realizable
        assert decision.certificate is not None
        assert decision.certificate.coefficient <= 0


@pytest.mark.criterion(8, "200 random graphs: chordful <=> intersection-closed"
                          " <=> realizable")
def test_criterion_8(random_graphs):
    assert len(random_graphs) >= 200
    for g in random_graphs:
        b = graphical_building_set(g)
        chordful = is_chordful(g)
        closed = is_closed_under_intersection(b)
        realizable = is_removahedron_realizable(
            b, collect_vertices=False
        ).realizable
        assert chordful == closed == realizable


@pytest.mark.criterion(9, "flip consistency: point difference, symmetry, "
                          "subtree sums")
def test_criterion_9(b0, b1, b2, b3, b4, b5p, cycles, random_closed):
    assert len(random_closed) >= 100
    corpus = [b0, b1, b2, b3, b4, b5p, *cycles.values(), *random_closed]
    for b in corpus:
        maximal = nested_complex(b, maximal_only=True)
        points = {}
        for n in maximal:
            t = btree_from_nested(b, n)
            pt = btree_point(t)
            points[n.mask_set] = (t, pt)
            for e in t.parent:
                mask = t.subtree_mask[e]
                k = mask.bit_count()
                total = sum(pt[i] for i in range(b.n) if mask >> i & 1)
                assert total == k * (k + 1) // 2
        for f in all_flips(b, maximal):
            t, pt = points[f.n1.mask_set]
            tp, ptp = points[f.n2.mask_set]
            ctx = flip_context(t, tp)
            d = delta(t, tp)
            assert d == delta(tp, t)
            s, sp = b.index[ctx.s], b.index[ctx.s_prime]
            expected = [0] * b.n
            expected[s], expected[sp] = d, -d
            assert [x - y for x, y in zip(ptp, pt)] == expected


@pytest.mark.criterion(10, "canonical Minkowski sum equals the removahedron")
def test_criterion_10(b0, b2, b5p, random_closed):
    corpus = [b0, b2, b5p, *random_closed]
    for b in corpus:
        w = canonical_weights(b)
        for m in b.masks:
            total = sum(y for s, y in w.weights.items() if s & m == s)
            assert total == comb(m.bit_count() + 1, 2)
        assert polytopes_equal(removahedron_hrep(b),
                               defo_hrep(weights_to_rhs(w)))


@pytest.mark.criterion(11, "unit weights on subpaths give Loday's "
                           "associahedra for P3-P5")
def test_criterion_11(paths):
    catalan = {3: 5, 4: 14, 5: 42}
    for n, b in paths.items():
        w = canonical_weights(b)
        # unit weight on every subpath block
        assert all(y == 1 for y in w.weights.values())
        assert set(w.weights) == set(b.masks)
        assert mink_realizes_fan(b, w)
        assert polytopes_equal(removahedron_hrep(b),
                               defo_hrep(weights_to_rhs(w)))
        assert len(nested_complex(b, maximal_only=True)) == catalan[n]


@pytest.mark.criterion(12, "skew removahedra realize every corpus fan "
                           "for gamma in {3, 5/2}")
def test_criterion_12(b0, b1, b2, b3, b4, b5p, cycles, random_closed,
                      random_graphs):
    fixtures = [b0, b1, b2, b3, b4, b5p, *cycles.values()]
    corpus = fixtures + random_closed
    corpus += [graphical_building_set(g) for g in random_graphs]
    checked_fans = 0
    for b in corpus:
        maximal = nested_complex(b, maximal_only=True)
        trees = {n.mask_set: btree_from_nested(b, n) for n in maximal}
        for f in all_flips(b, maximal):
            t, tp = trees[f.n1.mask_set], trees[f.n2.mask_set]
            ctx = flip_context(t, tp)
            for params in SKEWS:
                assert skew_delta(t, tp, params, ctx) > 0
        for params in SKEWS:
            p = skew_removahedron_hrep(b, params)
            if _within_oracle_capacity(p):
                assert normal_fan_matches(b, p)
                checked_fans += 1
    # the oracle must have covered at least all fixtures and the closed corpus
    assert checked_fans >= 2 * (len(fixtures) + len(random_closed))
