from fractions import Fraction
from math import comb

import pytest

from removahedra import (
    MinkowskiWeights,
    btree_from_nested,
    btree_point,
    canonical_weights,
    defo_hrep,
    face_of_nested,
    mink_realizes_fan,
    minkowski_vertex,
    nested_complex,
    nested_set,
    polytopes_equal,
    removahedron_hrep,
    weights_to_rhs,
)
from removahedra.errors import (
    CrossCheckFailed,
    NotGenerating,
    NotIntersectionClosed,
    NonGenericFunctional,
)
from removahedra.minkowski import DeformationRHS


def test_canonical_weights_b5p(b5p):
    w = canonical_weights(b5p)
    by_block = {blk: y for blk, y in w.items_by_block()}
    assert by_block == {
        ("1",): 1, ("2",): 1, ("3",): 1, ("1", "2"): 1, ("1", "2", "3"): 2,
    }


def test_canonical_weights_need_closure(b1):
    with pytest.raises(NotIntersectionClosed):
        canonical_weights(b1)


def test_weight_subset_sums_are_binomial(b0, b2, b5p):
    for b in (b0, b2, b5p):
        w = canonical_weights(b)
        for m in b.masks:
            total = sum(y for s, y in w.weights.items() if s & m == s)
            assert total == comb(m.bit_count() + 1, 2)


def test_weights_validation():
    with pytest.raises(ValueError):
        MinkowskiWeights(("1", "2"), {0b01: Fraction(-1)})
    with pytest.raises(ValueError):
        MinkowskiWeights(("1", "2"), {0b01: Fraction(0)})


def test_rhs_values(b5p):
    rhs = weights_to_rhs(canonical_weights(b5p))
    assert rhs.value(b5p.mask("123")) == 6
    assert rhs.value(b5p.mask("12")) == 3
    assert rhs.value(b5p.mask("13")) == 2  # {1}, {3}; the pair itself is no block


def test_supermodularity_enforced():
    z = DeformationRHS(("1", "2", "3"), {
        0b001: Fraction(2), 0b010: Fraction(2), 0b011: Fraction(3),
        0b111: Fraction(6),
    })
    with pytest.raises(CrossCheckFailed):
        z.check_supermodular()


def test_defo_equals_remo(b0, b2, b5p):
    for b in (b0, b2, b5p):
        w = canonical_weights(b)
        assert polytopes_equal(removahedron_hrep(b), defo_hrep(weights_to_rhs(w)))


def test_minkowski_vertex(b5p):
    w = canonical_weights(b5p)
    assert minkowski_vertex(w, (-1, 0, 1)) == (1, 2, 3)
    with pytest.raises(NonGenericFunctional):
        minkowski_vertex(w, (0, 0, 0))


def test_face_of_nested_vertex(b5p):
    w = canonical_weights(b5p)
    n = nested_set(b5p, [{"1"}, {"1", "2"}])
    decomposition, dim = face_of_nested(w, b5p, n)
    assert dim == 0
    point = [Fraction(0)] * b5p.n
    for _, face, y in decomposition:
        assert face.bit_count() == 1
        point[face.bit_length() - 1] += y
    assert tuple(point) == btree_point(btree_from_nested(b5p, n))


def test_face_of_nested_whole_polytope(b5p):
    w = canonical_weights(b5p)
    _, dim = face_of_nested(w, b5p, nested_set(b5p, []))
    assert dim == 2


def test_face_of_nested_requires_generating(b0):
    w = MinkowskiWeights(b0.ground, {b0.mask("12"): Fraction(1)})
    with pytest.raises(NotGenerating):
        face_of_nested(w, b0, nested_set(b0, []))


def test_mink_realizes_fan(b2, b5p):
    for b in (b2, b5p):
        assert mink_realizes_fan(b, canonical_weights(b))


def test_mink_fan_fails_on_degenerate_weights(b0):
    # singletons only: the sum degenerates to a point, whose fan is trivial
    w = MinkowskiWeights(b0.ground, {1 << i: Fraction(1) for i in range(b0.n)})
    assert not mink_realizes_fan(b0, w)


def test_maximal_faces_enumerate_vertices(b2):
    w = canonical_weights(b2)
    for n in nested_complex(b2, maximal_only=True):
        _, dim = face_of_nested(w, b2, n)
        assert dim == 0
