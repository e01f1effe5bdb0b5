import random
from fractions import Fraction

import pytest

from grt2.linalg import in_span, span_equal
from grt2.poly import Poly2, Poly3
from grt2.theta import (
    RelationVector,
    ThetaElement,
    closed_form_dim,
    cohomology_dim,
    d0_theta,
    generator_count,
    psi,
    relation_count,
    relation_from_poly,
    relation_space,
    relation_space_psi,
    theta_generator,
    theta_monomials,
    theta_relation,
    weight_slice_basis,
)
from helpers import check_psi_inverse

# the published relation table: seed exponents -> exact projection image
PUBLISHED_RELATIONS = {
    (3, 4): {(4, 6): Fraction(-3, 2), (2, 8): Fraction(1, 2)},
    (4, 6): {(6, 8): Fraction(11, 3), (4, 10): Fraction(-7, 3),
             (2, 12): Fraction(2, 3)},
    (5, 6): {(6, 10): Fraction(26, 12), (4, 12): Fraction(-25, 12),
             (2, 14): Fraction(8, 12)},
    (5, 8): {(8, 10): Fraction(-13, 2), (6, 12): Fraction(14, 2),
             (4, 14): Fraction(-10, 2), (2, 16): Fraction(3, 2)},
    (6, 8): {(8, 12): Fraction(-85, 10), (6, 14): Fraction(136, 10),
             (4, 16): Fraction(-105, 10), (2, 18): Fraction(32, 10)},
}

# weight-24 relations as published, ascending bracket order
K24_FIRST = (10, -33, 44, -33, 20)
K24_SECOND = (-242, 805, -1106, 915, -672)


def test_theta_element_validation():
    with pytest.raises(ValueError):
        ThetaElement(0, Poly3.monomial((3, 1, 0)))  # even degree in grade 0
    with pytest.raises(ValueError):
        ThetaElement(2, Poly3.monomial((2, 1, 0)))  # odd degree in grade 2
    elem = ThetaElement(1, Poly3.monomial((2, 3, 0)))
    assert elem.value == Poly3({(3, 2, 0): -1})  # normalized on entry
    assert elem.weights() == [6]


def test_d0_grade0_example():
    elem = ThetaElement(0, Poly3.monomial((3, 2, 0)))
    image = d0_theta(elem)
    assert image.grade == 1
    assert image.value == Poly3({(4, 2, 0): 2, (3, 2, 1): 2})


def test_d0_grade1_even_input_dies():
    elem = ThetaElement(1, Poly3.monomial((2, 4, 0)))
    assert d0_theta(elem).value.is_zero()


def test_d0_grade1_odd_example():
    elem = ThetaElement(1, Poly3.monomial((3, 4, 0)))
    image = d0_theta(elem)
    assert image.grade == 2
    assert image.value == Poly3({(5, 3, 0): -1, (4, 3, 1): -1})


def test_d0_rejects_top_grade():
    with pytest.raises(ValueError):
        d0_theta(ThetaElement(2, Poly3.monomial((4, 2, 0))))


def test_d0_squared_vanishes():
    for weight in range(3, 32):
        for mono in weight_slice_basis(0, weight):
            elem = ThetaElement(0, Poly3.monomial(mono))
            assert d0_theta(d0_theta(elem)).value.is_zero(), mono


def test_weight_slice_examples():
    assert weight_slice_basis(2, 2) == []
    assert weight_slice_basis(1, 7) == [(5, 1, 0), (4, 2, 0), (3, 2, 1)]
    assert weight_slice_basis(0, 3) == []


def test_cohomology_dims_small():
    for k in (1, 5, 9, 14, 20):
        assert cohomology_dim(0, k) == 0
    assert cohomology_dim(1, 7) == 1
    assert cohomology_dim(1, 5) == 0
    assert cohomology_dim(2, 6) == 1
    assert cohomology_dim(2, 7) == 0
    for k in range(1, 26):
        for i in (0, 1, 2):
            assert cohomology_dim(i, k) == closed_form_dim(i, k), (i, k)


def test_psi_boundary_branches():
    assert psi(Poly2.monomial((0, 6))).is_zero()
    assert psi(Poly2.monomial((4, 0))).is_zero()
    for b in (5, 7, 9):
        assert psi(Poly2.monomial((1, b))) == Poly2({(2, b - 1): -1})
    # at b = 3 the image runs through the diagonal, which vanishes
    assert psi(Poly2.monomial((1, 3))).is_zero()
    m = Poly2.monomial((2, 4))
    assert psi(m) == m
    assert psi(Poly2.monomial((6, 2))) == Poly2({(2, 6): -1})


def test_psi_diagonal_vanishes():
    # the swap branch applies to the diagonal and forces antisymmetry
    for a in (2, 3, 4, 5, 8):
        assert psi(Poly2.monomial((a, a))).is_zero()


def test_psi_odd_recursion_value():
    # hand expansion of the recursion at (3, 7):
    # -(1/4) [ psi(x^4 y^6) + 6 psi(x^2 y^8) + psi(x^4 y^6) + 4 psi(x y^9) ]
    assert psi(Poly2.monomial((3, 7))) == \
        Poly2({(4, 6): Fraction(-1, 2), (2, 8): Fraction(-1, 2)})
    # at (3, 3) the recursion cancels to zero outright
    assert psi(Poly2.monomial((3, 3))).is_zero()


def test_psi_rejects_odd_degree():
    with pytest.raises(ValueError):
        psi(Poly2.monomial((1, 2)))


def test_psi_is_projection_onto_normal_span():
    rng = random.Random(31)
    for _ in range(20):
        a = rng.randint(0, 8)
        b = rng.randint(0, 8)
        if (a + b) % 2:
            b += 1
        image = psi(Poly2.monomial((a, b)))
        for (u, v) in image.terms:
            assert 2 <= u < v and u % 2 == 0 and v % 2 == 0
        assert psi(image) == image


def test_psi_inverts_inclusion():
    for degree in range(2, 27, 2):
        check_psi_inverse(degree)


def test_published_relation_table():
    for (a, b), expect in PUBLISHED_RELATIONS.items():
        assert theta_relation(a, b) == Poly2(expect), (a, b)


def test_theta_relation_zero_seed_is_legal():
    # seeds whose projection happens to vanish report no relation
    assert theta_relation(1, 2).is_zero()


def test_theta_generator():
    assert theta_generator(1, 2).value == Poly3({(4, 2, 0): -1})
    assert theta_generator(2, 2).value.is_zero()
    assert theta_generator(1, 1).value.is_zero()


def test_relation_vector_normalization():
    rv = RelationVector(12, (Fraction(-1, 2), Fraction(3, 2)))
    assert rv.coeffs == (1, -3)
    with pytest.raises(ValueError):
        RelationVector(12, (1, 2, 3))
    with pytest.raises(ValueError):
        RelationVector(11, (1,))


def test_relation_space_small_weights():
    assert relation_space(10) == []
    vecs = relation_space(12)
    assert len(vecs) == 1 and vecs[0].coeffs == (1, -3)


def test_relation_space_counts():
    for k in range(8, 42, 2):
        assert len(relation_space(k)) == relation_count(k), k


def test_relation_space_contains_published_k24():
    basis = [[Fraction(c) for c in v.coeffs] for v in relation_space(24)]
    assert len(basis) == 2
    assert in_span(basis, [Fraction(c) for c in K24_FIRST])
    assert in_span(basis, [Fraction(c) for c in K24_SECOND])


def test_psi_oracle_agrees_with_rank_oracle():
    for k in range(8, 30, 2):
        a = [[Fraction(c) for c in v.coeffs] for v in relation_space(k)]
        b = [[Fraction(c) for c in v.coeffs] for v in relation_space_psi(k)]
        assert span_equal(a, b), k


def test_theta_relation_lands_in_relation_space():
    for k in range(8, 26, 2):
        basis = [[Fraction(c) for c in v.coeffs] for v in relation_space(k)]
        for a in range(1, (k - 2) // 2):
            b = k - 2 - 2 * a
            if b < 1:
                continue
            rv = relation_from_poly(k, theta_relation(a, b))
            if rv is None:
                continue
            assert in_span(basis, [Fraction(c) for c in rv.coeffs]), (k, a)


def test_generator_bookkeeping():
    assert generator_count(12) == 2
    assert theta_monomials(12) == [(2, 8), (4, 6)]
    assert relation_count(12) == 1
