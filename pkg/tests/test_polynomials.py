"""Exactness and canonical-form tests for the sparse polynomial core."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from diffhom.errors import NonSquareError, NotLinearError, UnmappedVariableError
from diffhom.polynomials import (
    Poly,
    determinant,
    jet_var,
    slot_var,
    z_var,
)
from diffhom.tensors import wronskian

X0 = Poly.variable(jet_var(0, 0))
X1 = Poly.variable(jet_var(1, 0))
X0p = Poly.variable(jet_var(0, 1))
X1p = Poly.variable(jet_var(1, 1))
Z1 = Poly.variable(z_var(1))
Z2 = Poly.variable(z_var(2))
Z3 = Poly.variable(z_var(3))


def permutation_determinant(matrix):
    """Brute-force oracle: full expansion over permutations."""
    n = len(matrix)
    total = Poly.zero()
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            while seen[i] != i:
                j = seen[i]
                seen[i], seen[j] = seen[j], seen[i]
                sign = -sign
        prod = Poly.constant(1)
        for r, c in enumerate(perm):
            prod = prod * matrix[r][c]
        total = total + (prod if sign > 0 else -prod)
    return total


class TestArithmetic:
    def test_additive_inverse(self):
        assert (X0 + (-X0)).is_zero

    def test_difference_of_squares(self):
        assert (X0 + X1) * (X0 - X1) == X0**2 - X1**2

    def test_exact_rational_scale(self):
        p = (X0 * X1).scale(3)
        assert p.scale(Fraction(2, 3)) == (X0 * X1).scale(2)

    def test_zero_has_empty_terms(self):
        assert (X0 - X0).terms == {}
        assert Poly.constant(0).terms == {}


class TestDerivative:
    def test_power_rule(self):
        assert (Z1**2 * Z2).partial_derivative(z_var(1)) == (Z1 * Z2).scale(2)

    def test_independent_variable(self):
        assert Z2.partial_derivative(z_var(1)).is_zero

    def test_mixed_terms(self):
        p = X0 * X0p + X1
        assert p.partial_derivative(jet_var(0, 0)) == X0p


class TestSubstitute:
    def test_wronskian_substitution(self):
        w = Poly.variable(slot_var(1, 0)) * Poly.variable(slot_var(2, 1)) - Poly.variable(
            slot_var(1, 1)
        ) * Poly.variable(slot_var(2, 0))
        mapping = {
            slot_var(1, 0): X0,
            slot_var(1, 1): X0p,
            slot_var(2, 0): X1,
            slot_var(2, 1): X1p,
        }
        assert w.substitute(mapping) == X0 * X1p - X1 * X0p

    def test_antisymmetric_collapse(self):
        w = Poly.variable(slot_var(1, 0)) * Poly.variable(slot_var(2, 1)) - Poly.variable(
            slot_var(1, 1)
        ) * Poly.variable(slot_var(2, 0))
        mapping = {
            slot_var(1, 0): X0,
            slot_var(1, 1): X0p,
            slot_var(2, 0): X0,
            slot_var(2, 1): X0p,
        }
        assert w.substitute(mapping).is_zero

    def test_collapsing_substitution(self):
        assert (Z1 + Z2).substitute({z_var(1): Z1, z_var(2): Z1}) == Z1.scale(2)

    def test_unmapped_variable_is_an_error(self):
        with pytest.raises(UnmappedVariableError):
            (Z1 + Z2).substitute({z_var(1): Z1})


class TestDeterminant:
    def test_two_by_two(self):
        y = [[Poly.variable(slot_var(s, t)) for s in (1, 2)] for t in (0, 1)]
        expected = y[0][0] * y[1][1] - y[0][1] * y[1][0]
        assert determinant(y) == expected

    def test_equal_columns_vanish(self):
        m = [[X0, X0], [X1, X1]]
        assert determinant(m).is_zero

    def test_vandermonde(self):
        m = [[Poly.constant(1), Z1], [Poly.constant(1), Z2]]
        assert determinant(m) == Z2 - Z1

    def test_non_square_raises(self):
        with pytest.raises(NonSquareError):
            determinant([[X0, X1]])

    def test_against_permutation_oracle(self):
        entries = [X0, X1, X0p, X1p, Z1, Poly.zero()]
        m = [[entries[(3 * r + c) % 6] for c in range(3)] for r in range(3)]
        assert determinant(m) == permutation_determinant(m)


class TestCoefficientOf:
    def test_direct_readoff(self):
        w = wronskian((0, 0), 2)
        assert w.coefficient_of(slot_var(2, 1)) == Poly.variable(slot_var(1, 0))

    def test_absent_variable(self):
        assert (Z1 * Z2).coefficient_of(z_var(3)).is_zero

    def test_not_linear_raises(self):
        with pytest.raises(NotLinearError):
            (Z1**2).coefficient_of(z_var(1))

    def test_wronskian_third_column(self):
        # expanding the 3x3 determinant along its third column: the
        # coefficient of Y3^(2) is the 2x2 principal minor, checked against
        # the brute-force expansion oracle
        w = wronskian((0, 0, 0), 3)
        matrix = [
            [Poly.variable(slot_var(s, t)) for s in (1, 2, 3)] for t in (0, 1, 2)
        ]
        assert w == permutation_determinant(matrix)
        expected = Poly.variable(slot_var(1, 0)) * Poly.variable(slot_var(2, 1)) - Poly.variable(
            slot_var(1, 1)
        ) * Poly.variable(slot_var(2, 0))
        assert w.coefficient_of(slot_var(3, 2)) == expected


class TestRendering:
    def test_canonical_forms(self):
        assert (X0 * X1p - X1 * X0p).render() == "X0^(0)*X1^(1) - X0^(1)*X1^(0)"
        assert (X0 * X1).scale(Fraction(2, 3)).render() == "2/3*X0^(0)*X1^(0)"
        assert (X0**2).render() == "X0^(0)^2"
        assert Poly.zero().render() == "0"
        assert Poly.constant(Fraction(-1, 2)).render() == "-1/2"
        assert Poly.variable(z_var(1)).render() == "Z1"
        assert Poly.variable(slot_var(3, 0)).render() == "Y3^(0)"

    def test_term_order_is_graded(self):
        p = Z1 + Z1 * Z2 + Poly.constant(5)
        assert p.render() == "5 + Z1 + Z1*Z2"

    def test_sign_normalization(self):
        p = -(X0 * X1p) + X1 * X0p
        assert p.sign_normalized().render() == "X0^(0)*X1^(1) - X0^(1)*X1^(0)"


# hypothesis material: random sparse polynomials over a small variable pool
VARIABLES = [jet_var(0, 0), jet_var(1, 0), jet_var(0, 1), z_var(1), z_var(2)]

coefficients = st.fractions(
    min_value=-4, max_value=4, max_denominator=3
)
monomials = st.lists(st.sampled_from(VARIABLES), min_size=0, max_size=3)
polys = st.builds(
    lambda terms: sum(
        (Poly.monomial([(v, 1) for v in mono], c) for mono, c in terms if c),
        Poly.zero(),
    ),
    st.lists(st.tuples(monomials, coefficients), min_size=0, max_size=4),
)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, polys)
@settings(max_examples=50)
def test_substitution_is_a_homomorphism(a, b):
    mapping = {
        jet_var(0, 0): Z1 + Z2,
        jet_var(1, 0): Z1 * Z2,
        jet_var(0, 1): Poly.constant(2),
        z_var(1): Z2,
        z_var(2): Z1 - Poly.constant(1),
    }
    assert (a * b).substitute(mapping) == a.substitute(mapping) * b.substitute(mapping)


@given(polys, polys, st.sampled_from(VARIABLES))
@settings(max_examples=50)
def test_leibniz_rule(a, b, v):
    lhs = (a * b).partial_derivative(v)
    rhs = a * b.partial_derivative(v) + b * a.partial_derivative(v)
    assert lhs == rhs
