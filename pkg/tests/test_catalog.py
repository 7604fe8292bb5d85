"""Index enumeration, generator construction, and the finite-generation suite."""

from __future__ import annotations

from itertools import product
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from diffhom.catalog import (
    NestedIndex,
    build_catalog,
    build_generator,
    composition_to_function,
    function_to_composition,
    model_class_sizes,
    nested_count_formula,
    top_order_indices,
    top_order_nested_indices,
    verify_finite_generation,
    verify_minimality,
    verify_quotient_basis,
    weighted_signature,
)
from diffhom.errors import InvalidCompositionError, InvalidIndexError
from diffhom.jets import JetContext, is_diff_homogeneous
from diffhom.polynomials import Poly, jet_var, slot_var
from diffhom.spans import rank_modulo
from diffhom.tensors import (
    project_to_symmetric,
    tensor_from_multilinear,
    wronskian,
)

X0 = Poly.variable(jet_var(0, 0))
X1 = Poly.variable(jet_var(1, 0))
W = X0 * Poly.variable(jet_var(1, 1)) - X1 * Poly.variable(jet_var(0, 1))


class TestModelIndices:
    def test_degree_two(self):
        assert [i.alpha for i in top_order_indices(2)] == [(0, 0)]

    def test_degree_three(self):
        assert [i.alpha for i in top_order_indices(3)] == [
            (0, 0, 0),
            (0, 0, 1),
            (0, 1, 0),
        ]

    @pytest.mark.parametrize("d", range(2, 8))
    def test_cardinality(self, d):
        assert len(top_order_indices(d)) == factorial(d) // 2

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_class_sizes(self, d):
        sizes = model_class_sizes(d)
        assert sizes[1] == 0
        for witness in range(1, d + 1):
            expected = factorial(d - 1) * (witness - 1) // (d - 1)
            assert sizes[witness] == expected


class TestNestedIndices:
    def test_small_families(self):
        assert len(top_order_nested_indices(1, 2)) == 1
        assert len(top_order_nested_indices(2, 2)) == 3
        assert len(top_order_nested_indices(1, 3)) == 2

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_counting_formula(self, n, d):
        assert len(top_order_nested_indices(n, d)) == nested_count_formula(n, d)

    def test_degree_one_is_unit_runs(self):
        family = top_order_nested_indices(2, 1)
        assert [idx.runs for idx in family] == [
            ((0,), (), ()),
            ((), (0,), ()),
            ((), (), (0,)),
        ]

    def test_multinomial_identity(self):
        # sum over |m| = d of multinomial(d-2; m - e_j - e_l) equals (N+1)^(d-2)
        def multinomial(total, parts):
            if any(p < 0 for p in parts) or sum(parts) != total:
                return 0
            out = factorial(total)
            for p in parts:
                out //= factorial(p)
            return out

        for n in (1, 2, 3):
            for d in (2, 3, 4, 5):
                for j in range(n + 1):
                    for ell in range(j + 1, n + 1):
                        total = 0
                        for m in product(range(d + 1), repeat=n + 1):
                            if sum(m) != d:
                                continue
                            shifted = list(m)
                            shifted[j] -= 1
                            shifted[ell] -= 1
                            total += multinomial(d - 2, shifted)
                        assert total == (n + 1) ** (d - 2)


class TestCompositionBijection:
    def test_constant_function(self):
        assert function_to_composition((0, 0, 0), 1) == (3, 0)

    def test_forced_function(self):
        assert composition_to_function((1, 1)) == (0, 1)

    def test_rejects_decreasing(self):
        with pytest.raises(InvalidCompositionError):
            function_to_composition((1, 0), 1)

    @given(st.lists(st.integers(0, 3), min_size=2, max_size=4))
    @settings(max_examples=60)
    def test_round_trip(self, counts):
        f = composition_to_function(counts)
        assert function_to_composition(f, len(counts) - 1) == tuple(counts)


class TestBuildGenerator:
    def test_degree_two(self):
        (idx,) = top_order_nested_indices(1, 2)
        assert build_generator(idx, 1, 2) == W

    def test_degree_one(self):
        idx = top_order_nested_indices(1, 1)[0]
        assert build_generator(idx, 1, 1) == X0

    def test_degree_three_orders_and_independence(self):
        from diffhom.jets import diff_homog_basis

        family = [build_generator(idx, 1, 3) for idx in top_order_nested_indices(1, 3)]
        assert all(g.derivation_order() == 2 for g in family)
        lower = diff_homog_basis(JetContext(1, 1, 3)).elements
        assert rank_modulo(family, lower) == 2

    def test_generators_are_invariant(self):
        for n, d in ((1, 2), (1, 3), (2, 2), (2, 3)):
            ctx = JetContext(n, d - 1, d)
            for idx in top_order_nested_indices(n, d):
                g = build_generator(idx, n, d)
                assert g.is_homogeneous(d)
                assert g.derivation_order() <= d - 1
                assert is_diff_homogeneous(g, d, ctx)

    def test_rejects_malformed_runs(self):
        with pytest.raises(InvalidIndexError):
            build_generator(NestedIndex(((0, 0), ())), 1, 2)
        with pytest.raises(InvalidIndexError):
            build_generator(NestedIndex(((0,), (5,))), 1, 2)

    def test_projection_route_agrees(self):
        for n, d in ((1, 2), (1, 3), (2, 2)):
            for idx in top_order_nested_indices(n, d):
                built = build_generator(idx, n, d)
                tensor = tensor_from_multilinear(wronskian(idx.flat, d), d, d - 1)
                projected = project_to_symmetric(
                    tensor, composition_to_function(idx.lengths)
                ).sign_normalized()
                assert built == projected


class TestTriangularity:
    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_coefficient_extraction(self, d):
        # deleting the witness slot from the exponent tuple matches extracting
        # the top-order coefficient of the witness slot's variable
        for idx in top_order_indices(d):
            witness = idx.witness
            w = wronskian(idx.alpha, d)
            coeff = w.coefficient_of(slot_var(witness, d - 1))
            hat = idx.alpha[: witness - 1] + idx.alpha[witness:]
            smaller = wronskian(hat, d - 1)
            relabel = {}
            for v in smaller.variables():
                slot = v.i if v.i < witness else v.i + 1
                relabel[v] = Poly.variable(slot_var(slot, v.j))
            expected = smaller.substitute(relabel)
            assert coeff == expected or coeff == -expected


class TestVerification:
    @pytest.mark.parametrize("n,d", [(1, 2), (1, 3), (2, 2)])
    def test_quotient_basis(self, n, d):
        report = verify_quotient_basis(n, d)
        assert report.passed
        assert report.family_size == nested_count_formula(n, d)

    def test_finite_generation_small(self):
        report = verify_finite_generation(1, 1, 4)
        assert report.passed
        assert [e.invariant_dimension for e in report.entries] == [2, 4, 6, 9]

    def test_minimality_small(self):
        assert verify_minimality(1, 1).passed
        assert verify_minimality(2, 1).passed

    def test_catalog_counts(self):
        assert build_catalog(1, 2).counts() == [2, 1, 2]
        assert build_catalog(2, 2).counts() == [3, 3, 9]

    def test_weighted_signature(self):
        assert weighted_signature(1, 1) == [(1, 2), (2, 1)]
        assert weighted_signature(1, 0) == [(1, 2)]
        assert weighted_signature(2, 2) == [(1, 3), (2, 3), (3, 9)]
