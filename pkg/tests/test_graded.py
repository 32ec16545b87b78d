"""Graded slices of polynomial ideals: bases, multiplication matrices,
and Hilbert functions of Jacobian quotients."""

from math import comb

import pytest

from jacsyz.fields import QQ, PrimeField
from jacsyz.graded import (
    DegreeTooLowError,
    HilbertFunction,
    basis_index,
    hilbert_function_of_quotient,
    ideal_slice,
    monomial_basis,
    multiplication_matrix,
    slice_dim,
    space_dim,
)
from jacsyz.linalg import rank
from jacsyz.poly import parse_poly, partial_derivatives

XYZ = ("x", "y", "z")


class TestBasis:
    def test_space_dim_matches_binomial(self):
        for nvars in (1, 2, 3, 4):
            for k in range(8):
                assert space_dim(nvars, k) == comb(nvars - 1 + k, nvars - 1)

    def test_space_dim_negative_degree(self):
        assert space_dim(3, -1) == 0
        assert space_dim(3, -5) == 0

    def test_monomial_basis_sizes(self):
        for nvars in (2, 3, 4):
            for k in range(6):
                assert len(monomial_basis(nvars, k)) == space_dim(nvars, k)

    def test_monomial_basis_order_degree_one(self):
        assert monomial_basis(3, 1) == ((0, 0, 1), (0, 1, 0), (1, 0, 0))

    def test_monomial_basis_order_degree_two(self):
        assert monomial_basis(3, 2) == (
            (0, 0, 2),
            (0, 1, 1),
            (0, 2, 0),
            (1, 0, 1),
            (1, 1, 0),
            (2, 0, 0),
        )

    def test_basis_index_inverts_basis(self):
        basis = monomial_basis(3, 4)
        index = basis_index(3, 4)
        for i, e in enumerate(basis):
            assert index[e] == i

    def test_degree_zero(self):
        assert monomial_basis(3, 0) == ((0, 0, 0),)


class TestMultiplicationMatrix:
    def test_coordinate_triangle_matrix_by_hand(self, coordinate_triangle):
        # partials of x*y*z are (y*z, x*z, x*y); against the degree-2 basis
        # each contributes a single unit column.
        gens = partial_derivatives(coordinate_triangle)
        m = multiplication_matrix(gens, 2)
        assert (m.nrows, m.ncols) == (6, 3)
        expected_rows = [[0] * 3 for _ in range(6)]
        index = basis_index(3, 2)
        expected_rows[index[(0, 1, 1)]][0] = 1  # y*z
        expected_rows[index[(1, 0, 1)]][1] = 1  # x*z
        expected_rows[index[(1, 1, 0)]][2] = 1  # x*y
        assert [list(map(int, row)) for row in m.rows] == expected_rows
        assert rank(m, QQ) == 3

    def test_column_count_generator_major(self):
        f = parse_poly("x^4 + y^4 + z^4", XYZ)
        gens = partial_derivatives(f)
        m = multiplication_matrix(gens, 5)
        # 3 generators of degree 3, complements of degree 2
        assert m.ncols == 3 * space_dim(3, 2)
        assert m.nrows == space_dim(3, 5)

    def test_degree_below_generator_raises(self):
        f = parse_poly("x^4 + y^4 + z^4", XYZ)
        gens = partial_derivatives(f)
        with pytest.raises(DegreeTooLowError):
            multiplication_matrix(gens, 2)

    def test_zero_generator_keeps_zero_block(self):
        # columns are positional: a vanishing generator contributes a zero
        # block rather than shrinking the matrix.
        f = parse_poly("y^4 + z^4", XYZ)
        gens = partial_derivatives(f)
        assert gens[0].is_zero
        m = multiplication_matrix(gens, 4)
        sdim = space_dim(3, 1)
        assert m.ncols == 3 * sdim
        assert all(row[j] == 0 for row in m.rows for j in range(sdim))


class TestIdealSlice:
    def test_slice_below_all_generators_is_zero(self, three_cusp):
        gens = partial_derivatives(three_cusp)
        assert slice_dim(gens, 2) == 0
        assert ideal_slice(gens, 2).dim == 0

    def test_coordinate_triangle_slices(self, coordinate_triangle):
        gens = partial_derivatives(coordinate_triangle)
        assert slice_dim(gens, 2) == 3
        # degree 3: multiples of y*z, x*z, x*y span everything divisible
        # by two distinct variables — 10 - 3 pure powers = 7
        assert slice_dim(gens, 3) == 7

    def test_slice_contains_generator_multiples(self, three_cusp):
        gens = partial_derivatives(three_cusp)
        s = ideal_slice(gens, 4)
        index = basis_index(3, 4)
        for g in gens:  # x * g lands in the degree-4 slice for every partial g
            shifted = [0] * space_dim(3, 4)
            for e, c in g.terms.items():
                bumped = (e[0] + 1, e[1], e[2])
                shifted[index[bumped]] = c
            assert s.contains(shifted)

    def test_monotone_under_more_generators(self, three_cusp):
        gens = partial_derivatives(three_cusp)
        extra = gens + (parse_poly("x^3", XYZ),)
        for k in range(3, 7):
            assert slice_dim(gens, k) <= slice_dim(extra, k)

    def test_mod_p_matches_exact_on_corpus_slice(self, three_cusp):
        gens = partial_derivatives(three_cusp)
        for k in range(3, 8):
            exact = slice_dim(gens, k)
            assert slice_dim(gens, k, PrimeField(1000003)) == exact


class TestHilbertFunction:
    def test_from_dims_detects_stable_tail(self):
        h = HilbertFunction.from_dims((1, 3, 6, 7, 6, 6, 6, 6), window=4)
        assert h.stable_value == 6
        assert h.stable_from == 4

    def test_from_dims_no_stable_tail(self):
        h = HilbertFunction.from_dims((1, 3, 6, 10, 12, 14), window=4)
        assert h.stable_value is None

    def test_getitem_negative_degree(self):
        h = HilbertFunction.from_dims((1, 3, 3, 3, 3, 3), window=4)
        assert h[-1] == 0
        assert h[0] == 1

    def test_quotient_three_cusp(self, three_cusp):
        gens = partial_derivatives(three_cusp)
        h = hilbert_function_of_quotient(gens, 9)
        assert h.dims[:7] == (1, 3, 6, 7, 6, 6, 6)
        assert h.stable_value == 6

    def test_quotient_coordinate_triangle(self, coordinate_triangle):
        gens = partial_derivatives(coordinate_triangle)
        h = hilbert_function_of_quotient(gens, 8)
        assert h.dims[:4] == (1, 3, 3, 3)
        assert h.stable_value == 3
        assert h.stable_from == 1

    def test_quotient_fermat_reaches_zero(self, fermat_quartic):
        gens = partial_derivatives(fermat_quartic)
        h = hilbert_function_of_quotient(gens, 11)
        assert h.dims[:8] == (1, 3, 6, 7, 6, 3, 1, 0)
        assert h.stable_value == 0
        assert h.stable_from == 7
