"""Sparse multivariate polynomials over Fraction."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hessllt.combinat import all_permutations, compose, inverse
from hessllt.multipoly import (
    monomial_index,
    monomials,
    mp_add,
    mp_coords,
    mp_divide_linear,
    mp_from_coords,
    mp_is_zero,
    mp_mul,
    mp_permute,
    mp_scale,
    mp_sub,
    mp_subst_var,
    mp_var,
    mp_zero,
)


def t(i, n=3):
    return mp_var(n, i)


def rand_mp(draw_terms):
    poly = mp_zero()
    for exps, c in draw_terms:
        poly = mp_add(poly, {tuple(exps): Fraction(c)})
    return {e: c for e, c in poly.items() if c}


mp_strategy = st.lists(
    st.tuples(
        st.lists(st.integers(min_value=0, max_value=2), min_size=3, max_size=3),
        st.integers(min_value=-5, max_value=5).filter(bool),
    ),
    max_size=4,
).map(rand_mp)


class TestOps:
    def test_add_cancels(self):
        assert mp_is_zero(mp_sub(t(1), t(1)))
        assert mp_is_zero(mp_add(t(1), mp_scale(t(1), Fraction(-1))))

    def test_mul(self):
        prod = mp_mul(mp_sub(t(1), t(2)), mp_add(t(1), t(2)))
        expect = mp_sub(mp_mul(t(1), t(1)), mp_mul(t(2), t(2)))
        assert prod == expect

    @given(mp_strategy, mp_strategy, mp_strategy)
    @settings(max_examples=50, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert mp_mul(a, b) == mp_mul(b, a)
        assert mp_add(a, b) == mp_add(b, a)
        assert mp_mul(mp_add(a, b), c) == mp_add(mp_mul(a, c), mp_mul(b, c))


class TestPermute:
    def test_variable_relabeling(self):
        # t_i -> t_{sigma(i)}
        sigma = (2, 3, 1)
        assert mp_permute(t(1), sigma) == t(2)
        assert mp_permute(t(3), sigma) == t(1)

    @given(mp_strategy, st.sampled_from(all_permutations(3)), st.sampled_from(all_permutations(3)))
    @settings(max_examples=50, deadline=None)
    def test_composition_law(self, a, sigma, tau):
        # applying tau then sigma relabels by compose(sigma, tau)
        assert mp_permute(mp_permute(a, tau), sigma) == mp_permute(a, compose(sigma, tau))

    @given(mp_strategy, st.sampled_from(all_permutations(3)))
    @settings(max_examples=50, deadline=None)
    def test_inverse_round_trip(self, a, sigma):
        assert mp_permute(mp_permute(a, sigma), inverse(sigma)) == a

    @given(mp_strategy, mp_strategy, st.sampled_from(all_permutations(3)))
    @settings(max_examples=50, deadline=None)
    def test_permute_is_ring_map(self, a, b, sigma):
        assert mp_permute(mp_mul(a, b), sigma) == mp_mul(
            mp_permute(a, sigma), mp_permute(b, sigma)
        )


class TestSubstituteDivide:
    def test_subst_var(self):
        assert mp_is_zero(mp_subst_var(mp_sub(t(1), t(2)), 1, 2))
        assert mp_subst_var(mp_mul(t(1), t(3)), 1, 3) == mp_mul(t(3), t(3))

    def test_divide_linear_exact(self):
        f = mp_add(mp_mul(t(1), t(2)), t(3))
        prod = mp_mul(mp_sub(t(1), t(2)), f)
        assert mp_divide_linear(prod, 1, 2) == f

    def test_divide_linear_rejects_inexact(self):
        with pytest.raises(ValueError):
            mp_divide_linear(t(1), 1, 2)

    @given(mp_strategy)
    @settings(max_examples=50, deadline=None)
    def test_divide_undoes_multiply(self, f):
        prod = mp_mul(mp_sub(t(1), t(2)), f)
        assert mp_divide_linear(prod, 1, 2) == f


class TestMonomialCoordinates:
    def test_counts(self):
        for n in (1, 2, 3, 4):
            for d in range(5):
                assert len(monomials(n, d)) == comb(d + n - 1, n - 1)

    def test_descending_lex_order(self):
        assert monomials(2, 2) == ((2, 0), (1, 1), (0, 2))
        assert monomials(3, 1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_monomial_index(self):
        index = monomial_index(3, 3)
        for k, m in enumerate(monomials(3, 3)):
            assert index[m] == k

    def test_coords_round_trip(self):
        f = mp_add(mp_mul(t(1), t(2)), mp_scale(mp_mul(t(3), t(3)), Fraction(5, 2)))
        coords = mp_coords(f, 3, 2)
        assert mp_from_coords(coords, 3, 2) == f
