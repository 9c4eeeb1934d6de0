"""Exact univariate polynomial and rational-function arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hessllt import QPoly, QRat, format_poly
from hessllt.errors import PoleError

q = QPoly.q()


def P(*coeffs):
    return QPoly(coeffs)


small_poly = st.lists(
    st.integers(min_value=-9, max_value=9), min_size=0, max_size=5
).map(QPoly)

nonzero_poly = small_poly.filter(lambda p: not p.is_zero())


class TestQPoly:
    def test_degree_is_none_for_zero(self):
        assert QPoly.zero().degree is None
        assert P(0, 0).degree is None
        assert P(7).degree == 0
        assert (q**3).degree == 3

    def test_strip_trailing_zeros(self):
        assert P(1, 2, 0, 0) == P(1, 2)

    def test_coeff_out_of_range_is_zero(self):
        assert P(1, 2).coeff(5) == 0
        assert P(1, 2).coeff(1) == 2

    def test_arithmetic(self):
        assert (q + QPoly.one()) * (q - QPoly.one()) == q**2 - QPoly.one()
        assert P(1, 1) ** 2 == P(1, 2, 1)
        assert P(1, 1) ** 0 == QPoly.one()
        assert QPoly.zero() * q == QPoly.zero()

    def test_monomial(self):
        assert QPoly.monomial(3, Fraction(1, 2)) == q**3 * P(Fraction(1, 2))

    def test_divmod_exact(self):
        quo, rem = (q**2 - QPoly.one()).divmod(q - QPoly.one())
        assert quo == q + QPoly.one()
        assert rem.is_zero()

    def test_divmod_remainder(self):
        quo, rem = (q**2).divmod(q - QPoly.one())
        assert quo == q + QPoly.one()
        assert rem == QPoly.one()

    def test_gcd_is_monic(self):
        g = (P(-1, 1) * P(2, 2)).gcd(P(-1, 1) * P(3, 3, 3))
        assert g == P(-1, 1)

    def test_evaluate(self):
        assert P(1, 2, 1).evaluate(Fraction(1, 2)) == Fraction(9, 4)

    def test_compose_shift(self):
        assert (q**2).compose_shift(1) == P(1, 2, 1)
        assert P(5).compose_shift(3) == P(5)

    def test_compose_power(self):
        assert (q + QPoly.one()).compose_power(2) == P(1, 0, 1)

    def test_reversed_to(self):
        assert P(1, 2, 3).reversed_to(2) == P(3, 2, 1)
        assert P(0, 1).reversed_to(3) == P(0, 0, 1)

    def test_format(self):
        assert format_poly(P(-1, 0, 1)) == "q^2 - 1"
        assert format_poly(QPoly.zero()) == "0"
        assert format_poly(P(Fraction(1, 2))) == "1/2"
        assert format_poly(P(0, 2)) == "2*q"

    @given(small_poly, small_poly, small_poly)
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a + QPoly.zero() == a
        assert a * QPoly.one() == a

    @given(small_poly, nonzero_poly)
    @settings(max_examples=60, deadline=None)
    def test_divmod_identity(self, a, b):
        quo, rem = a.divmod(b)
        assert quo * b + rem == a
        assert rem.is_zero() or rem.degree < b.degree

    @given(small_poly, st.integers(min_value=-4, max_value=4))
    @settings(max_examples=60, deadline=None)
    def test_evaluate_respects_shift(self, a, c):
        point = Fraction(3, 7)
        assert a.compose_shift(c).evaluate(point) == a.evaluate(point + c)


class TestQRat:
    def test_reduction_to_lowest_terms(self):
        r = QRat(P(-1, 0, 1), P(-1, 1))  # (q^2-1)/(q-1)
        assert r.is_polynomial()
        assert r.as_poly() == P(1, 1)

    def test_monic_denominator_normalization(self):
        a = QRat(P(1), P(0, 2))
        b = QRat(P(Fraction(1, 2)), P(0, 1))
        assert a == b
        assert a.to_string() == "(1)/(2*q)"

    def test_of(self):
        assert QRat.of(3) == QRat(P(3))
        assert QRat.of(Fraction(2, 5)) * QRat.of(Fraction(5, 2)) == QRat.one()

    def test_field_ops(self):
        r = QRat.q() / (QRat.q() + 1)
        assert r + (QRat.one() / (QRat.q() + 1)) == QRat.one()
        assert (QRat.q() - 1) * (QRat.q() + 1) == QRat.q() ** 2 - 1

    def test_subs_q_inverse(self):
        r = (QRat.q() ** 2 + 1) / QRat.q()
        assert r.subs_q_inverse() == r  # symmetric under q -> 1/q
        assert QRat.q().subs_q_inverse() == QRat.one() / QRat.q()

    def test_subs_q_power(self):
        assert (QRat.q() + 1).subs_q_power(3) == QRat.q() ** 3 + 1

    def test_subs_q_shift(self):
        assert (QRat.q() ** 2).subs_q_shift(1) == (QRat.q() + 1) ** 2
        assert (QRat.q() ** 2).subs_q_plus_one() == (QRat.q() + 1) ** 2

    def test_as_poly_rejects_proper_fractions(self):
        with pytest.raises(ValueError):
            (QRat.one() / QRat.q()).as_poly()

    def test_evaluate_and_pole(self):
        r = QRat.one() / (QRat.q() - 1)
        assert r.evaluate(3) == Fraction(1, 2)
        with pytest.raises(PoleError):
            r.evaluate(1)

    def test_to_string_canonical(self):
        assert QRat.zero().to_string() == "(0)/(1)"
        assert (QRat.q() - 1).to_string() == "(q - 1)/(1)"
        r = QRat(P(Fraction(1, 2), Fraction(1, 2)), P(-1, 1))
        assert r.to_string() == "(q + 1)/(2*q - 2)"

    def test_hash_consistency(self):
        assert hash(QRat(P(-1, 0, 1), P(-1, 1))) == hash(QRat(P(1, 1)))

    @given(small_poly, nonzero_poly, small_poly, nonzero_poly)
    @settings(max_examples=50, deadline=None)
    def test_field_axioms(self, a, b, c, d):
        x = QRat(a, b)
        y = QRat(c, d)
        assert x + y == y + x
        assert x * y == y * x
        assert x - x == QRat.zero()
        if not x.is_zero():
            assert x / x == QRat.one()
        assert (x + y) * (x - y) == x**2 - y**2

    @given(small_poly, nonzero_poly, st.integers(min_value=-3, max_value=3))
    @settings(max_examples=50, deadline=None)
    def test_shift_inverts(self, a, b, c):
        x = QRat(a, b)
        assert x.subs_q_shift(c).subs_q_shift(-c) == x

    @given(small_poly, nonzero_poly)
    @settings(max_examples=50, deadline=None)
    def test_q_inverse_is_involution(self, a, b):
        x = QRat(a, b)
        assert x.subs_q_inverse().subs_q_inverse() == x
