"""Tests for LaurentPoly, RationalFn and ConeSeries."""

from fractions import Fraction

import pytest

from app.core.shared.exceptions import DomainError, ValidationError
from app.features.series.domain.value_objects.cone_series import ConeSeries, SeriesMode
from app.features.series.domain.value_objects.laurent_poly import LaurentPoly
from app.features.series.domain.value_objects.rational_fn import RationalFn

F = Fraction


def q_over_square() -> RationalFn:
    """q / (1 - q)^2."""
    return RationalFn.from_coefficients([0, 1], [1, -2, 1])


@pytest.mark.unit
class TestLaurentPoly:
    def test_zeros_are_dropped(self):
        poly = LaurentPoly({-1: 0, 2: "3/2"})
        assert poly.coeffs == {2: F(3, 2)}
        assert LaurentPoly({0: 0}).is_zero()

    def test_rejects_floats(self):
        with pytest.raises(ValidationError):
            LaurentPoly({1: 0.5})

    def test_arithmetic(self):
        a = LaurentPoly({-1: 1, 0: 2})
        b = LaurentPoly({1: 1})
        assert a * b == LaurentPoly({0: 1, 1: 2})
        assert (a + b).terms() == [(-1, F(1)), (0, F(2)), (1, F(1))]
        assert (a - a).is_zero()

    def test_degrees(self):
        poly = LaurentPoly({-3: 1, 4: 2})
        assert poly.min_degree == -3
        assert poly.max_degree == 4
        assert LaurentPoly.zero().min_degree is None

    def test_truncate(self):
        poly = LaurentPoly({n: 1 for n in range(-3, 4)})
        assert poly.truncate(-1, 1) == LaurentPoly({-1: 1, 0: 1, 1: 1})
        assert poly.truncate(hi=-2) == LaurentPoly({-3: 1, -2: 1})

    def test_symmetry(self):
        assert LaurentPoly({-1: 1, 0: 2, 1: 1}).is_symmetric()
        assert not LaurentPoly({1: 1}).is_symmetric()
        assert LaurentPoly({2: 5}).inverse_q() == LaurentPoly({-2: 5})

    def test_rendering(self):
        poly = LaurentPoly({-1: F(1, 2), 0: 2})
        assert poly.to_list() == [[-1, "1/2"], [0, "2"]]
        assert str(poly) == "1/2*q^-1 + 2*q^0"
        assert str(LaurentPoly.zero()) == "0"


@pytest.mark.unit
class TestRationalFn:
    def test_canonical_form(self):
        f = RationalFn.from_coefficients([0, 2], [2, -4, 2])
        assert f == q_over_square()
        assert f.num == (F(0), F(1))
        assert f.den == (F(1), F(-2), F(1))

    def test_common_factor_cancels(self):
        # (1 - q^2) / (1 - q) = 1 + q
        f = RationalFn.from_coefficients([1, 0, -1], [1, -1])
        assert f == RationalFn.from_coefficients([1, 1], [1])

    def test_denominator_must_be_monic(self):
        with pytest.raises(ValidationError, match="monic"):
            RationalFn(num=(F(1),), den=(F(2),))

    def test_zero_denominator(self):
        with pytest.raises(DomainError):
            RationalFn.from_coefficients([1], [0])

    def test_expand(self):
        assert q_over_square().expand(0, 4) == LaurentPoly({1: 1, 2: 2, 3: 3, 4: 4})
        geometric = RationalFn.from_coefficients([1], [1, -1])
        assert geometric.expand(-2, 3) == LaurentPoly({0: 1, 1: 1, 2: 1, 3: 1})

    def test_expand_with_pole_at_zero(self):
        poly = LaurentPoly({-2: 1, 0: 3, 1: -1})
        f = RationalFn.from_laurent(poly)
        assert f.order_at_zero() == 2
        assert f.expand(-5, 5) == poly
        assert poly.to_rational() == f

    def test_q_symmetry(self):
        assert q_over_square().is_q_symmetric()
        assert not RationalFn.from_coefficients([0, 0, 1], [1, -2, 1]).is_q_symmetric()
        assert RationalFn.from_laurent(LaurentPoly({-1: 1, 1: 1})).is_q_symmetric()

    def test_arithmetic(self):
        one = RationalFn.one()
        f = q_over_square()
        assert (f - f).is_zero()
        assert f * one == f
        assert f + RationalFn.zero() == f
        assert (f * f).expand(0, 3) == LaurentPoly({2: 1, 3: 4})
        assert RationalFn.constant(0) == RationalFn.zero()

    def test_to_dict(self):
        assert q_over_square().to_dict() == {"num": ["0", "1"], "den": ["1", "-2", "1"]}


@pytest.mark.unit
class TestConeSeries:
    def test_exp(self):
        x = ConeSeries.create({(1,): LaurentPoly({1: 1})}, (2,), SeriesMode.WINDOW)
        assert x.exp().to_dict() == {
            "mode": "window",
            "cutoff": [2],
            "series": [
                {"beta": [0], "terms": [[0, "1"]]},
                {"beta": [1], "terms": [[1, "1"]]},
                {"beta": [2], "terms": [[2, "1/2"]]},
            ],
        }

    def test_exp_needs_positive_classes(self):
        x = ConeSeries.create({(0,): LaurentPoly.one()}, (1,), SeriesMode.WINDOW)
        with pytest.raises(DomainError):
            x.exp()

    def test_product_drops_classes_beyond_cutoff(self):
        x = ConeSeries.create({(1,): LaurentPoly.one()}, (1,), SeriesMode.WINDOW)
        assert (x * x).coeffs == {}
        assert x.power(0) == x.unit()

    def test_ceiling_truncates(self):
        x = ConeSeries.create({(1,): LaurentPoly({1: 1, 5: 1})}, (1,), SeriesMode.WINDOW, ceiling=3)
        assert x.coefficient((1,)) == LaurentPoly({1: 1})

    def test_mode_checks(self):
        with pytest.raises(ValidationError, match="needs RationalFn"):
            ConeSeries.create({(1,): LaurentPoly.one()}, (1,), SeriesMode.CLOSED)
        closed = ConeSeries.create({(1,): RationalFn.one()}, (1,), SeriesMode.CLOSED)
        with pytest.raises(DomainError):
            closed.truncate(0, 1)
        window = ConeSeries.create({}, (1,), SeriesMode.WINDOW)
        with pytest.raises(ValidationError, match="share mode"):
            closed + window

    def test_beyond_cutoff(self):
        with pytest.raises(ValidationError, match="exceeds cutoff"):
            ConeSeries.create({(2,): LaurentPoly.one()}, (1,), SeriesMode.WINDOW)

    def test_closed_exp(self):
        x = ConeSeries.create({(1,): q_over_square()}, (1,), SeriesMode.CLOSED)
        assert x.exp().coefficient((0,)) == RationalFn.one()
        assert x.exp().coefficient((1,)) == q_over_square()
        assert x.exp().to_dict()["series"][1] == {"beta": [1], "num": ["0", "1"], "den": ["1", "-2", "1"]}
