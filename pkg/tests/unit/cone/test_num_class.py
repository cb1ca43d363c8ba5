"""Tests for NumClass, Slope and ConeModel."""

from fractions import Fraction

import pytest

from app.core.shared.exceptions import ConfigurationError, ValidationError
from app.features.cone.domain.entities.cone_model import ConeModel, classes_in_box
from app.features.cone.domain.value_objects.num_class import NumClass, class_sum
from app.features.cone.domain.value_objects.slope import Slope
from tests.fixtures.factories import cls


@pytest.mark.unit
class TestNumClass:
    def test_torsion_needs_nonzero_beta(self):
        with pytest.raises(ValidationError, match="beta != 0"):
            NumClass.create(0, (0,), 1)

    def test_rank_class_at_zero_beta_needs_zero_n(self):
        assert NumClass.is_valid(-1, (0,), 0)
        assert not NumClass.is_valid(-1, (0,), 2)

    def test_rank_out_of_range(self):
        with pytest.raises(ValidationError, match="rank"):
            NumClass.create(1, (1,), 0)

    def test_from_list_roundtrip(self):
        v = NumClass.from_list([-1, [2, 1], 3])
        assert v == cls(-1, (2, 1), 3)
        assert v.to_list() == [-1, [2, 1], 3]

    def test_from_list_rejects_bad_shape(self):
        with pytest.raises(ValidationError):
            NumClass.from_list([0, [1]])

    def test_dual_negates_n(self):
        assert cls(0, (1,), 3).dual() == cls(0, (1,), -3)

    def test_sum_and_label(self):
        total = class_sum([cls(-1, (0,), 0), cls(0, (1,), 1), cls(0, (1,), 0)])
        assert total == cls(-1, (2,), 1)
        assert total.label() == "(-1,(2),1)"

    def test_sum_rejects_invalid_total(self):
        with pytest.raises(ValidationError):
            cls(0, (1,), 1) - cls(0, (1,), 0)


@pytest.mark.unit
class TestSlope:
    def test_finite_slope(self):
        assert Slope.finite(3, 6).value == Fraction(1, 2)

    def test_rank_slope_is_infinite(self):
        slope = Slope.infinite()
        assert not slope.is_finite
        assert slope.to_str() == "inf"

    def test_degree_must_be_positive(self):
        with pytest.raises(ValidationError):
            Slope.finite(1, 0)


@pytest.mark.unit
class TestConeModel:
    def test_classes_in_box_is_lexicographic(self):
        assert classes_in_box((1, 1)) == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_create_fills_defaults(self):
        model = ConeModel.create(omega=(1, 2), beta_bound=(1, 1), m_table={(1, 0): -2}, m_default=-1)
        assert model.m((1, 0)) == -2
        assert model.m((0, 1)) == -1
        assert model.m((0, 0)) == 0
        assert model.n_floor((0, 0)) == 0

    def test_weights_must_be_positive(self):
        with pytest.raises(ConfigurationError, match="model.omega"):
            ConeModel.create(omega=(0,), beta_bound=(1,))

    def test_m_at_zero_must_vanish(self):
        with pytest.raises(ConfigurationError, match="m\\(0\\)"):
            ConeModel.create(omega=(1,), beta_bound=(1,), m_table={(0,): 3})

    def test_check_beta_dimension(self, model):
        with pytest.raises(ConfigurationError, match="expected 1 components"):
            model.check_beta((1, 1))

    def test_check_beta_effective(self, model):
        with pytest.raises(ConfigurationError, match="not effective"):
            model.check_beta((-1,))

    def test_to_dict(self):
        data = ConeModel.create(omega=(2,), beta_bound=(1,)).to_dict()
        assert data["omega"] == [2]
        assert data["m_table"] == [{"beta": [0], "value": 0}, {"beta": [1], "value": 0}]
