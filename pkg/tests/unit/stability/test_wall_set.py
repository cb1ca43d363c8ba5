"""Tests for StabilityParam, PhaseOrder and WallSet."""

from fractions import Fraction

import pytest

from app.core.shared.exceptions import PreconditionError, ValidationError
from app.features.stability.domain.value_objects.phase_order import PhaseOrder
from app.features.stability.domain.value_objects.stability_param import StabilityParam
from app.features.stability.domain.value_objects.wall_set import WallSet

F = Fraction


@pytest.mark.unit
class TestStabilityParam:
    def test_create_from_string(self):
        k = StabilityParam.create("-3/6")
        assert k.k == F(-1, 2)
        assert k.to_str() == "-1/2"

    def test_int_is_promoted(self):
        assert StabilityParam(k=-2).k == F(-2)

    def test_float_is_rejected(self):
        with pytest.raises(ValidationError):
            StabilityParam(k=-0.5)

    def test_thresholds_and_dual(self):
        k = StabilityParam.create("-1/3")
        assert k.rank_threshold == F(2, 3)
        assert k.sigma_threshold == F(1)
        assert k.dual().k == F(1, 3)


@pytest.mark.unit
class TestPhaseOrder:
    def test_of_and_reversed(self):
        assert PhaseOrder.of(1, 2) is PhaseOrder.LT
        assert PhaseOrder.of(2, 2) is PhaseOrder.EQ
        assert PhaseOrder.GT.reversed() is PhaseOrder.LT
        assert PhaseOrder.EQ.reversed() is PhaseOrder.EQ

    def test_ge_le(self):
        assert PhaseOrder.EQ.is_ge and PhaseOrder.EQ.is_le
        assert not PhaseOrder.LT.is_ge
        assert not PhaseOrder.GT.is_le


@pytest.fixture
def walls() -> WallSet:
    """S((2)) on omega = (1)."""
    return WallSet(beta=(2,), denominators=(2, 4))


@pytest.mark.unit
class TestWallSet:
    def test_denominators_must_be_sorted(self):
        with pytest.raises(ValidationError):
            WallSet(beta=(1,), denominators=(4, 2))

    def test_denominators_must_be_positive(self):
        with pytest.raises(ValidationError):
            WallSet(beta=(1,), denominators=(0,))

    @pytest.mark.parametrize("k", [F(0), F(-1, 4), F(-1, 2), F(-3, 4), F(5, 2)])
    def test_contains_walls(self, walls, k):
        assert walls.contains(k)

    @pytest.mark.parametrize("k", [F(-1, 3), F(-1, 8), F(1, 5)])
    def test_skips_non_walls(self, walls, k):
        assert not walls.contains(k)

    def test_neighbours(self, walls):
        assert walls.next_above(F(-1, 2)) == F(-1, 4)
        assert walls.next_below(F(-1, 2)) == F(-3, 4)
        assert walls.next_above(F(-1, 3)) == F(-1, 4)

    def test_chamber_samples(self, walls):
        assert walls.chamber_samples(F(-1, 2)) == (F(-5, 8), F(-3, 8))

    def test_chamber_samples_need_a_wall(self, walls):
        with pytest.raises(PreconditionError, match="not a wall"):
            walls.chamber_samples(F(-1, 3))

    def test_chamber_of(self, walls):
        assert walls.chamber_of(F(-1, 3)) == (F(-1, 2), F(-1, 4))
        assert walls.chamber_of(F(-1, 4)) == (F(-1, 4), F(-1, 4))

    def test_to_dict(self, walls):
        assert walls.to_dict() == {"beta": [2], "denominators": [2, 4]}
