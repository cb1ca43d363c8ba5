"""Tests for StabilityService and the wall description use case."""

from fractions import Fraction

import pytest

from app.core.shared.exceptions import DomainError
from app.features.stability.application.use_cases.describe_walls_use_case import (
    DescribeWallsRequest,
    DescribeWallsUseCase,
)
from app.features.stability.domain.value_objects.phase_order import PhaseOrder
from tests.fixtures.factories import param, rank, torsion

F = Fraction


@pytest.mark.unit
class TestCompare:
    def test_torsion_by_slope(self, stability_service, model):
        assert stability_service.compare(torsion(1, 1), torsion(2, 1), param(-1), model) is PhaseOrder.GT
        assert stability_service.compare(torsion(1, 1), torsion(2, 2), param(-1), model) is PhaseOrder.EQ

    def test_rank_classes_tie(self, stability_service, model):
        assert stability_service.compare(rank(1, 3), rank(0, 0), param(-1), model) is PhaseOrder.EQ

    @pytest.mark.parametrize(
        "n, expected",
        [(1, PhaseOrder.GT), (2, PhaseOrder.EQ), (3, PhaseOrder.LT)],
    )
    def test_rank_against_torsion(self, stability_service, model, n, expected):
        # -2k = 2
        assert stability_service.compare(rank(1, 0), torsion(1, n), param(-1), model) is expected
        assert stability_service.compare(torsion(1, n), rank(1, 0), param(-1), model) is expected.reversed()

    def test_dual_order_matches_recomputation(self, stability_service, model):
        k = param("-1/2")
        pairs = [
            (rank(1, 0), torsion(1, 2)),
            (torsion(1, 0), torsion(2, 1)),
            (rank(1, 2), rank(2, -1)),
        ]
        for v, w in pairs:
            order = stability_service.compare(v, w, k, model)
            expected = stability_service.compare(v.dual(), w.dual(), k.dual(), model)
            assert stability_service.dual_order(order, v, w) is expected

    def test_twisted_slope(self, stability_service, model):
        assert stability_service.twisted_slope(torsion(2, 1), param("-1/2"), model) == F(1)


@pytest.mark.unit
class TestWalls:
    def test_walls_of_two(self, stability_service, model):
        walls = stability_service.walls((2,), model)
        assert walls.denominators == (2, 4)

    def test_walls_on_plane(self, stability_service, plane_model):
        # degrees of nonzero classes below (1, 1): 1, 2, 3
        assert stability_service.walls((1, 1), plane_model).denominators == (2, 4, 6)

    def test_walls_undefined_at_zero(self, stability_service, model):
        with pytest.raises(DomainError):
            stability_service.walls((0,), model)

    def test_chamber_of(self, stability_service, model):
        assert stability_service.chamber_of(param("-1/3"), (2,), model) == (F(-1, 2), F(-1, 4))


@pytest.mark.unit
class TestDominance:
    def test_sides_dominate_the_wall(self, stability_service, model):
        wall = param("-1/2")
        below, above = stability_service.walls((2,), model).chamber_samples(wall.k)
        for sample in (below, above):
            side = param(sample)
            pool = stability_service.relevant_classes((2,), side, model, 3)
            assert stability_service.check_dominance(side, wall, pool, model)

    def test_wall_does_not_dominate_its_sides(self, stability_service, model):
        wall = param(-1)
        pool = [rank(1, 0), torsion(1, 2)]
        # at the wall the two phases tie, just above it the torsion class wins
        violation = stability_service.find_dominance_violation(wall, param("-7/8"), pool, model)
        assert violation == (rank(1, 0), torsion(1, 2))

    def test_relevant_classes_include_decomposition_parts(self, stability_service, model):
        pool = stability_service.relevant_classes((1,), param(-1), model, 1)
        assert rank(0, 0) in pool
        assert torsion(1, 1) in pool
        assert rank(1, -1) in pool
        assert pool == sorted(pool)


@pytest.mark.unit
class TestDescribeWallsUseCase:
    def test_probes(self, stability_service, model):
        use_case = DescribeWallsUseCase(stability_service)
        report = use_case.execute(
            DescribeWallsRequest(model=model, beta=(2,), probes=[F(-1, 2), F(-1, 3), F(1, 2)])
        )
        assert report.passed
        wall, chamber, positive = report.probes
        assert wall.samples == (F(-5, 8), F(-3, 8))
        assert wall.dominated_below and wall.dominated_above
        assert not chamber.is_wall
        assert chamber.chamber == (F(-1, 2), F(-1, 4))
        assert positive.is_wall and positive.dominated_below is None

    def test_to_dict(self, stability_service, model):
        report = DescribeWallsUseCase(stability_service).execute(
            DescribeWallsRequest(model=model, beta=(1,), probes=[F(-1, 3)])
        )
        assert report.to_dict() == {
            "beta": [1],
            "denominators": [2],
            "probes": [{"k": "-1/3", "is_wall": False, "chamber": ["-1/2", "0"]}],
        }
