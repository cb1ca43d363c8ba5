"""Tests for the rank -1 wall-crossing formulas and the transform use case."""

from fractions import Fraction
from itertools import combinations
from math import prod

import pytest

from app.features.cone.domain.entities.cone_model import ConeModel, classes_in_box
from app.features.cone.domain.value_objects.num_class import NumClass, class_sum
from app.features.integrate.application.use_cases.transform_table_use_case import (
    TransformMethod,
    TransformTableRequest,
    TransformTableUseCase,
)
from app.features.integrate.domain.entities.invariant_table import InvariantTable
from app.features.integrate.domain.value_objects.class_invariants import ClassInvariants
from app.features.series.domain.services.table_generator import micro_model
from tests.fixtures.factories import cls, param, rank, torsion

F = Fraction
ORIGIN = param(0)
N_RANGE = range(-4, 5)


def expected_micro_l(n: int, c=2) -> Fraction:
    return F(c) if n == 0 else F(0)


def spanning_trees(l: int):
    """Edge sets on {0..l-1} with l - 1 edges that connect every vertex."""
    for edges in combinations(list(combinations(range(l), 2)), l - 1):
        reached = {0}
        for _ in range(l):
            reached |= {j for i, j in edges if i in reached} | {i for i, j in edges if j in reached}
        if len(reached) == l:
            yield edges


def chi(v: NumClass, w: NumClass) -> int:
    return v.r * w.n - w.r * v.n


def brute_force_j(v, invariants, k_z, k_z_prime, model, cone_service, coefficient_service, reach=6):
    """Tree sum over every ordered decomposition with torsion |n| <= reach, no slope window."""
    torsion_parts = [
        NumClass(r=0, beta=b, n=n) for b in classes_in_box(v.beta) if any(b) for n in range(-reach, reach + 1)
    ]
    rank_parts = [
        NumClass(r=-1, beta=b, n=n)
        for b in classes_in_box(v.beta)
        for n in range(v.n - 2 * reach, v.n + 2 * reach + 1)
        if any(b) or n == 0
    ]
    total = F(0)
    for parts in cone_service.ordered_decompositions(v, torsion_parts + rank_parts):
        l = len(parts)
        trees = sum(prod(chi(parts[i], parts[j]) for i, j in edges) for edges in spanning_trees(l))
        if not trees:
            continue
        u = coefficient_service.u_coeff(parts, k_z, k_z_prime, model)
        total += F(trees) * u / 2 ** (l - 1) * prod(invariants.value(p) for p in parts)
    return total


def oracle_invariants(omega: int):
    """N and L tables on beta <= (2) for a rank 1 cone of weight omega."""
    model = ConeModel.create(omega=(omega,), beta_bound=(2,))
    if omega == 1:
        n_rows = {(1,): {0: 3}, (2,): {0: 7, 1: 2}}
    else:
        n_rows = {(1,): {0: 3, 1: 1}, (2,): {0: 7, 1: 2, 2: 4, 3: 2}}
    window = range(-30, 31)
    l_table = InvariantTable.l_table(
        model,
        {(1,): {n: n * n + n + 1 for n in window}, (2,): {n: 3 * n + 5 for n in window}},
        windows={(1,): (-30, 30), (2,): (-30, 30)},
    )
    n_table = InvariantTable.n_table(model, n_rows)
    return model, ClassInvariants(n_table=n_table, rank_table=l_table)


@pytest.mark.unit
class TestMicroModel:
    def test_l_from_pn(self, wall_crossing_service, micro):
        model, p_table, n_table = micro
        for n in N_RANGE:
            assert wall_crossing_service.l_from_pn(n, (1,), p_table, n_table, model) == expected_micro_l(n)

    def test_l_from_pn_with_surjection_runs(self, wall_crossing_service, micro):
        model, p_table, n_table = micro
        for n in N_RANGE:
            value = wall_crossing_service.l_from_pn(
                n, (1,), p_table, n_table, model, surjection_runs=True
            )
            assert value == expected_micro_l(n)

    def test_l_wallcross_at_admissible_k(self, wall_crossing_service, micro):
        model, p_table, n_table = micro
        for n in N_RANGE:
            k = wall_crossing_service.admissible_k(n, (1,), model)
            assert wall_crossing_service.l_wallcross(n, (1,), k, p_table, n_table, model) == expected_micro_l(n)

    def test_tree_sum_at_admissible_k(self, wall_crossing_service, micro):
        model, p_table, n_table = micro
        invariants = ClassInvariants(n_table=n_table, rank_table=p_table)
        for n in range(-2, 4):
            k = wall_crossing_service.admissible_k(n, (1,), model)
            value = wall_crossing_service.j_transform(rank(1, n), invariants, k, ORIGIN, model)
            assert value == expected_micro_l(n)

    def test_table_from_pn(self, wall_crossing_service, micro):
        model, p_table, n_table = micro
        table = wall_crossing_service.l_table_from_pn(p_table, n_table, model, (1,), (-6, 6))
        assert table.windows[(1,)] == (-6, 6)
        assert table.values[(1,)] == {0: F(2)}
        assert table.l00 == F(1)

    @pytest.mark.parametrize("a, c", [(2, 1), (-1, 3), ("1/2", 0)])
    def test_other_micro_parameters(self, wall_crossing_service, a, c):
        model, p_table, n_table = micro_model(a, c, (-5, 5))
        table = wall_crossing_service.l_table_from_pn(p_table, n_table, model, (1,), (-5, 5))
        for n in range(-5, 6):
            assert table.value(n, (1,)) == expected_micro_l(n, c)


@pytest.mark.unit
class TestChamberValues:
    def test_admissible_k_is_negative_integer(self, wall_crossing_service, model):
        for n in range(-3, 6):
            k = wall_crossing_service.admissible_k(n, (2,), model)
            assert k.k < 0 and k.k.denominator == 1

    def test_admissible_k_values(self, wall_crossing_service, micro):
        model, _, _ = micro
        assert wall_crossing_service.admissible_k(3, (1,), model).k == F(-3)
        assert wall_crossing_service.admissible_k(-4, (1,), model).k == F(-1)

    def test_chamber_value(self, wall_crossing_service, micro):
        model, p_table, _ = micro
        assert wall_crossing_service.chamber_value(2, (1,), param(-2), p_table, model) == F(2)
        assert wall_crossing_service.chamber_value(2, (1,), ORIGIN, p_table, model) == F(0)
        assert wall_crossing_service.chamber_value(2, (1,), param(-1), p_table, model) is None


@pytest.mark.unit
class TestTreeSum:
    def test_torsion_class_reads_n(self, wall_crossing_service, micro):
        model, p_table, n_table = micro
        invariants = ClassInvariants(n_table=n_table, rank_table=p_table)
        assert wall_crossing_service.j_transform(torsion(1, 3), invariants, param(-1), ORIGIN, model) == F(1)

    def test_same_parameter_is_identity(self, wall_crossing_service, micro):
        model, p_table, n_table = micro
        invariants = ClassInvariants(n_table=n_table, rank_table=p_table)
        k = param(-3)
        assert wall_crossing_service.j_transform(rank(1, 3), invariants, k, k, model) == F(3)

    def test_same_positive_parameter_is_identity(self, wall_crossing_service, micro):
        model, p_table, n_table = micro
        invariants = ClassInvariants(n_table=n_table, rank_table=p_table)
        k = param(1)
        assert wall_crossing_service.j_transform(rank(1, 3), invariants, k, k, model) == F(3)

    def test_negative_slope_part_contributes_across_zero(self, cone_service, coefficient_service):
        model = ConeModel.create(omega=(2,), beta_bound=(2,))
        parts = (cls(0, (1,), -2), cls(0, (1,), -1), cls(-1, (0,), 0))
        k_z, k_z_prime = param(-1), param("1/2")
        # slopes -1 and -1/2; -2k' = -1 puts the first part on the wall of Z'
        assert coefficient_service.u_coeff(parts, k_z, k_z_prime, model) == F(1, 2)
        window = cone_service.decompositions_in_window(class_sum(parts), F(-1), F(2), model)
        assert parts in window

    @pytest.mark.parametrize("omega", [1, 2])
    @pytest.mark.parametrize(
        "k_z, k_z_prime",
        [
            (-1, "1/2"),
            ("-1/2", 1),
            (0, 1),
            (1, 0),
            ("1/2", "3/2"),
            ("-3/2", -1),
            (-1, "-3/2"),
        ],
    )
    @pytest.mark.parametrize("v", [rank(2, -2), rank(1, 0), rank(2, 1)])
    def test_matches_brute_force_tree_sum(
        self, wall_crossing_service, cone_service, coefficient_service, omega, k_z, k_z_prime, v
    ):
        model, invariants = oracle_invariants(omega)
        k_z, k_z_prime = param(k_z), param(k_z_prime)
        expected = brute_force_j(v, invariants, k_z, k_z_prime, model, cone_service, coefficient_service)
        assert wall_crossing_service.j_transform(v, invariants, k_z, k_z_prime, model) == expected


@pytest.mark.unit
class TestTransformTableUseCase:
    @pytest.mark.parametrize("method", list(TransformMethod))
    def test_every_route_agrees_on_micro(self, wall_crossing_service, micro, method):
        model, p_table, n_table = micro
        table = TransformTableUseCase(wall_crossing_service).execute(
            TransformTableRequest(
                model=model,
                n_table=n_table,
                source=p_table,
                beta_cutoff=(1,),
                n_range=(-3, 3),
                method=method,
            )
        )
        assert isinstance(table, InvariantTable)
        assert table.windows == {(1,): (-3, 3)}
        assert {n: table.value(n, (1,)) for n in range(-3, 4)} == {
            n: expected_micro_l(n) for n in range(-3, 4)
        }

    def test_fixed_k(self, wall_crossing_service, micro):
        model, p_table, n_table = micro
        table = TransformTableUseCase(wall_crossing_service).execute(
            TransformTableRequest(
                model=model,
                n_table=n_table,
                source=p_table,
                beta_cutoff=(1,),
                n_range=(1, 2),
                k=param(-3),
            )
        )
        assert table.value(1, (1,)) == F(0)
        assert table.value(2, (1,)) == F(0)
