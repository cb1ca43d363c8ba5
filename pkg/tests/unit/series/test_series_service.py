"""Tests for SeriesService, the series build and the factorization roundtrip."""

from fractions import Fraction

import pytest

from app.core.shared.exceptions import ConfigurationError, DomainError
from app.features.cone.domain.entities.cone_model import ConeModel
from app.features.integrate.domain.entities.invariant_table import InvariantTable
from app.features.series.application.use_cases.build_series_use_case import (
    BuildSeriesRequest,
    BuildSeriesUseCase,
)
from app.features.series.application.use_cases.verify_roundtrip_use_case import VerifyRoundtripRequest
from app.features.series.domain.services.table_generator import TableGenerator, asymmetric_pair
from app.features.series.domain.value_objects.cone_series import SeriesMode
from app.features.series.domain.value_objects.laurent_poly import LaurentPoly
from app.features.series.domain.value_objects.rational_fn import RationalFn
from tests.fixtures.factories import line_model

F = Fraction
WINDOW = (-6, 6)


def micro_l_table(model: ConeModel) -> InvariantTable:
    return InvariantTable.l_table(model, {(1,): {0: 2}}, windows={(1,): WINDOW})


@pytest.mark.unit
class TestClosedForms:
    @pytest.mark.parametrize("a", [1, 3, F(-1, 2)])
    def test_degree_one(self, series_service, a):
        model = line_model(1)
        n_table = InvariantTable.n_table(model, {(1,): {0: a}})
        f = series_service.n_closed_form(n_table, (1,), model)
        assert f == RationalFn.from_coefficients([0, a], [1, -2, 1])

    def test_degree_two_odd_residue(self, series_service):
        model = ConeModel.create(omega=(2,), beta_bound=(1,))
        n_table = InvariantTable.n_table(model, {(1,): {1: 3}})
        f = series_service.n_closed_form(n_table, (1,), model)
        assert f == RationalFn.from_coefficients([0, 3, 0, 3], [1, 0, -2, 0, 1])
        assert series_service.q_symmetry_check(f)

    @pytest.mark.parametrize(
        "omega, period, strict",
        [
            ((3,), {0: 1, 1: 2, 2: 2}, True),
            ((4,), {0: F(1, 2), 1: -1, 2: 3, 3: -1}, True),
            ((3,), {0: 1, 1: 1, 2: 0}, False),
        ],
    )
    def test_expansion_matches_window(self, series_service, omega, period, strict):
        model = ConeModel.create(omega=omega, beta_bound=(1,))
        n_table = InvariantTable.n_table(model, {(1,): period}, strict=strict)
        f = series_service.n_closed_form(n_table, (1,), model)
        window = series_service.n_window(n_table, (1,), model, 12)
        assert series_service.series_matches_expansion(f, window, 12, lo=0)
        assert series_service.q_symmetry_check(f) is strict

    def test_undefined_at_zero(self, series_service, model):
        n_table = InvariantTable.n_table(model, {(1,): {0: 1}})
        with pytest.raises(DomainError):
            series_service.n_closed_form(n_table, (0,), model)


@pytest.mark.unit
class TestMismatches:
    def test_symmetry_defect(self, series_service):
        f = RationalFn.from_coefficients([0, 0, 1], [1, -2, 1])
        # f(1/q) = 1 / (1 - q)^2 starts at degree 0
        assert series_service.symmetry_defect(f, 0) == (0, F(1), F(0))

    def test_no_defect_for_symmetric(self, series_service):
        f = RationalFn.from_coefficients([0, 1], [1, -2, 1])
        assert series_service.symmetry_defect(f, -4) is None

    def test_first_mismatch(self, series_service):
        f = RationalFn.from_coefficients([0, 1], [1, -2, 1])
        window = LaurentPoly({1: 1, 2: 2, 3: 4})
        assert series_service.first_mismatch(f, window, 5) == (3, F(4), F(3))
        assert not series_service.series_matches_expansion(f, window, 5)
        assert series_service.series_matches_expansion(f, window, 2)


@pytest.mark.unit
class TestFactorization:
    def test_build_p_table_from_micro_l(self, series_service, micro):
        model, p_table, n_table = micro
        built = series_service.build_p_table(micro_l_table(model), n_table, model, (1,), WINDOW)
        for n in range(-6, 7):
            assert built.value(n, (1,)) == p_table.value(n, (1,))

    def test_log_expansion_inverts_build(self, series_service, micro):
        model, p_table, n_table = micro
        p_series = series_service.table_series(p_table, model, (1,), SeriesMode.WINDOW)
        logged = series_service.log_expansion(p_series, n_table, model, WINDOW)
        assert logged.coefficient((1,)) == LaurentPoly({0: 2})
        assert logged.coefficient((0,)) == LaurentPoly.one()

    def test_window_build_needs_window(self, series_service, micro):
        model, _, n_table = micro
        l_series = series_service.table_series(micro_l_table(model), model, (1,), SeriesMode.WINDOW)
        with pytest.raises(DomainError, match="q-window"):
            series_service.expan_build(l_series, n_table, model)

    def test_exponent_series_window_needs_ceiling(self, series_service, micro):
        model, _, n_table = micro
        with pytest.raises(DomainError, match="ceiling"):
            series_service.exponent_series(n_table, model, (1,), SeriesMode.WINDOW)


@pytest.mark.unit
class TestBuildSeriesUseCase:
    def test_window_mode(self, series_service, micro):
        model, _, n_table = micro
        result = BuildSeriesUseCase(series_service).execute(
            BuildSeriesRequest(
                model=model,
                l_table=micro_l_table(model),
                n_table=n_table,
                beta_cutoff=(1,),
                q_window=(0, 4),
            )
        )
        assert result.coefficient((1,)) == LaurentPoly({0: 2, 1: 1, 2: 2, 3: 3, 4: 4})

    def test_closed_mode(self, series_service, micro):
        model, _, n_table = micro
        result = BuildSeriesUseCase(series_service).execute(
            BuildSeriesRequest(
                model=model,
                l_table=micro_l_table(model),
                n_table=n_table,
                beta_cutoff=(1,),
                mode=SeriesMode.CLOSED,
            )
        )
        expected = RationalFn.constant(2) + RationalFn.from_coefficients([0, 1], [1, -2, 1])
        assert result.coefficient((1,)) == expected

    def test_window_mode_without_window(self, series_service, micro):
        model, _, n_table = micro
        with pytest.raises(ConfigurationError, match="cutoffs.q_window"):
            BuildSeriesUseCase(series_service).execute(
                BuildSeriesRequest(
                    model=model, l_table=micro_l_table(model), n_table=n_table, beta_cutoff=(1,)
                )
            )


@pytest.mark.unit
class TestVerifyRoundtrip:
    def test_micro_model_passes(self, container, micro):
        model, p_table, n_table = micro
        report = container.verify_roundtrip_use_case().execute(
            VerifyRoundtripRequest(
                model=model, p_table=p_table, n_table=n_table, beta_cutoff=(1,), q_window=WINDOW
            )
        )
        assert report.passed
        assert report.first_failure is None
        assert [c.assertion for c in report.checks] == [
            "reproduces_p",
            "l_symmetric",
            "l_support",
            "p_closed_symmetric",
            "p_closed_matches_window",
            "log_expansion_agrees",
        ]

    def test_explicit_chains_agree(self, container, micro):
        model, p_table, n_table = micro
        report = container.verify_roundtrip_use_case().execute(
            VerifyRoundtripRequest(
                model=model,
                p_table=p_table,
                n_table=n_table,
                beta_cutoff=(1,),
                q_window=(-4, 4),
                explicit_chains=True,
            )
        )
        assert report.passed

    def test_asymmetric_control_fails_only_symmetry(self, container, series_service):
        pair = asymmetric_pair()
        p_table = series_service.build_p_table(pair.l_table, pair.n_table, pair.model, pair.beta_cutoff, WINDOW)
        report = container.verify_roundtrip_use_case().execute(
            VerifyRoundtripRequest(
                model=pair.model,
                p_table=p_table,
                n_table=pair.n_table,
                beta_cutoff=pair.beta_cutoff,
                q_window=WINDOW,
            )
        )
        assert not report.passed
        failing = [c.assertion for c in report.checks if not c.passed]
        assert failing == ["p_closed_symmetric"]
        assert report.first_failure.beta == (1,)

    def test_asymmetric_control_without_symmetry_expectation(self, container, series_service):
        pair = asymmetric_pair()
        p_table = series_service.build_p_table(pair.l_table, pair.n_table, pair.model, pair.beta_cutoff, WINDOW)
        report = container.verify_roundtrip_use_case().execute(
            VerifyRoundtripRequest(
                model=pair.model,
                p_table=p_table,
                n_table=pair.n_table,
                beta_cutoff=pair.beta_cutoff,
                q_window=WINDOW,
                expect_symmetric=False,
            )
        )
        assert report.passed
        assert report.check("p_closed_symmetric").skipped
        assert report.to_dict()["first_failure"] is None

    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_random_pairs(self, container, series_service, seed):
        pair = TableGenerator(seed).random_pair(rank=1)
        p_table = series_service.build_p_table(pair.l_table, pair.n_table, pair.model, pair.beta_cutoff, WINDOW)
        report = container.verify_roundtrip_use_case().execute(
            VerifyRoundtripRequest(
                model=pair.model,
                p_table=p_table,
                n_table=pair.n_table,
                beta_cutoff=pair.beta_cutoff,
                q_window=WINDOW,
            )
        )
        assert report.passed, report.to_dict()
