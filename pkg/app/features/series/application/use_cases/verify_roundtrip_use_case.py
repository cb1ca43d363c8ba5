"""Use case verifying the factorization P = L exp(N') end to end."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from app.core.utils.logger import get_logger
from app.features.cone.domain.entities.cone_model import Beta, ConeModel, classes_in_box
from app.features.cone.domain.services.cone_service import ConeService
from app.features.integrate.domain.entities.invariant_table import InvariantTable
from app.features.integrate.domain.services.wall_crossing_service import WallCrossingService
from app.features.series.domain.services.series_service import SeriesService
from app.features.series.domain.value_objects.cone_series import SeriesMode
from app.features.series.domain.value_objects.roundtrip_report import (
    CheckFailure,
    CheckResult,
    RoundtripReport,
)
from app.features.stability.domain.value_objects.stability_param import StabilityParam

logger = get_logger(__name__)


@dataclass
class VerifyRoundtripRequest:
    """Request for a factorization roundtrip."""
    model: ConeModel
    p_table: InvariantTable
    n_table: InvariantTable
    beta_cutoff: Sequence[int]
    q_window: Tuple[int, int]
    expect_symmetric: bool = True  # inputs came from symmetric L and symmetric-periodic N
    explicit_chains: bool = False  # evaluate L entry by entry with l_from_pn


class VerifyRoundtripUseCase:
    """Recover L from P and N, then check it against three independent routes."""

    def __init__(
        self,
        cone_service: ConeService,
        wall_crossing_service: WallCrossingService,
        series_service: SeriesService,
    ):
        self.cone_service = cone_service
        self.wall_crossing_service = wall_crossing_service
        self.series_service = series_service

    def execute(self, request: VerifyRoundtripRequest) -> RoundtripReport:
        """Execute the roundtrip."""
        model = request.model
        cutoff = model.check_beta(request.beta_cutoff, "beta_cutoff")
        lo, hi = request.q_window
        betas = [beta for beta in classes_in_box(cutoff) if any(beta)]

        l_table = self._recover_l(request, cutoff)
        checks = [self._check_reproduces_p(request, l_table, cutoff)]
        if request.expect_symmetric:
            checks.append(self._check_l_symmetric(l_table, betas, hi))
            checks.append(self._check_l_support(l_table, betas, model))
        else:
            checks.append(CheckResult("l_symmetric", 0, skipped=True))
            checks.append(CheckResult("l_support", 0, skipped=True))

        closed = self.series_service.expan_build(
            self.series_service.table_series(l_table, model, cutoff, SeriesMode.CLOSED),
            request.n_table,
            model,
        )
        if request.expect_symmetric:
            checks.append(self._check_closed_symmetric(closed, betas, lo))
        else:
            checks.append(CheckResult("p_closed_symmetric", 0, skipped=True))
        checks.append(self._check_closed_matches(request, closed, betas))
        checks.append(self._check_log_expansion(request, l_table, cutoff, betas))

        report = RoundtripReport(checks=checks)
        logger.info(
            "verify_roundtrip",
            cutoff=list(cutoff),
            window=[lo, hi],
            passed=report.passed,
            checks=len(checks),
        )
        return report

    def _recover_l(self, request: VerifyRoundtripRequest, cutoff: Beta) -> InvariantTable:
        lo, hi = request.q_window
        if not request.explicit_chains:
            return self.wall_crossing_service.l_table_from_pn(
                request.p_table, request.n_table, request.model, cutoff, request.q_window
            )
        start = min([lo] + [request.model.n_floor(beta) for beta in classes_in_box(cutoff)])
        values: Dict[Beta, Dict[int, Fraction]] = {}
        for beta in classes_in_box(cutoff):
            if not any(beta):
                continue
            values[beta] = {
                n: self.wall_crossing_service.l_from_pn(
                    n, beta, request.p_table, request.n_table, request.model
                )
                for n in range(start, hi + 1)
            }
        return InvariantTable.l_table(
            request.model,
            values,
            windows={beta: (start, hi) for beta in values},
            l00=request.p_table.value(0, request.model.zero),
        )

    def _check_reproduces_p(
        self, request: VerifyRoundtripRequest, l_table: InvariantTable, cutoff: Beta
    ) -> CheckResult:
        lo, hi = request.q_window
        series = self.series_service.table_series(l_table, request.model, cutoff, SeriesMode.WINDOW)
        rebuilt = self.series_service.expan_build(series, request.n_table, request.model, (lo, hi))
        checked = 0
        for beta in classes_in_box(cutoff):
            for n in range(lo, hi + 1):
                expected = request.p_table.value(n, beta)
                actual = rebuilt.coefficient(beta).coefficient(n)
                checked += 1
                if expected != actual:
                    return CheckResult("reproduces_p", checked, CheckFailure("reproduces_p", beta, n, expected, actual))
        return CheckResult("reproduces_p", checked)

    def _check_l_symmetric(self, l_table: InvariantTable, betas: List[Beta], hi: int) -> CheckResult:
        checked = 0
        for beta in betas:
            start, _ = l_table.windows[beta]
            reach = min(hi, -start)
            for n in range(-reach, reach + 1):
                checked += 1
                expected, actual = l_table.value(-n, beta), l_table.value(n, beta)
                if expected != actual:
                    return CheckResult("l_symmetric", checked, CheckFailure("l_symmetric", beta, n, expected, actual))
        return CheckResult("l_symmetric", checked)

    def _check_l_support(
        self, l_table: InvariantTable, betas: List[Beta], model: ConeModel
    ) -> CheckResult:
        checked = 0
        origin = StabilityParam(k=Fraction(0))
        for beta in betas:
            bound = self.cone_service.finite_support_bound(beta, origin, model)
            start, top = l_table.windows[beta]
            for n in range(start, top + 1):
                if bound <= n <= -bound:
                    continue
                checked += 1
                actual = l_table.value(n, beta)
                if actual:
                    return CheckResult("l_support", checked, CheckFailure("l_support", beta, n, Fraction(0), actual))
        return CheckResult("l_support", checked)

    def _check_closed_symmetric(self, closed, betas: List[Beta], lo: int) -> CheckResult:
        checked = 0
        for beta in betas:
            checked += 1
            defect = self.series_service.symmetry_defect(closed.coefficient(beta), lo)
            if defect is not None:
                degree, expected, actual = defect
                return CheckResult(
                    "p_closed_symmetric",
                    checked,
                    CheckFailure("p_closed_symmetric", beta, degree, expected, actual),
                )
        return CheckResult("p_closed_symmetric", checked)

    def _check_closed_matches(
        self, request: VerifyRoundtripRequest, closed, betas: List[Beta]
    ) -> CheckResult:
        lo, hi = request.q_window
        checked = 0
        window = self.series_service.table_series(
            request.p_table, request.model, request.beta_cutoff, SeriesMode.WINDOW, hi=hi
        )
        for beta in betas:
            checked += 1
            mismatch = self.series_service.first_mismatch(
                closed.coefficient(beta), window.coefficient(beta).truncate(lo, hi), hi, lo
            )
            if mismatch is not None:
                degree, expected, actual = mismatch
                return CheckResult(
                    "p_closed_matches_window",
                    checked,
                    CheckFailure("p_closed_matches_window", beta, degree, expected, actual),
                )
        return CheckResult("p_closed_matches_window", checked)

    def _check_log_expansion(
        self,
        request: VerifyRoundtripRequest,
        l_table: InvariantTable,
        cutoff: Beta,
        betas: List[Beta],
    ) -> CheckResult:
        lo, hi = request.q_window
        p_series = self.series_service.table_series(
            request.p_table, request.model, cutoff, SeriesMode.WINDOW, hi=hi
        )
        logged = self.series_service.log_expansion(p_series, request.n_table, request.model, (lo, hi))
        checked = 0
        for beta in betas:
            for n in range(lo, hi + 1):
                checked += 1
                expected = l_table.value(n, beta)
                actual = logged.coefficient(beta).coefficient(n)
                if expected != actual:
                    return CheckResult(
                        "log_expansion_agrees",
                        checked,
                        CheckFailure("log_expansion_agrees", beta, n, expected, actual),
                    )
        return CheckResult("log_expansion_agrees", checked)
