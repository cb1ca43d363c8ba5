"""Use case running the acceptance self-test suites."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator, List, Optional, Tuple

from app.core.utils.logger import get_logger
from app.core.utils.validators import format_rational
from app.features.cli.domain.value_objects.selftest_report import SelftestReport, SuiteResult
from app.features.coeff.domain.services.coefficient_service import CoefficientService
from app.features.cone.domain.entities.cone_model import ConeModel
from app.features.cone.domain.value_objects.num_class import NumClass
from app.features.hall.application.use_cases.verify_hall_identities_use_case import (
    VerifyHallIdentitiesRequest,
    VerifyHallIdentitiesUseCase,
)
from app.features.hall.domain.value_objects.generator_set import GeneratorSet
from app.features.integrate.domain.services.tree_service import TreeService
from app.features.integrate.domain.services.wall_crossing_service import WallCrossingService
from app.features.integrate.domain.value_objects.class_invariants import ClassInvariants
from app.features.series.application.use_cases.verify_roundtrip_use_case import (
    VerifyRoundtripRequest,
    VerifyRoundtripUseCase,
)
from app.features.series.domain.services.series_service import SeriesService
from app.features.series.domain.services.table_generator import (
    TableGenerator,
    asymmetric_pair,
    micro_model,
)
from app.features.stability.application.use_cases.describe_walls_use_case import (
    DescribeWallsRequest,
    DescribeWallsUseCase,
)
from app.features.stability.domain.services.stability_service import StabilityService
from app.features.stability.domain.value_objects.stability_param import StabilityParam

logger = get_logger(__name__)

ORIGIN = StabilityParam(k=Fraction(0))
ROUNDTRIP_WINDOW = (-12, 12)


@dataclass
class RunSelftestRequest:
    """Request for the acceptance suites."""
    seed: int
    trials: int = 100


def _label(*items) -> str:
    return " ".join(str(item) for item in items)


def sweep_tuples(beta_total: int, n_bound: int) -> Iterator[Tuple[NumClass, ...]]:
    """Tuples with one rank -1 entry and torsion entries, rank 1 cone, total beta <= beta_total."""
    ns = range(-n_bound, n_bound + 1)
    torsion = [NumClass(r=0, beta=(b,), n=n) for b in range(1, beta_total + 1) for n in ns]
    for length in range(beta_total + 1):
        for parts in product(torsion, repeat=length):
            used = sum(p.beta[0] for p in parts)
            if used > beta_total:
                continue
            for b_e in range(beta_total - used + 1):
                for n_e in ns if b_e else (0,):
                    rank = NumClass(r=-1, beta=(b_e,), n=n_e)
                    for e in range(length + 1):
                        yield parts[:e] + (rank,) + parts[e:]


def torsion_tuples(beta_total: int, n_bound: int) -> Iterator[Tuple[NumClass, ...]]:
    """All-torsion tuples of length >= 2 with total beta <= beta_total."""
    ns = range(-n_bound, n_bound + 1)
    torsion = [NumClass(r=0, beta=(b,), n=n) for b in range(1, beta_total + 1) for n in ns]
    for length in range(2, beta_total + 1):
        for parts in product(torsion, repeat=length):
            if sum(p.beta[0] for p in parts) <= beta_total:
                yield parts


class RunSelftestUseCase:
    """Runs every acceptance suite and collects a deterministic report."""

    def __init__(
        self,
        stability_service: StabilityService,
        coefficient_service: CoefficientService,
        tree_service: TreeService,
        wall_crossing_service: WallCrossingService,
        series_service: SeriesService,
        verify_hall_identities_use_case: VerifyHallIdentitiesUseCase,
        verify_roundtrip_use_case: VerifyRoundtripUseCase,
        describe_walls_use_case: DescribeWallsUseCase,
    ):
        self.stability_service = stability_service
        self.coefficient_service = coefficient_service
        self.tree_service = tree_service
        self.wall_crossing_service = wall_crossing_service
        self.series_service = series_service
        self.verify_hall_identities_use_case = verify_hall_identities_use_case
        self.verify_roundtrip_use_case = verify_roundtrip_use_case
        self.describe_walls_use_case = describe_walls_use_case

    def suites(self) -> List[Tuple[str, Callable[[RunSelftestRequest], SuiteResult]]]:
        return [
            ("surjection_identity", self.surjection_identity),
            ("coefficient_oracles", self.coefficient_oracles),
            ("hall_roundtrips", self.hall_roundtrips),
            ("tree_collapse", self.tree_collapse),
            ("chamber_identification", self.chamber_identification),
            ("factorization_roundtrip", self.factorization_roundtrip),
            ("closed_forms", self.closed_forms),
            ("dominance", self.dominance),
            ("determinism", self.determinism),
        ]

    def execute(self, request: RunSelftestRequest) -> SelftestReport:
        """Execute all suites in order."""
        results: List[SuiteResult] = []
        for name, suite in self.suites():
            logger.info("suite started", suite=name)
            if name == "determinism":
                result = self.determinism(request, list(results))
            else:
                result = suite(request)
            logger.info("suite finished", suite=name, checked=result.checked, passed=result.passed)
            results.append(result)
        return SelftestReport(seed=request.seed, trials=request.trials, suites=results)

    def surjection_identity(self, request: RunSelftestRequest) -> SuiteResult:
        result = SuiteResult("surjection_identity")
        for l in range(1, 8):
            value = self.coefficient_service.elem_identity(l)
            result.record(
                value == self.coefficient_service.expected_elem_identity(l),
                _label("l", l, "gave", format_rational(value)),
            )
        return result

    def coefficient_oracles(self, request: RunSelftestRequest) -> SuiteResult:
        result = SuiteResult("coefficient_oracles")
        coeffs = self.coefficient_service
        model = ConeModel.create(omega=(1,), beta_bound=(3,))
        for k in (StabilityParam(k=Fraction(-1)), StabilityParam(k=Fraction(-3, 2))):
            for classes in sweep_tuples(3, 4):
                label = _label("k", k, [c.label() for c in classes])
                u = coeffs.u_coeff(classes, k, ORIGIN, model)
                pattern = coeffs.nonvanishing_pattern(classes, k, model)
                if pattern and all(c.n for c in classes if c.is_torsion):
                    result.record(u == coeffs.u3_coeff(classes, k, model), _label("u3", label))
                elif not pattern:
                    result.record(u == 0, _label("u vanishing", label))
                s = coeffs.s_coeff(classes, k, ORIGIN, model)
                result.record(s == coeffs.s_pattern_sign(classes, k, model), _label("s sign", label))
            for classes in torsion_tuples(3, 4):
                result.record(
                    coeffs.s_coeff(classes, k, ORIGIN, model) == 0,
                    _label("s torsion", "k", k, [c.label() for c in classes]),
                )
        return result

    def hall_roundtrips(self, request: RunSelftestRequest) -> SuiteResult:
        result = SuiteResult("hall_roundtrips")
        model = ConeModel.create(omega=(1,), beta_bound=(2,))
        v = NumClass.create(-1, (2,), 2)
        generators = GeneratorSet.create(
            [NumClass.create(-1, (0,), 0), NumClass.create(0, (1,), 1), NumClass.create(0, (1,), 0)],
            v_max=v,
            max_word_length=4,
        )
        k_z, k_wall = StabilityParam(k=Fraction(-1)), StabilityParam(k=Fraction(-1, 2))
        report = self.verify_hall_identities_use_case.execute(
            VerifyHallIdentitiesRequest(model=model, generators=generators, v=v, k_z=k_z, k_z_prime=k_wall)
        )
        for check in report.checks:
            result.record(check.passed, check.name)
        for k in (k_z, k_wall):
            u = self.coefficient_service.u_coeff([v], k, k, model)
            result.record(u == 1, _label("U of a single class at k", k, "gave", format_rational(u)))
        return result

    def tree_collapse(self, request: RunSelftestRequest) -> SuiteResult:
        result = SuiteResult("tree_collapse")
        for l in range(1, 7):
            count = len(self.tree_service.labeled_trees(l))
            result.record(count == max(1, l ** (l - 2)), _label("trees on", l, "vertices:", count))

        pair = TableGenerator(request.seed + 4).random_pair(cutoff=(3,), omega=(1,))
        invariants = ClassInvariants(n_table=pair.n_table, rank_table=pair.l_table)
        k = StabilityParam(k=Fraction(-2))
        for b in range(1, 4):
            for n in range(-6, 7):
                v = NumClass(r=-1, beta=(b,), n=n)
                tree = self.wall_crossing_service.j_transform(v, invariants, k, ORIGIN, pair.model)
                star = self.wall_crossing_service.l_wallcross(
                    n, (b,), k, pair.l_table, pair.n_table, pair.model
                )
                result.record(tree == star, _label(v.label(), format_rational(tree), "!=", format_rational(star)))
        return result

    def chamber_identification(self, request: RunSelftestRequest) -> SuiteResult:
        result = SuiteResult("chamber_identification")
        wc = self.wall_crossing_service

        model, p_table, n_table = micro_model(1, 2, (-6, 6))
        for n in range(-6, 7):
            chains = wc.l_from_pn(n, (1,), p_table, n_table, model)
            runs = wc.l_from_pn(n, (1,), p_table, n_table, model, surjection_runs=True)
            k = wc.admissible_k(n, (1,), model)
            star = wc.l_wallcross(n, (1,), k, p_table, n_table, model)
            expected = Fraction(2) if n == 0 else Fraction(0)
            result.record(chains == expected, _label("micro l_from_pn n", n, format_rational(chains)))
            result.record(runs == chains, _label("micro surjection runs n", n))
            result.record(star == chains, _label("micro l_wallcross n", n, format_rational(star)))

        pair = TableGenerator(request.seed + 5).random_pair(cutoff=(2,), omega=(1,))
        window = (-3, 3)
        p_table = self.series_service.build_p_table(
            pair.l_table, pair.n_table, pair.model, pair.beta_cutoff, window
        )
        for b in (1, 2):
            for n in range(window[0], window[1] + 1):
                chains = wc.l_from_pn(n, (b,), p_table, pair.n_table, pair.model)
                k = wc.admissible_k(n, (b,), pair.model)
                star = wc.l_wallcross(n, (b,), k, p_table, pair.n_table, pair.model)
                label = _label("beta", b, "n", n)
                result.record(star == chains, _label("l_wallcross", label))
                result.record(chains == pair.l_table.value(n, (b,)), _label("recovered L", label))
        return result

    def factorization_roundtrip(self, request: RunSelftestRequest) -> SuiteResult:
        result = SuiteResult("factorization_roundtrip")
        roundtrip = self.verify_roundtrip_use_case

        model, p_table, n_table = micro_model(1, 2, (-6, 6))
        for explicit in (False, True):
            report = roundtrip.execute(
                VerifyRoundtripRequest(
                    model=model,
                    p_table=p_table,
                    n_table=n_table,
                    beta_cutoff=(1,),
                    q_window=(-6, 6),
                    explicit_chains=explicit,
                )
            )
            result.record(report.passed, _label("micro-model explicit_chains", explicit))

        generator = TableGenerator(request.seed + 6)
        for trial in range(request.trials):
            pair = generator.random_pair()
            report = roundtrip.execute(self._roundtrip_request(pair))
            failure = report.first_failure
            result.record(report.passed, _label("trial", trial, failure.to_dict() if failure else ""))

        report = roundtrip.execute(self._roundtrip_request(asymmetric_pair()))
        failure = report.first_failure
        pinpointed = (
            failure is not None
            and failure.assertion == "p_closed_symmetric"
            and tuple(failure.beta) == (1,)
            and [c.assertion for c in report.checks if not c.passed] == ["p_closed_symmetric"]
        )
        result.record(pinpointed, "broken N symmetry is pinpointed")
        return result

    def closed_forms(self, request: RunSelftestRequest) -> SuiteResult:
        result = SuiteResult("closed_forms")
        series = self.series_service
        generator = TableGenerator(request.seed + 7)
        for trial in range(5):
            pair = generator.random_pair(cutoff=(3,))
            for b in range(1, 4):
                f = series.n_closed_form(pair.n_table, (b,), pair.model)
                window = series.n_window(pair.n_table, (b,), pair.model, 50)
                label = _label("trial", trial, "beta", b)
                result.record(series.q_symmetry_check(f), _label("symmetry", label))
                result.record(series.series_matches_expansion(f, window, 50), _label("expansion", label))
        return result

    def dominance(self, request: RunSelftestRequest) -> SuiteResult:
        result = SuiteResult("dominance")
        model = ConeModel.create(omega=(1,), beta_bound=(2,))
        for b in (1, 2):
            denominators = self.stability_service.walls((b,), model).denominators
            probes = sorted({Fraction(j, d) for d in denominators for j in range(-3 * d, 0)})
            report = self.describe_walls_use_case.execute(
                DescribeWallsRequest(model=model, beta=(b,), probes=probes)
            )
            for probe in report.probes:
                result.record(probe.passed, _label("beta", b, "wall", format_rational(probe.k)))
        return result

    def determinism(
        self, request: RunSelftestRequest, earlier: Optional[List[SuiteResult]] = None
    ) -> SuiteResult:
        """Rerun every other suite with the same seed and compare full results."""
        result = SuiteResult("determinism")
        checked = [(name, suite) for name, suite in self.suites() if name != "determinism"]
        if earlier is None:
            earlier = [suite(request) for _, suite in checked]
        for (name, suite), first in zip(checked, earlier):
            second = suite(request)
            result.record(first == second, _label("rerun of", name))
        return result

    def _roundtrip_request(self, pair) -> VerifyRoundtripRequest:
        p_table = self.series_service.build_p_table(
            pair.l_table, pair.n_table, pair.model, pair.beta_cutoff, ROUNDTRIP_WINDOW
        )
        return VerifyRoundtripRequest(
            model=pair.model,
            p_table=p_table,
            n_table=pair.n_table,
            beta_cutoff=pair.beta_cutoff,
            q_window=ROUNDTRIP_WINDOW,
        )
