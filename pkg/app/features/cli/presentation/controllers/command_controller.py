"""Command controller: dispatches a run configuration to a use case."""

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from app.core.shared.config import settings
from app.core.shared.container import Container, container as default_container
from app.core.shared.exceptions import ConfigurationError
from app.core.utils.logger import get_logger
from app.core.utils.validators import format_rational
from app.features.cli.application.use_cases.run_selftest_use_case import RunSelftestRequest
from app.features.cli.presentation.controllers.config_mapper import ConfigMapper
from app.features.cli.presentation.schemas.run_config import RunConfig
from app.features.coeff.application.use_cases.compute_coefficient_use_case import (
    CoefficientKind,
    ComputeCoefficientRequest,
)
from app.features.cone.application.use_cases.list_decompositions_use_case import ListDecompositionsRequest
from app.features.hall.application.use_cases.verify_hall_identities_use_case import (
    VerifyHallIdentitiesRequest,
)
from app.features.integrate.application.use_cases.transform_table_use_case import (
    TransformMethod,
    TransformTableRequest,
)
from app.features.integrate.domain.entities.invariant_table import InvariantTable
from app.features.series.application.use_cases.build_series_use_case import BuildSeriesRequest
from app.features.series.application.use_cases.verify_roundtrip_use_case import VerifyRoundtripRequest
from app.features.series.domain.value_objects.laurent_poly import LaurentPoly
from app.features.stability.application.use_cases.describe_walls_use_case import DescribeWallsRequest

logger = get_logger(__name__)

COMMANDS = (
    "coeff-s",
    "coeff-u",
    "decomp",
    "walls",
    "hall-verify",
    "transform",
    "series",
    "verify",
    "selftest",
)


@dataclass
class CommandOutcome:
    """Report of one command: JSON payload, CSV table and pass/fail status."""

    command: str
    payload: Dict[str, Any]
    header: List[str] = field(default_factory=list)
    rows: List[List[Any]] = field(default_factory=list)
    passed: bool = True

    def render(self, fmt: str) -> str:
        """Render as "json" or "csv"."""
        if fmt == "json":
            return json.dumps(self.payload, sort_keys=True, indent=2) + "\n"
        if fmt == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(self.header)
            writer.writerows(self.rows)
            return buffer.getvalue()
        raise ConfigurationError(f"unknown format '{fmt}'", field="format")


def _beta(beta) -> str:
    return ";".join(str(b) for b in beta)


def _table_rows(table: InvariantTable) -> List[List[Any]]:
    return [[_beta(beta), n, format_rational(value)] for beta, n, value in table.entries()]


class CommandController:
    """Maps each CLI command onto its use case."""

    def __init__(self, container: Optional[Container] = None):
        self.container = container or default_container
        self.handlers: Dict[str, Callable[[ConfigMapper, Optional[int]], CommandOutcome]] = {
            "coeff-s": lambda m, s: self.coefficient(m, CoefficientKind.S),
            "coeff-u": lambda m, s: self.coefficient(m, CoefficientKind.U),
            "decomp": lambda m, s: self.decomp(m),
            "walls": lambda m, s: self.walls(m),
            "hall-verify": lambda m, s: self.hall_verify(m),
            "transform": lambda m, s: self.transform(m),
            "series": lambda m, s: self.series(m),
            "verify": lambda m, s: self.verify(m),
            "selftest": lambda m, s: self.selftest(s),
        }

    def run(self, config: RunConfig, command: str, seed: Optional[int] = None) -> CommandOutcome:
        """Run one command against a validated configuration."""
        handler = self.handlers.get(command)
        if handler is None:
            raise ConfigurationError(
                f"unknown command '{command}', expected one of {', '.join(COMMANDS)}", field="command"
            )
        outcome = handler(ConfigMapper(config), seed)
        logger.info("command completed", command=command, passed=outcome.passed)
        return outcome

    def coefficient(self, mapper: ConfigMapper, kind: CoefficientKind) -> CommandOutcome:
        options = self._section(mapper, "coeff")
        result = self.container.compute_coefficient_use_case().execute(
            ComputeCoefficientRequest(
                model=mapper.model,
                classes=mapper.classes(options.classes, "coeff.classes"),
                k_z=mapper.k,
                k_z_prime=mapper.k_prime,
                kind=kind,
            )
        )
        payload = result.to_dict()
        return CommandOutcome(
            command=f"coeff-{kind.value}",
            payload=payload,
            header=["kind", "k", "k_prime", "value"],
            rows=[[payload["kind"], payload["k"], payload["k_prime"], payload["value"]]],
        )

    def decomp(self, mapper: ConfigMapper) -> CommandOutcome:
        options = self._section(mapper, "decomp")
        listing = self.container.list_decompositions_use_case().execute(
            ListDecompositionsRequest(
                model=mapper.model, v=mapper.num_class(options.v, "decomp.v"), k=mapper.k
            )
        )
        rows = [
            [index, position, part.r, _beta(part.beta), part.n]
            for index, parts in enumerate(listing.tuples)
            for position, part in enumerate(parts)
        ]
        return CommandOutcome(
            command="decomp",
            payload=listing.to_dict(),
            header=["index", "position", "r", "beta", "n"],
            rows=rows,
        )

    def walls(self, mapper: ConfigMapper) -> CommandOutcome:
        options = self._section(mapper, "walls")
        report = self.container.describe_walls_use_case().execute(
            DescribeWallsRequest(
                model=mapper.model,
                beta=mapper.model.check_beta(options.beta, "walls.beta"),
                probes=list(mapper.config.stability.probes),
                dominance_span=options.dominance_span,
            )
        )
        rows = []
        for probe in report.probes:
            samples = [format_rational(s) for s in probe.samples] if probe.samples else ["", ""]
            rows.append(
                [
                    format_rational(probe.k),
                    probe.is_wall,
                    format_rational(probe.chamber[0]),
                    format_rational(probe.chamber[1]),
                    *samples,
                    "" if probe.dominated_below is None else probe.dominated_below,
                    "" if probe.dominated_above is None else probe.dominated_above,
                ]
            )
        return CommandOutcome(
            command="walls",
            payload=report.to_dict(),
            header=[
                "k",
                "is_wall",
                "chamber_lo",
                "chamber_hi",
                "sample_below",
                "sample_above",
                "dominated_below",
                "dominated_above",
            ],
            rows=rows,
            passed=report.passed,
        )

    def hall_verify(self, mapper: ConfigMapper) -> CommandOutcome:
        options = self._section(mapper, "hall")
        report = self.container.verify_hall_identities_use_case().execute(
            VerifyHallIdentitiesRequest(
                model=mapper.model,
                generators=mapper.generators(),
                v=mapper.num_class(options.v, "hall.v"),
                k_z=mapper.k,
                k_z_prime=mapper.k_prime,
            )
        )
        return CommandOutcome(
            command="hall-verify",
            payload=report.to_dict(),
            header=["name", "passed", "words"],
            rows=[[c.name, c.passed, len(c.actual)] for c in report.checks],
            passed=report.passed,
        )

    def transform(self, mapper: ConfigMapper) -> CommandOutcome:
        options = mapper.config.transform
        method = TransformMethod(options.method)
        source = mapper.p_table() if options.source == "P" else mapper.l_table()
        table = self.container.transform_table_use_case().execute(
            TransformTableRequest(
                model=mapper.model,
                n_table=mapper.n_table(),
                source=source,
                beta_cutoff=mapper.beta_cutoff,
                n_range=mapper.n_range,
                method=method,
                k=mapper.k if options.use_k else None,
            )
        )
        payload = table.to_dict()
        payload["method"] = method.value
        return CommandOutcome(
            command="transform",
            payload=payload,
            header=["beta", "n", "value"],
            rows=_table_rows(table),
        )

    def series(self, mapper: ConfigMapper) -> CommandOutcome:
        result = self.container.build_series_use_case().execute(
            BuildSeriesRequest(
                model=mapper.model,
                l_table=mapper.l_table(),
                n_table=mapper.n_table(),
                beta_cutoff=mapper.beta_cutoff,
                mode=mapper.mode,
                q_window=mapper.q_window,
            )
        )
        rows: List[List[Any]] = []
        for beta in result.betas():
            coeff = result.coefficient(beta)
            if isinstance(coeff, LaurentPoly):
                rows.extend([_beta(beta), "q", e, format_rational(c)] for e, c in coeff.terms())
            else:
                rows.extend([_beta(beta), "num", e, format_rational(c)] for e, c in enumerate(coeff.num))
                rows.extend([_beta(beta), "den", e, format_rational(c)] for e, c in enumerate(coeff.den))
        return CommandOutcome(
            command="series",
            payload=result.to_dict(),
            header=["beta", "part", "degree", "value"],
            rows=rows,
        )

    def verify(self, mapper: ConfigMapper) -> CommandOutcome:
        options = mapper.config.verify
        report = self.container.verify_roundtrip_use_case().execute(
            VerifyRoundtripRequest(
                model=mapper.model,
                p_table=mapper.p_table(),
                n_table=mapper.n_table(),
                beta_cutoff=mapper.beta_cutoff,
                q_window=mapper.q_window,
                expect_symmetric=options.expect_symmetric,
                explicit_chains=options.explicit_chains,
            )
        )
        return CommandOutcome(
            command="verify",
            payload=report.to_dict(),
            header=["assertion", "checked", "passed", "skipped"],
            rows=[[c.assertion, c.checked, c.passed, c.skipped] for c in report.checks],
            passed=report.passed,
        )

    def selftest(self, seed: Optional[int]) -> CommandOutcome:
        report = self.container.run_selftest_use_case().execute(
            RunSelftestRequest(
                seed=settings.selftest_seed if seed is None else seed,
                trials=settings.selftest_trials,
            )
        )
        return CommandOutcome(
            command="selftest",
            payload=report.to_dict(),
            header=["suite", "checked", "passed", "failure_count"],
            rows=[[s.name, s.checked, s.passed, len(s.failures)] for s in report.suites],
            passed=report.passed,
        )

    @staticmethod
    def _section(mapper: ConfigMapper, name: str):
        section = getattr(mapper.config, name)
        if section is None:
            raise ConfigurationError("section is required for this command", field=name)
        return section
