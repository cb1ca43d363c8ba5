"""Use case describing the wall set S(beta) and probing stability parameters."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from app.core.utils.logger import get_logger
from app.core.utils.validators import format_rational
from app.features.cone.domain.entities.cone_model import Beta, ConeModel
from app.features.stability.domain.services.stability_service import StabilityService
from app.features.stability.domain.value_objects.stability_param import StabilityParam
from app.features.stability.domain.value_objects.wall_set import WallSet

logger = get_logger(__name__)


@dataclass
class DescribeWallsRequest:
    """Request for S(beta) and the chambers around a list of probe values."""
    model: ConeModel
    beta: Beta
    probes: List[Fraction] = field(default_factory=list)
    dominance_span: int = 4


@dataclass(frozen=True)
class WallProbe:
    """Where one value of k sits relative to S(beta)."""

    k: Fraction
    is_wall: bool
    chamber: tuple
    samples: Optional[tuple] = None
    dominated_below: Optional[bool] = None
    dominated_above: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return self.dominated_below is not False and self.dominated_above is not False

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        data: Dict[str, Any] = {
            "k": format_rational(self.k),
            "is_wall": self.is_wall,
            "chamber": [format_rational(c) for c in self.chamber],
        }
        if self.samples is not None:
            data["samples"] = [format_rational(s) for s in self.samples]
        if self.dominated_below is not None:
            data["dominance"] = {"below": self.dominated_below, "above": self.dominated_above}
        return data


@dataclass(frozen=True)
class WallReport:
    """S(beta) together with the probed parameters."""

    walls: WallSet
    probes: List[WallProbe]

    @property
    def passed(self) -> bool:
        return all(probe.passed for probe in self.probes)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        data = self.walls.to_dict()
        data["probes"] = [probe.to_dict() for probe in self.probes]
        return data


class DescribeWallsUseCase:
    """Use case for the wall set S(beta) and dominance across each probed wall."""

    def __init__(self, stability_service: StabilityService):
        self.stability_service = stability_service

    def execute(self, request: DescribeWallsRequest) -> WallReport:
        """Execute the wall description."""
        walls = self.stability_service.walls(request.beta, request.model)
        probes = [self._probe(walls, k, request) for k in request.probes]
        logger.info(
            "walls described",
            beta=list(request.beta),
            denominators=list(walls.denominators),
            probes=len(probes),
        )
        return WallReport(walls=walls, probes=probes)

    def _probe(self, walls: WallSet, k: Fraction, request: DescribeWallsRequest) -> WallProbe:
        if not walls.contains(k):
            return WallProbe(k=k, is_wall=False, chamber=walls.chamber_of(k))
        below, above = walls.chamber_samples(k)
        if k >= 0:
            return WallProbe(k=k, is_wall=True, chamber=(k, k), samples=(below, above))

        wall = StabilityParam(k=k)
        dominated = []
        for sample in (below, above):
            side = StabilityParam(k=sample)
            pool = self.stability_service.relevant_classes(
                request.beta, side, request.model, request.dominance_span
            )
            dominated.append(self.stability_service.check_dominance(side, wall, pool, request.model))
        return WallProbe(
            k=k,
            is_wall=True,
            chamber=(k, k),
            samples=(below, above),
            dominated_below=dominated[0],
            dominated_above=dominated[1],
        )
