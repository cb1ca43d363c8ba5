"""Use case computing the L table at k' = 0 by one of the wall-crossing routes."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from app.core.utils.logger import get_logger
from app.features.cone.domain.entities.cone_model import Beta, ConeModel, classes_in_box
from app.features.cone.domain.value_objects.num_class import NumClass
from app.features.integrate.domain.entities.invariant_table import InvariantTable
from app.features.integrate.domain.services.wall_crossing_service import WallCrossingService
from app.features.integrate.domain.value_objects.class_invariants import ClassInvariants
from app.features.stability.domain.value_objects.stability_param import StabilityParam

logger = get_logger(__name__)


class TransformMethod(str, Enum):
    """Route from the source table to L at k' = 0."""
    WALLCROSS = "wallcross"
    FROM_PN = "from_pn"
    TREE = "tree"


@dataclass
class TransformTableRequest:
    """Request for an L table on a box of classes and an n-range.

    ``source`` is L(sigma_k) for the wallcross and tree routes and P for
    from_pn. Without ``k`` every entry uses its own admissible k, which
    makes L(sigma_k) = P, so a P table can be passed as the source.
    """
    model: ConeModel
    n_table: InvariantTable
    source: InvariantTable
    beta_cutoff: Sequence[int]
    n_range: Tuple[int, int]
    method: TransformMethod = TransformMethod.WALLCROSS
    k: Optional[StabilityParam] = None


class TransformTableUseCase:
    """Use case for the l_wallcross, l_from_pn and tree-sum tables."""

    def __init__(self, wall_crossing_service: WallCrossingService):
        self.wall_crossing_service = wall_crossing_service

    def execute(self, request: TransformTableRequest) -> InvariantTable:
        """Execute the transform over every 0 < beta <= cutoff and n in range."""
        model = request.model
        cutoff = model.check_beta(request.beta_cutoff, "beta_cutoff")
        lo, hi = request.n_range

        values: Dict[Beta, Dict[int, Fraction]] = {}
        for beta in classes_in_box(cutoff):
            if not any(beta):
                continue
            values[beta] = {n: self._entry(request, n, beta) for n in range(lo, hi + 1)}

        table = InvariantTable.l_table(
            model,
            values,
            windows={beta: (lo, hi) for beta in values},
            l00=request.source.value(0, model.zero),
        )
        logger.info(
            "transform computed",
            method=request.method.value,
            cutoff=list(cutoff),
            n_range=[lo, hi],
            entries=sum(len(row) for row in values.values()),
        )
        return table

    def _entry(self, request: TransformTableRequest, n: int, beta: Beta) -> Fraction:
        service = self.wall_crossing_service
        model = request.model
        if request.method is TransformMethod.FROM_PN:
            return service.l_from_pn(n, beta, request.source, request.n_table, model)

        k = request.k or service.admissible_k(n, beta, model)
        if request.method is TransformMethod.WALLCROSS:
            return service.l_wallcross(n, beta, k, request.source, request.n_table, model)
        return service.j_transform(
            NumClass(r=-1, beta=beta, n=n),
            ClassInvariants(n_table=request.n_table, rank_table=request.source),
            k,
            StabilityParam(k=Fraction(0)),
            model,
        )
