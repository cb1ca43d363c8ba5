"""Stability service: the mu-limit comparator, walls and dominance."""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from app.core.shared.exceptions import DomainError
from app.core.utils.logger import get_logger
from app.features.cone.domain.entities.cone_model import ConeModel
from app.features.cone.domain.services.cone_service import ConeService
from app.features.cone.domain.value_objects.num_class import NumClass
from app.features.stability.domain.value_objects.phase_order import PhaseOrder
from app.features.stability.domain.value_objects.stability_param import StabilityParam
from app.features.stability.domain.value_objects.wall_set import WallSet

logger = get_logger(__name__)


class StabilityService:
    """Domain service for the weak stability Z_{mu_sigma}, sigma = k omega + i omega."""

    def __init__(self, cone_service: ConeService):
        self.cone_service = cone_service

    def compare(
        self, v: NumClass, w: NumClass, k: StabilityParam, model: ConeModel
    ) -> PhaseOrder:
        """Compare Z(v) with Z(w).

        Torsion classes compare by slope, rank -1 classes are all equal, and a
        rank -1 class sits above exactly the torsion classes of slope < -2k.
        """
        if v.is_torsion and w.is_torsion:
            return PhaseOrder.of(
                self.cone_service.torsion_slope(v, model),
                self.cone_service.torsion_slope(w, model),
            )
        if v.is_rank and w.is_rank:
            return PhaseOrder.EQ
        if v.is_rank:
            return PhaseOrder.of(k.rank_threshold, self.cone_service.torsion_slope(w, model))
        return PhaseOrder.of(self.cone_service.torsion_slope(v, model), k.rank_threshold)

    def twisted_slope(self, v: NumClass, k: StabilityParam, model: ConeModel) -> Fraction:
        """mu_sigma(v) = mu(v) - k for a torsion class."""
        return self.cone_service.torsion_slope(v, model) - k.k

    def dual_order(self, order: PhaseOrder, v: NumClass, w: NumClass) -> PhaseOrder:
        """Outcome of compare(v^dual, w^dual, -k) given compare(v, w, k) = order."""
        if v.is_rank and w.is_rank:
            return order
        return order.reversed()

    def walls(self, beta: Sequence[int], model: ConeModel) -> WallSet:
        """The wall set S(beta)."""
        beta = model.check_beta(beta)
        if not any(beta):
            raise DomainError("the wall set is undefined at beta = 0")
        denominators = sorted(
            {
                2 * self.cone_service.deg(sub, model)
                for sub in self.cone_service.effective_classes_below(beta, include_zero=False)
            }
        )
        return WallSet(beta=beta, denominators=tuple(denominators))

    def chamber_of(
        self, k: StabilityParam, beta: Sequence[int], model: ConeModel
    ) -> Tuple[Fraction, Fraction]:
        """Walls of S(beta) bracketing k."""
        return self.walls(beta, model).chamber_of(k.k)

    def check_dominance(
        self,
        k_a: StabilityParam,
        k_b: StabilityParam,
        classes: Iterable[NumClass],
        model: ConeModel,
    ) -> bool:
        """True iff Z_a(v1) >= Z_a(v2) implies Z_b(v1) >= Z_b(v2) on the given classes."""
        return self.find_dominance_violation(k_a, k_b, classes, model) is None

    def find_dominance_violation(
        self,
        k_a: StabilityParam,
        k_b: StabilityParam,
        classes: Iterable[NumClass],
        model: ConeModel,
    ) -> Optional[Tuple[NumClass, NumClass]]:
        """First ordered pair breaking dominance, or None."""
        pool = sorted(set(classes))
        for v in pool:
            for w in pool:
                if self.compare(v, w, k_a, model).is_ge and not self.compare(
                    v, w, k_b, model
                ).is_ge:
                    logger.debug("dominance violated", v=str(v), w=str(w))
                    return v, w
        return None

    def relevant_classes(
        self, beta: Sequence[int], k: StabilityParam, model: ConeModel, n_span: int
    ) -> List[NumClass]:
        """Rank -1 classes (-1, beta', n) with beta' <= beta, |n| <= n_span, and all parts of their decompositions at k."""
        pool = set()
        for sub in self.cone_service.effective_classes_below(beta):
            for n in range(-n_span, n_span + 1):
                if not NumClass.is_valid(-1, sub, n):
                    continue
                v = NumClass(r=-1, beta=sub, n=n)
                pool.add(v)
                for parts in self.cone_service.decompositions(v, k, model):
                    pool.update(parts)
        return sorted(pool)
