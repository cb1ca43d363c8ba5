"""Use case computing S or U for a supplied tuple of classes."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Sequence

from app.core.utils.logger import get_logger
from app.core.utils.validators import format_rational
from app.features.coeff.domain.services.coefficient_service import CoefficientService
from app.features.cone.domain.entities.cone_model import ConeModel
from app.features.cone.domain.value_objects.num_class import NumClass
from app.features.stability.domain.value_objects.stability_param import StabilityParam

logger = get_logger(__name__)


class CoefficientKind(str, Enum):
    """Which transformation coefficient to compute."""
    S = "s"
    U = "u"


@dataclass
class ComputeCoefficientRequest:
    """Request for a single S or U coefficient."""
    model: ConeModel
    classes: Sequence[NumClass]
    k_z: StabilityParam
    k_z_prime: StabilityParam
    kind: CoefficientKind = CoefficientKind.U


@dataclass(frozen=True)
class CoefficientResult:
    """A coefficient together with the inputs it was computed for."""

    kind: CoefficientKind
    classes: Sequence[NumClass]
    k_z: StabilityParam
    k_z_prime: StabilityParam
    value: Fraction

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "kind": self.kind.value,
            "classes": [c.to_list() for c in self.classes],
            "k": self.k_z.to_str(),
            "k_prime": self.k_z_prime.to_str(),
            "value": format_rational(self.value),
        }


class ComputeCoefficientUseCase:
    """Use case for S({v_i}, Z, Z') and U({v_i}, Z, Z')."""

    def __init__(self, coefficient_service: CoefficientService):
        self.coefficient_service = coefficient_service

    def execute(self, request: ComputeCoefficientRequest) -> CoefficientResult:
        """Execute the coefficient computation."""
        classes = tuple(request.classes)
        if request.kind is CoefficientKind.S:
            value = Fraction(
                self.coefficient_service.s_coeff(classes, request.k_z, request.k_z_prime, request.model)
            )
        else:
            value = self.coefficient_service.u_coeff(classes, request.k_z, request.k_z_prime, request.model)
        logger.info("coefficient computed", kind=request.kind.value, length=len(classes), value=str(value))
        return CoefficientResult(
            kind=request.kind,
            classes=classes,
            k_z=request.k_z,
            k_z_prime=request.k_z_prime,
            value=value,
        )
