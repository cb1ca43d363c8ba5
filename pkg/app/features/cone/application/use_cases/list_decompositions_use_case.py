"""Use case listing the ordered decompositions of a rank -1 class."""

from dataclasses import dataclass
from typing import Any, Dict, List

from app.core.utils.logger import get_logger
from app.features.cone.domain.entities.cone_model import ConeModel
from app.features.cone.domain.services.cone_service import ConeService, Decomposition
from app.features.cone.domain.value_objects.num_class import NumClass
from app.features.stability.domain.value_objects.stability_param import StabilityParam

logger = get_logger(__name__)


@dataclass
class ListDecompositionsRequest:
    """Request for the decompositions of v at k."""
    model: ConeModel
    v: NumClass
    k: StabilityParam


@dataclass(frozen=True)
class DecompositionListing:
    """Decompositions of a class in emission order."""

    v: NumClass
    k: StabilityParam
    tuples: List[Decomposition]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "v": self.v.to_list(),
            "k": self.k.to_str(),
            "count": len(self.tuples),
            "decompositions": [[part.to_list() for part in parts] for parts in self.tuples],
        }


class ListDecompositionsUseCase:
    """Use case for enumerating the finite decomposition set of a rank -1 class."""

    def __init__(self, cone_service: ConeService):
        self.cone_service = cone_service

    def execute(self, request: ListDecompositionsRequest) -> DecompositionListing:
        """Execute the enumeration."""
        tuples = self.cone_service.decompositions(request.v, request.k, request.model)
        logger.info("decompositions listed", v=request.v.label(), k=request.k.to_str(), count=len(tuples))
        return DecompositionListing(v=request.v, k=request.k, tuples=tuples)
