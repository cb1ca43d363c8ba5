"""Use case building the P series from L and N."""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from app.core.shared.exceptions import ConfigurationError
from app.core.utils.logger import get_logger
from app.features.cone.domain.entities.cone_model import ConeModel
from app.features.integrate.domain.entities.invariant_table import InvariantTable
from app.features.series.domain.services.series_service import SeriesService
from app.features.series.domain.value_objects.cone_series import ConeSeries, SeriesMode

logger = get_logger(__name__)


@dataclass
class BuildSeriesRequest:
    """Request for (sum L_beta v^beta) exp(sum N'_beta v^beta)."""
    model: ConeModel
    l_table: InvariantTable
    n_table: InvariantTable
    beta_cutoff: Sequence[int]
    mode: SeriesMode = SeriesMode.WINDOW
    q_window: Optional[Tuple[int, int]] = None


class BuildSeriesUseCase:
    """Use case for the generating series P = L exp(N')."""

    def __init__(self, series_service: SeriesService):
        self.series_service = series_service

    def execute(self, request: BuildSeriesRequest) -> ConeSeries:
        """Execute the series build."""
        if request.mode is SeriesMode.WINDOW and request.q_window is None:
            raise ConfigurationError("window mode needs a q-window", field="cutoffs.q_window")
        l_series = self.series_service.table_series(
            request.l_table, request.model, request.beta_cutoff, request.mode
        )
        window = request.q_window if request.mode is SeriesMode.WINDOW else None
        result = self.series_service.expan_build(l_series, request.n_table, request.model, window)
        logger.info(
            "series built",
            mode=request.mode.value,
            cutoff=list(result.cutoff),
            terms=len(result.coeffs),
        )
        return result
