"""Mapping from the validated run configuration to domain objects."""

from typing import List, Optional, Sequence

from app.core.shared.config import settings
from app.core.shared.exceptions import ConfigurationError, ValidationError
from app.features.cli.presentation.schemas.run_config import (
    ClassList,
    RunConfig,
    TableEntrySchema,
)
from app.features.cone.domain.entities.cone_model import ConeModel
from app.features.cone.domain.value_objects.num_class import NumClass
from app.features.hall.domain.value_objects.generator_set import GeneratorSet
from app.features.integrate.domain.entities.invariant_table import InvariantTable
from app.features.series.domain.value_objects.cone_series import SeriesMode
from app.features.stability.domain.value_objects.stability_param import StabilityParam


class ConfigMapper:
    """Builds the cone model, tables and parameters a command needs."""

    def __init__(self, config: RunConfig):
        self.config = config
        self._model: Optional[ConeModel] = None

    @property
    def model(self) -> ConeModel:
        if self._model is None:
            schema = self.config.model
            self._model = ConeModel.create(
                omega=schema.omega,
                beta_bound=schema.beta_bound,
                m_table={tuple(e.beta): e.value for e in schema.m_table},
                n_floor_table={tuple(e.beta): e.value for e in schema.n_floor_table},
                m_default=schema.m_default,
                n_floor_default=schema.n_floor_default,
            )
        return self._model

    @property
    def k(self) -> StabilityParam:
        return StabilityParam(k=self.config.stability.k)

    @property
    def k_prime(self) -> StabilityParam:
        return StabilityParam(k=self.config.stability.k_prime)

    @property
    def beta_cutoff(self):
        return self.model.check_beta(self.config.cutoffs.beta_cutoff, "cutoffs.beta_cutoff")

    @property
    def q_window(self):
        return tuple(self.config.cutoffs.q_window)

    @property
    def n_range(self):
        return tuple(self.config.cutoffs.n_range or self.config.cutoffs.q_window)

    @property
    def mode(self) -> SeriesMode:
        return SeriesMode(self.config.mode)

    def n_table(self) -> InvariantTable:
        entries = self._require(self.config.tables.N, "tables.N")
        return self._guard(
            "tables.N",
            lambda: InvariantTable.n_table(
                self.model,
                {tuple(e.beta): e.values for e in entries},
                strict=self.config.tables.n_strict,
            ),
        )

    def p_table(self) -> InvariantTable:
        entries = self._require(self.config.tables.P, "tables.P")
        return self._guard(
            "tables.P",
            lambda: InvariantTable.p_table(self.model, _values(entries), _windows(entries)),
        )

    def l_table(self) -> InvariantTable:
        entries = self._require(self.config.tables.L, "tables.L")
        return self._guard(
            "tables.L",
            lambda: InvariantTable.l_table(
                self.model,
                _values(entries),
                _windows(entries),
                finite_support=self.config.tables.l_finite_support,
                l00=self.config.tables.l00,
            ),
        )

    def num_class(self, data: ClassList, field: str) -> NumClass:
        return self._guard(field, lambda: self._checked(NumClass.from_list(data), field))

    def classes(self, data: Sequence[ClassList], field: str) -> List[NumClass]:
        return [self.num_class(item, f"{field}.{i}") for i, item in enumerate(data)]

    def generators(self) -> GeneratorSet:
        hall = self.config.hall
        if hall is None:
            raise ConfigurationError("section is required for this command", field="hall")
        v = self.num_class(hall.v, "hall.v")
        v_max_beta = self.config.cutoffs.v_max or list(v.beta)
        v_max = self.num_class([-1, v_max_beta, 0], "cutoffs.v_max")
        word_length = self.config.cutoffs.max_word_length or settings.max_word_length
        seeds = self.classes(hall.seeds, "hall.seeds")
        return self._guard(
            "hall.seeds",
            lambda: GeneratorSet.create(seeds, v_max=v_max, max_word_length=word_length),
        )

    def _checked(self, v: NumClass, field: str) -> NumClass:
        self.model.check_beta(v.beta, field)
        return v

    @staticmethod
    def _require(entries, field: str):
        if not entries:
            raise ConfigurationError("table is required for this command", field=field)
        return entries

    @staticmethod
    def _guard(field: str, build):
        try:
            return build()
        except ConfigurationError:
            raise
        except ValidationError as exc:
            raise ConfigurationError(exc.message, field=field) from exc


def _values(entries: Sequence[TableEntrySchema]):
    return {tuple(e.beta): e.values for e in entries}


def _windows(entries: Sequence[TableEntrySchema]):
    return {tuple(e.beta): tuple(e.window) for e in entries if e.window is not None}
