"""Run configuration schemas."""

import json
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, model_validator
from pydantic import ValidationError as PydanticValidationError

from app.core.shared.exceptions import ConfigurationError, ValidationError
from app.core.utils.validators import parse_rational


def _rational(value: Any) -> Fraction:
    try:
        return parse_rational(value)
    except ValidationError as exc:
        raise ValueError(exc.message) from exc


Rational = Annotated[Fraction, BeforeValidator(_rational)]
ClassList = Tuple[int, List[int], int]


class ConfigModel(BaseModel):
    """Base for config sections: strict about unknown fields, exact about rationals."""
    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)


class BetaValueSchema(ConfigModel):
    """One (beta, integer) pair of an m or N(beta) table."""
    beta: List[int]
    value: int


class ConeModelSchema(ConfigModel):
    """Schema for the toy cone geometry."""
    omega: List[int] = Field(..., min_length=1, description="Degree weights, one per cone generator")
    beta_bound: List[int] = Field(..., min_length=1, description="Largest class the tables cover")
    m_table: List[BetaValueSchema] = Field(default_factory=list)
    n_floor_table: List[BetaValueSchema] = Field(default_factory=list)
    m_default: int = Field(0, description="m(beta) for classes not listed")
    n_floor_default: int = Field(0, description="N(beta) for classes not listed")

    @model_validator(mode="after")
    def check_rank(self) -> "ConeModelSchema":
        if len(self.omega) != len(self.beta_bound):
            raise ValueError("omega and beta_bound must have the same length")
        return self


class StabilitySchema(ConfigModel):
    """Schema for the stability parameters."""
    k: Rational = Field(Fraction(-1), description="k of Z")
    k_prime: Rational = Field(Fraction(-1, 2), description="k of Z'")
    probes: List[Rational] = Field(default_factory=list, description="Values of k located by `walls`")


class CutoffsSchema(ConfigModel):
    """Schema for truncation data."""
    beta_cutoff: List[int] = Field(..., min_length=1)
    q_window: Tuple[int, int] = Field((-6, 6))
    n_range: Optional[Tuple[int, int]] = Field(None, description="n-range of `transform`, defaults to q_window")
    v_max: Optional[List[int]] = Field(None, description="Hall truncation beta, defaults to the class of `hall.v`")
    max_word_length: Optional[int] = Field(None, ge=1)

    @model_validator(mode="after")
    def check_windows(self) -> "CutoffsSchema":
        for name in ("q_window", "n_range"):
            window = getattr(self, name)
            if window is not None and window[0] > window[1]:
                raise ValueError(f"{name}: lower end exceeds upper end")
        return self


class TableEntrySchema(ConfigModel):
    """Values of one table row, keyed by n."""
    beta: List[int]
    values: Dict[int, Rational] = Field(default_factory=dict)
    window: Optional[Tuple[int, int]] = None


class TablesSchema(ConfigModel):
    """Schema for the input invariant tables."""
    N: List[TableEntrySchema] = Field(default_factory=list)
    P: List[TableEntrySchema] = Field(default_factory=list)
    L: List[TableEntrySchema] = Field(default_factory=list)
    l00: Rational = Field(Fraction(1), description="L_{0,0}, the invariant of the shifted structure sheaf")
    n_strict: bool = Field(True, description="Reject N tables that are not symmetric")
    l_finite_support: bool = True


class CoeffOptionsSchema(ConfigModel):
    classes: List[ClassList] = Field(..., min_length=1)


class DecompOptionsSchema(ConfigModel):
    v: ClassList


class WallsOptionsSchema(ConfigModel):
    beta: List[int]
    dominance_span: int = Field(4, ge=0)


class HallOptionsSchema(ConfigModel):
    seeds: List[ClassList] = Field(..., min_length=1)
    v: ClassList


class TransformOptionsSchema(ConfigModel):
    method: Literal["wallcross", "from_pn", "tree"] = "from_pn"
    source: Literal["P", "L"] = "P"
    use_k: bool = Field(False, description="Use stability.k for every entry instead of an admissible k")


class VerifyOptionsSchema(ConfigModel):
    expect_symmetric: bool = True
    explicit_chains: bool = False


class RunConfig(ConfigModel):
    """The full run configuration."""
    model: ConeModelSchema
    stability: StabilitySchema = Field(default_factory=StabilitySchema)
    cutoffs: CutoffsSchema
    tables: TablesSchema = Field(default_factory=TablesSchema)
    mode: Literal["window", "closed"] = "window"
    coeff: Optional[CoeffOptionsSchema] = None
    decomp: Optional[DecompOptionsSchema] = None
    walls: Optional[WallsOptionsSchema] = None
    hall: Optional[HallOptionsSchema] = None
    transform: TransformOptionsSchema = Field(default_factory=TransformOptionsSchema)
    verify: VerifyOptionsSchema = Field(default_factory=VerifyOptionsSchema)


def _field_path(location: Tuple[Union[int, str], ...]) -> str:
    return ".".join(str(part) for part in location) or "config"


def parse_run_config(data: Any) -> RunConfig:
    """Validate a decoded config document, naming the first offending field."""
    try:
        return RunConfig.model_validate(data)
    except PydanticValidationError as exc:
        error = exc.errors()[0]
        raise ConfigurationError(error["msg"], field=_field_path(error["loc"])) from exc


def load_run_config(path: Union[str, Path]) -> RunConfig:
    """Read and validate a JSON run configuration."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise ConfigurationError(f"no such file {path}", field="config") from exc
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"invalid JSON at line {exc.lineno}: {exc.msg}", field="config") from exc
    return parse_run_config(data)
