"""Cone model entity: the toy geometry every enumeration runs on."""

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from app.core.shared.exceptions import ConfigurationError

Beta = Tuple[int, ...]


def classes_in_box(bound: Sequence[int]) -> List[Beta]:
    """All effective classes 0 <= beta <= bound, in lexicographic order."""
    return [tuple(c) for c in product(*(range(b + 1) for b in bound))]


@dataclass
class ConeModel:
    """Rank-rho effective cone with degree weights omega, m(beta) and N(beta) tables.

    The effective cone is the full nonnegative orthant. ``beta_bound`` is the
    largest class the tables are required to cover.
    """

    rank: int
    omega: Tuple[int, ...]
    beta_bound: Beta
    m_table: Dict[Beta, int] = field(default_factory=dict)
    n_floor_table: Dict[Beta, int] = field(default_factory=dict)

    def __post_init__(self):
        """Validate model invariants after initialization."""
        self.omega = tuple(self.omega)
        self.beta_bound = tuple(self.beta_bound)
        if self.rank < 1:
            raise ConfigurationError("cone rank must be positive", field="model.rank")
        if len(self.omega) != self.rank:
            raise ConfigurationError(
                f"expected {self.rank} weights, got {len(self.omega)}", field="model.omega"
            )
        if any(w <= 0 for w in self.omega):
            raise ConfigurationError("all weights must be strictly positive", field="model.omega")
        if len(self.beta_bound) != self.rank or any(b < 0 for b in self.beta_bound):
            raise ConfigurationError("bound must be an effective class", field="model.beta_bound")

        zero = self.zero
        if self.m_table.get(zero, 0) != 0:
            raise ConfigurationError("m(0) must be 0", field="model.m_table")
        self.m_table[zero] = 0
        missing = [beta for beta in classes_in_box(self.beta_bound) if beta not in self.m_table]
        if missing:
            raise ConfigurationError(
                f"m is undefined at {[list(b) for b in missing]}", field="model.m_table"
            )

    @classmethod
    def create(
        cls,
        omega: Sequence[int],
        beta_bound: Sequence[int],
        m_table: Optional[Mapping[Sequence[int], int]] = None,
        n_floor_table: Optional[Mapping[Sequence[int], int]] = None,
        m_default: int = 0,
        n_floor_default: int = 0,
    ) -> "ConeModel":
        """Create a model, filling unspecified table entries with defaults."""
        bound = tuple(beta_bound)
        m_values = {tuple(k): int(v) for k, v in (m_table or {}).items()}
        floors = {tuple(k): int(v) for k, v in (n_floor_table or {}).items()}
        for beta in classes_in_box(bound):
            if any(beta):
                m_values.setdefault(beta, m_default)
                floors.setdefault(beta, n_floor_default)
        return cls(
            rank=len(bound),
            omega=tuple(omega),
            beta_bound=bound,
            m_table=m_values,
            n_floor_table=floors,
        )

    @property
    def zero(self) -> Beta:
        return (0,) * self.rank

    def check_beta(self, beta: Sequence[int], name: str = "beta") -> Beta:
        """Validate the dimension and effectivity of a curve class."""
        if len(beta) != self.rank:
            raise ConfigurationError(
                f"expected {self.rank} components, got {len(beta)}", field=name
            )
        if any(b < 0 for b in beta):
            raise ConfigurationError(f"{list(beta)} is not effective", field=name)
        return tuple(beta)

    def within_bound(self, beta: Sequence[int]) -> bool:
        """Check if beta <= beta_bound componentwise."""
        return all(b <= c for b, c in zip(beta, self.beta_bound))

    def m(self, beta: Sequence[int]) -> int:
        """Look up m(beta)."""
        key = tuple(beta)
        if key not in self.m_table:
            raise ConfigurationError(f"m is undefined at {list(key)}", field="model.m_table")
        return self.m_table[key]

    def n_floor(self, beta: Sequence[int]) -> int:
        """Look up N(beta), the vanishing bound of P; N(0) = 0."""
        key = tuple(beta)
        if not any(key):
            return 0
        if key not in self.n_floor_table:
            raise ConfigurationError(
                f"N(beta) is undefined at {list(key)}", field="model.n_floor_table"
            )
        return self.n_floor_table[key]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "rank": self.rank,
            "omega": list(self.omega),
            "beta_bound": list(self.beta_bound),
            "m_table": [
                {"beta": list(b), "value": v} for b, v in sorted(self.m_table.items())
            ],
            "n_floor_table": [
                {"beta": list(b), "value": v} for b, v in sorted(self.n_floor_table.items())
            ],
        }
