"""Invariant table entity holding exact N, L or P values."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from app.core.shared.exceptions import DomainError, MissingEntryError, ValidationError
from app.core.utils.validators import format_rational
from app.features.cone.domain.entities.cone_model import Beta, ConeModel


class TableKind(str, Enum):
    """Kinds of invariant tables."""
    N = "N"
    L = "L"
    P = "P"


@dataclass
class InvariantTable:
    """Exact-rational assignment (n, beta) -> value.

    N tables are periodic in n with period d = omega . beta and store one
    period per beta. L and P tables store an explicit window per beta.
    """

    kind: TableKind
    values: Dict[Beta, Dict[int, Fraction]]
    periods: Dict[Beta, int] = field(default_factory=dict)
    windows: Dict[Beta, Tuple[int, int]] = field(default_factory=dict)
    floors: Dict[Beta, int] = field(default_factory=dict)
    finite_support: bool = True
    l00: Fraction = Fraction(1)
    strict: bool = True

    def __post_init__(self):
        """Validate table invariants after initialization."""
        if self.kind is TableKind.N:
            self._validate_periodic()
        else:
            self._validate_windowed()

    @classmethod
    def n_table(
        cls,
        model: ConeModel,
        values: Mapping[Sequence[int], Mapping[int, Any]],
        strict: bool = True,
    ) -> "InvariantTable":
        """Build an N table from values on one period; n is reduced mod d."""
        stored: Dict[Beta, Dict[int, Fraction]] = {}
        periods: Dict[Beta, int] = {}
        for beta, row in values.items():
            beta = model.check_beta(beta)
            if not any(beta):
                raise DomainError("N is undefined at beta = 0")
            d = sum(w * b for w, b in zip(model.omega, beta))
            periods[beta] = d
            reduced: Dict[int, Fraction] = {}
            for n, value in row.items():
                j = int(n) % d
                value = Fraction(value)
                if j in reduced and reduced[j] != value:
                    raise ValidationError(
                        f"N at beta={list(beta)} is not periodic: residue {j} has two values"
                    )
                reduced[j] = value
            stored[beta] = {j: reduced.get(j, Fraction(0)) for j in range(d)}
        return cls(kind=TableKind.N, values=stored, periods=periods, strict=strict)

    @classmethod
    def p_table(
        cls,
        model: ConeModel,
        values: Mapping[Sequence[int], Mapping[int, Any]],
        windows: Optional[Mapping[Sequence[int], Tuple[int, int]]] = None,
    ) -> "InvariantTable":
        """Build a P table; it vanishes below N(beta)."""
        stored, bounds = _windowed(model, values, windows)
        floors = {beta: model.n_floor(beta) for beta in stored}
        return cls(kind=TableKind.P, values=stored, windows=bounds, floors=floors)

    @classmethod
    def l_table(
        cls,
        model: ConeModel,
        values: Mapping[Sequence[int], Mapping[int, Any]],
        windows: Optional[Mapping[Sequence[int], Tuple[int, int]]] = None,
        finite_support: bool = True,
        l00: Any = 1,
    ) -> "InvariantTable":
        """Build an L table; outside its window it is 0 when finitely supported."""
        stored, bounds = _windowed(model, values, windows)
        return cls(
            kind=TableKind.L,
            values=stored,
            windows=bounds,
            finite_support=finite_support,
            l00=Fraction(l00),
        )

    def betas(self) -> List[Beta]:
        return sorted(self.values)

    def has(self, beta: Sequence[int]) -> bool:
        return tuple(beta) in self.values

    def value(self, n: int, beta: Sequence[int]) -> Fraction:
        """Look up the value at (n, beta)."""
        beta = tuple(beta)
        if not any(beta):
            return self._zero_row(n)
        row = self.values.get(beta)
        if row is None:
            raise MissingEntryError(self.kind.value, n, beta, "beta not in table")
        if self.kind is TableKind.N:
            return row[n % self.periods[beta]]

        lo, hi = self.windows[beta]
        if self.kind is TableKind.P and n < self.floors[beta]:
            return Fraction(0)
        if lo <= n <= hi:
            return row.get(n, Fraction(0))
        if self.kind is TableKind.L and self.finite_support:
            return Fraction(0)
        raise MissingEntryError(self.kind.value, n, beta, f"outside stored window [{lo}, {hi}]")

    def is_symmetric(self, beta: Sequence[int]) -> bool:
        """N: residues j and d - j agree. L/P: values at n and -n agree on the window."""
        beta = tuple(beta)
        row = self.values[beta]
        if self.kind is TableKind.N:
            d = self.periods[beta]
            return all(row[j] == row[(d - j) % d] for j in range(d))
        lo, hi = self.windows[beta]
        reach = min(-lo, hi)
        return all(self.value(n, beta) == self.value(-n, beta) for n in range(-reach, reach + 1))

    def entries(self) -> Iterator[Tuple[Beta, int, Fraction]]:
        """Stored entries in deterministic order, for CSV/JSON emission."""
        for beta in self.betas():
            row = self.values[beta]
            if self.kind is TableKind.N:
                keys = range(self.periods[beta])
            else:
                lo, hi = self.windows[beta]
                keys = range(lo, hi + 1)
            for n in keys:
                yield beta, n, row.get(n, Fraction(0))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        rows = [
            {"beta": list(beta), "n": n, "value": format_rational(value)}
            for beta, n, value in self.entries()
        ]
        return {"kind": self.kind.value, "entries": rows}

    def _zero_row(self, n: int) -> Fraction:
        if self.kind is TableKind.N:
            raise DomainError("N is undefined at beta = 0")
        if n != 0:
            return Fraction(0)
        return Fraction(1) if self.kind is TableKind.P else self.l00

    def _validate_periodic(self) -> None:
        for beta, row in self.values.items():
            d = self.periods.get(beta)
            if not d or sorted(row) != list(range(d)):
                raise ValidationError(f"N at beta={list(beta)} must store exactly one period")
            if self.strict and not self.is_symmetric(beta):
                raise ValidationError(f"N at beta={list(beta)} is not symmetric under n -> -n")

    def _validate_windowed(self) -> None:
        for beta, row in self.values.items():
            if beta not in self.windows:
                raise ValidationError(f"{self.kind.value} at beta={list(beta)} has no window")
            lo, hi = self.windows[beta]
            if any(n < lo or n > hi for n in row):
                raise ValidationError(
                    f"{self.kind.value} at beta={list(beta)} stores values outside [{lo}, {hi}]"
                )
            if self.kind is TableKind.P:
                floor = self.floors[beta]
                low = [n for n, value in row.items() if n < floor and value]
                if low:
                    raise ValidationError(
                        f"P at beta={list(beta)} is nonzero at n={min(low)} < N(beta)={floor}"
                    )


def _windowed(
    model: ConeModel,
    values: Mapping[Sequence[int], Mapping[int, Any]],
    windows: Optional[Mapping[Sequence[int], Tuple[int, int]]],
) -> Tuple[Dict[Beta, Dict[int, Fraction]], Dict[Beta, Tuple[int, int]]]:
    explicit = {tuple(b): (int(w[0]), int(w[1])) for b, w in (windows or {}).items()}
    stored: Dict[Beta, Dict[int, Fraction]] = {}
    bounds: Dict[Beta, Tuple[int, int]] = {}
    for beta, row in values.items():
        beta = model.check_beta(beta)
        if not any(beta):
            continue
        stored[beta] = {int(n): Fraction(v) for n, v in row.items()}
        if beta in explicit:
            bounds[beta] = explicit[beta]
        elif stored[beta]:
            bounds[beta] = (min(stored[beta]), max(stored[beta]))
        else:
            bounds[beta] = (0, -1)
    for beta, window in explicit.items():
        if beta not in stored and any(beta):
            stored[beta] = {}
            bounds[beta] = window
    return stored, bounds
