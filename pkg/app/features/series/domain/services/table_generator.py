"""Generators for admissible (L, N) table pairs used by roundtrips and self-tests."""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from app.features.cone.domain.entities.cone_model import Beta, ConeModel, classes_in_box
from app.features.integrate.domain.entities.invariant_table import InvariantTable


@dataclass(frozen=True)
class TablePair:
    """A cone model with L and N tables on a cutoff."""

    model: ConeModel
    l_table: InvariantTable
    n_table: InvariantTable
    beta_cutoff: Beta


class TableGenerator:
    """Builds deterministic random table pairs from a seed."""

    SUPPORT = 3

    def __init__(self, seed: int):
        self.rng = random.Random(seed)

    def random_pair(
        self,
        rank: Optional[int] = None,
        cutoff: Optional[Beta] = None,
        omega: Optional[Beta] = None,
    ) -> TablePair:
        """Symmetric L with support |n| <= 3 and symmetric-periodic N, rank <= 2, cutoff <= (2, 2).

        A fixed cutoff or omega pins the rank to its length.
        """
        fixed = cutoff or omega
        rank = len(fixed) if fixed else rank or self.rng.choice([1, 2])
        omega = tuple(omega) if omega else tuple(self.rng.randint(1, 2) for _ in range(rank))
        if cutoff is not None:
            cutoff = tuple(cutoff)
        elif rank == 1:
            cutoff = (self.rng.randint(1, 3),)
        else:
            cutoff = tuple(self.rng.randint(1, 2) for _ in range(rank))
        box = classes_in_box(cutoff)
        floor = -self.SUPPORT
        model = ConeModel.create(
            omega=omega,
            beta_bound=cutoff,
            m_table={beta: floor for beta in box if any(beta)},
            n_floor_table={beta: floor for beta in box if any(beta)},
        )

        l_values: Dict[Beta, Dict[int, Fraction]] = {}
        n_values: Dict[Beta, Dict[int, Fraction]] = {}
        for beta in box:
            if not any(beta):
                continue
            row = {}
            for n in range(0, self.SUPPORT + 1):
                value = self._rational()
                row[n] = row[-n] = value
            l_values[beta] = row
            d = sum(w * b for w, b in zip(omega, beta))
            period = {}
            for j in range(d // 2 + 1):
                period[j] = period[(d - j) % d] = self._rational()
            n_values[beta] = period

        windows = {beta: (-self.SUPPORT, self.SUPPORT) for beta in l_values}
        return TablePair(
            model=model,
            l_table=InvariantTable.l_table(model, l_values, windows=windows),
            n_table=InvariantTable.n_table(model, n_values),
            beta_cutoff=cutoff,
        )

    def _rational(self) -> Fraction:
        return Fraction(self.rng.randint(-3, 3), self.rng.randint(1, 2))


def micro_model(a, c, window: Tuple[int, int]) -> Tuple[ConeModel, InvariantTable, InvariantTable]:
    """d = 1, N = a, P_{n,(1)} = a n + c [n = 0] for n >= 0; L is then c [n = 0]."""
    a, c = Fraction(a), Fraction(c)
    lo, hi = window
    model = ConeModel.create(omega=(1,), beta_bound=(1,))
    p_values = {n: a * n + (c if n == 0 else 0) for n in range(0, hi + 1)}
    p_table = InvariantTable.p_table(model, {(1,): p_values}, windows={(1,): (min(lo, 0), hi)})
    n_table = InvariantTable.n_table(model, {(1,): {0: a}})
    return model, p_table, n_table


def asymmetric_pair() -> TablePair:
    """d = 3 with N_1 != N_2: q <-> 1/q symmetry must fail downstream."""
    model = ConeModel.create(
        omega=(3,),
        beta_bound=(1,),
        m_table={(1,): -1},
        n_floor_table={(1,): -1},
    )
    return TablePair(
        model=model,
        l_table=InvariantTable.l_table(model, {(1,): {-1: 1, 0: 2, 1: 1}}, windows={(1,): (-1, 1)}),
        n_table=InvariantTable.n_table(model, {(1,): {0: 1, 1: 1, 2: 0}}, strict=False),
        beta_cutoff=(1,),
    )
