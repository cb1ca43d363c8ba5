"""Lookup of the numerical invariant J^v attached to a class."""

from dataclasses import dataclass
from fractions import Fraction

from app.features.cone.domain.value_objects.num_class import NumClass
from app.features.integrate.domain.entities.invariant_table import InvariantTable


@dataclass(frozen=True)
class ClassInvariants:
    """J^v: torsion classes read N, rank -1 classes read L(sigma)."""

    n_table: InvariantTable
    rank_table: InvariantTable

    def value(self, v: NumClass) -> Fraction:
        if v.is_torsion:
            return self.n_table.value(v.n, v.beta)
        return self.rank_table.value(v.n, v.beta)
