"""Wall-crossing service: tree sums and the L / P relations for rank -1 classes."""

import math
from fractions import Fraction
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from app.core.utils.logger import get_logger
from app.features.coeff.domain.services.coefficient_service import CoefficientService
from app.features.cone.domain.entities.cone_model import Beta, ConeModel, classes_in_box
from app.features.cone.domain.services.cone_service import ConeService
from app.features.cone.domain.value_objects.num_class import NumClass
from app.features.integrate.domain.entities.invariant_table import InvariantTable
from app.features.integrate.domain.services.tree_service import TreeService
from app.features.integrate.domain.value_objects.class_invariants import ClassInvariants
from app.features.integrate.domain.value_objects.lie_element import LieElement
from app.features.stability.domain.value_objects.stability_param import StabilityParam

logger = get_logger(__name__)

HALF = Fraction(-1, 2)

Graded = Dict[Tuple[Beta, int], Fraction]
TorsionPart = Tuple[Beta, int, Fraction]


class WallCrossingService:
    """Domain service integrating Hall identities into numerical invariants."""

    def __init__(
        self,
        cone_service: ConeService,
        coefficient_service: CoefficientService,
        tree_service: TreeService,
    ):
        self.cone_service = cone_service
        self.coefficient_service = coefficient_service
        self.tree_service = tree_service

    def bracket(self, a: LieElement, b: LieElement) -> LieElement:
        """[a, b] with the Euler pairing of the cone."""
        return a.bracket(b, self.cone_service.euler_pairing)

    def j_transform(
        self,
        v: NumClass,
        invariants: ClassInvariants,
        k_z: StabilityParam,
        k_z_prime: StabilityParam,
        model: ConeModel,
    ) -> Fraction:
        """J^v(Z') as a sum over decompositions and labeled trees.

        Each term is U / 2^{l-1} * prod over edges i -> j of chi(v_i, v_j) * prod J^{v_i}.
        Torsion parts range over slopes between 0, -2k_Z and -2k_Z'; U vanishes outside.
        """
        if v.is_torsion:
            return invariants.value(v)
        bounds = (Fraction(0), k_z.rank_threshold, k_z_prime.rank_threshold)

        pairing = self.cone_service.euler_pairing
        total = Fraction(0)
        for parts in self.cone_service.decompositions_in_window(v, min(bounds), max(bounds), model):
            l = len(parts)
            tree_sum = 0
            for edges in self.tree_service.labeled_trees(l):
                weight = 1
                for i, j in edges:
                    weight *= pairing(parts[i - 1], parts[j - 1])
                    if not weight:
                        break
                tree_sum += weight
            if not tree_sum:
                continue
            u = self.coefficient_service.u_coeff(parts, k_z, k_z_prime, model)
            if not u:
                continue
            product = Fraction(tree_sum) * u / 2 ** (l - 1)
            for part in parts:
                product *= invariants.value(part)
            total += product
        return total

    def l_wallcross(
        self,
        n: int,
        beta: Sequence[int],
        k: StabilityParam,
        l_sigma: InvariantTable,
        n_table: InvariantTable,
        model: ConeModel,
    ) -> Fraction:
        """L_{n,beta} at k' = 0 from L(sigma_k) and N via the star-graph formula."""
        beta = model.check_beta(beta)
        v = NumClass(r=-1, beta=beta, n=n)
        total = Fraction(0)
        for parts in self.cone_service.decompositions(v, k, model):
            torsion = [p for p in parts if p.is_torsion]
            if any(p.n == 0 for p in torsion):
                continue
            u3 = self.coefficient_service.u3_coeff(parts, k, model)
            if not u3:
                continue
            e = next(i for i, p in enumerate(parts) if p.is_rank)
            sign = -1 if e % 2 else 1
            term = HALF ** (len(parts) - 1) * sign * u3
            for p in torsion:
                term *= p.n * n_table.value(p.n, p.beta)
            rank = parts[e]
            total += term * l_sigma.value(rank.n, rank.beta)
        return total

    def l_from_pn(
        self,
        n: int,
        beta: Sequence[int],
        p_table: InvariantTable,
        n_table: InvariantTable,
        model: ConeModel,
        surjection_runs: bool = False,
    ) -> Fraction:
        """L_{n,beta} from P and N by the k-free chain formula.

        Torsion parts left of the rank -1 entry ascend in slope and those on the
        right descend; each maximal equal-slope run of length a weighs 1/a!.
        With ``surjection_runs`` the left run weights are evaluated as the sum
        over monotone surjections instead.
        """
        beta = model.check_beta(beta)
        if not any(beta):
            return p_table.value(n, beta)

        n_max = n - min(model.n_floor(b) for b in classes_in_box(beta))
        parts = self._torsion_parts(beta, n_max, n_table, model)
        left_chains = list(self._chains(parts, beta, n_max, model, ascending=True))
        right_chains = list(self._chains(parts, beta, n_max, model, ascending=False))

        total = Fraction(0)
        for left in left_chains:
            for right in right_chains:
                beta_e = tuple(
                    b - sum(p[0][i] for p in left) - sum(p[0][i] for p in right)
                    for i, b in enumerate(beta)
                )
                if any(b < 0 for b in beta_e):
                    continue
                n_e = n - sum(p[1] for p in left) - sum(p[1] for p in right)
                if n_e < model.n_floor(beta_e):
                    continue
                weight = HALF ** (len(left) + len(right))
                weight *= self._run_weight(left, model, surjection_runs)
                weight *= self._run_weight(right, model, False)
                for p in left + right:
                    weight *= p[2]
                total += weight * p_table.value(n_e, beta_e)
        return total

    def l_table_from_pn(
        self,
        p_table: InvariantTable,
        n_table: InvariantTable,
        model: ConeModel,
        beta_cutoff: Sequence[int],
        window: Tuple[int, int],
    ) -> InvariantTable:
        """Whole L table on a q-window, summing the same chains as l_from_pn.

        Each slope mu contributes the run sum R_mu = sum_a (-1/2)^a / a! X_mu^a on
        both sides of the rank -1 part, X_mu being the graded sum of n N_{n,beta}
        over torsion classes of slope mu. Run sums commute, so
        L = exp(-X/2) * P * exp(-X/2).
        """
        cutoff = model.check_beta(beta_cutoff, "beta_cutoff")
        lo, hi = window
        boxes = [b for b in classes_in_box(cutoff) if any(b)]
        bottom = {b: min(model.n_floor(c) for c in classes_in_box(b)) for b in boxes}
        n_max = hi - min(bottom.values(), default=0)

        x = {(sub, n): value for sub, n, value in self._torsion_parts(cutoff, n_max, n_table, model)}
        side = _graded_exp(x, HALF, model.zero, cutoff, n_max)
        both_sides = _graded_mul(side, side, cutoff, n_max)

        values: Dict[Beta, Dict[int, Fraction]] = {}
        windows: Dict[Beta, Tuple[int, int]] = {}
        for beta in boxes:
            start = min(lo, bottom[beta])
            row = {}
            for n in range(start, hi + 1):
                value = Fraction(0)
                for (sub, shift), weight in both_sides.items():
                    if shift > n - bottom[beta] or any(s > b for s, b in zip(sub, beta)):
                        continue
                    rest = tuple(b - s for b, s in zip(beta, sub))
                    value += weight * p_table.value(n - shift, rest)
                if value:
                    row[n] = value
            values[beta] = row
            windows[beta] = (start, hi)
        logger.debug("l_table_from_pn", cutoff=list(cutoff), window=[lo, hi], terms=len(both_sides))
        return InvariantTable.l_table(model, values, windows=windows, l00=p_table.value(0, model.zero))

    def chamber_value(
        self, n: int, beta: Sequence[int], k: StabilityParam, p_table: InvariantTable, model: ConeModel
    ) -> Optional[Fraction]:
        """L_{n,beta}(sigma_k) where it is determined by P alone, else None."""
        beta = model.check_beta(beta)
        if not any(beta):
            return p_table.value(n, beta)
        if k.k < -self.cone_service.mu_n_beta(n, beta, model) / 2:
            return p_table.value(n, beta)
        if k.k > self.cone_service.mu_n_beta(-n, beta, model) / 2:
            return p_table.value(-n, beta)
        return None

    def admissible_k(self, n: int, beta: Sequence[int], model: ConeModel) -> StabilityParam:
        """An integer k < 0 below every bound -(n - N(beta'))/2 and -mu_{n,beta'}/2."""
        beta = model.check_beta(beta)
        bounds = [Fraction(-(n - model.n_floor(sub)), 2) for sub in classes_in_box(beta)]
        bounds += [
            -self.cone_service.mu_n_beta(n, sub, model) / 2
            for sub in classes_in_box(beta)
            if any(sub)
        ]
        return StabilityParam(k=Fraction(min(math.floor(min(bounds)) - 1, -1)))

    def _torsion_parts(
        self, beta: Beta, n_max: int, n_table: InvariantTable, model: ConeModel
    ) -> List[TorsionPart]:
        """Torsion classes (beta', n') with 0 < beta' <= beta, 1 <= n' <= n_max and their n'N weight."""
        parts = []
        for sub in classes_in_box(beta):
            if not any(sub):
                continue
            for n in range(1, n_max + 1):
                value = n * n_table.value(n, sub)
                if value:
                    parts.append((sub, n, value))
        return parts

    def _chains(
        self,
        parts: List[TorsionPart],
        beta: Beta,
        n_max: int,
        model: ConeModel,
        ascending: bool,
    ) -> Iterator[List[TorsionPart]]:
        """Sequences of parts with monotone slopes and bounded total class."""
        slopes = {(sub, n): Fraction(n, self.cone_service.deg(sub, model)) for sub, n, _ in parts}

        def grow(chain, room, n_left, last):
            yield chain
            for part in parts:
                sub, n, _ = part
                if n > n_left or any(s > r for s, r in zip(sub, room)):
                    continue
                slope = slopes[(sub, n)]
                if last is not None and (slope < last if ascending else slope > last):
                    continue
                yield from grow(
                    chain + [part],
                    tuple(r - s for r, s in zip(room, sub)),
                    n_left - n,
                    slope,
                )

        yield from grow([], beta, n_max, None)

    def _run_weight(self, chain: List[TorsionPart], model: ConeModel, surjection_runs: bool) -> Fraction:
        """prod over maximal equal-slope runs of 1/len!, or the surjection sum."""
        weight = Fraction(1)
        for length in _run_lengths([Fraction(n, self.cone_service.deg(sub, model)) for sub, n, _ in chain]):
            if surjection_runs:
                weight *= self.coefficient_service.elem_identity(length)
            else:
                weight /= factorial(length)
        return weight


def _run_lengths(slopes: List[Fraction]) -> List[int]:
    lengths = []
    for i, slope in enumerate(slopes):
        if i and slope == slopes[i - 1]:
            lengths[-1] += 1
        else:
            lengths.append(1)
    return lengths


def _graded_mul(a: Graded, b: Graded, cutoff: Beta, n_max: int) -> Graded:
    """Product of (beta, n)-graded sums, truncated at beta <= cutoff and n <= n_max."""
    result: Graded = {}
    for (beta_a, n_a), x in a.items():
        for (beta_b, n_b), y in b.items():
            n = n_a + n_b
            if n > n_max:
                continue
            beta = tuple(p + q for p, q in zip(beta_a, beta_b))
            if any(s > c for s, c in zip(beta, cutoff)):
                continue
            result[(beta, n)] = result.get((beta, n), Fraction(0)) + x * y
    return {key: value for key, value in result.items() if value}


def _graded_exp(x: Graded, scale: Fraction, zero: Beta, cutoff: Beta, n_max: int) -> Graded:
    """exp(scale * x) truncated; x has no beta = 0 part, so the sum stops at |cutoff|."""
    result = {(zero, 0): Fraction(1)}
    power = {(zero, 0): Fraction(1)}
    for a in range(1, sum(cutoff) + 1):
        power = _graded_mul(power, x, cutoff, n_max)
        if not power:
            break
        weight = scale ** a / factorial(a)
        for key, value in power.items():
            result[key] = result.get(key, Fraction(0)) + weight * value
    return result
