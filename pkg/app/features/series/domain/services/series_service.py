"""Series service: closed forms, expansions and the P = L exp(N') factorization."""

from fractions import Fraction
from math import factorial
from typing import Dict, Optional, Sequence, Tuple

from app.core.shared.exceptions import DomainError
from app.core.utils.logger import get_logger
from app.features.cone.domain.entities.cone_model import Beta, ConeModel, classes_in_box
from app.features.cone.domain.services.cone_service import ConeService
from app.features.integrate.domain.entities.invariant_table import InvariantTable
from app.features.series.domain.value_objects.cone_series import ConeSeries, SeriesMode
from app.features.series.domain.value_objects.laurent_poly import LaurentPoly
from app.features.series.domain.value_objects.rational_fn import RationalFn

logger = get_logger(__name__)

Mismatch = Tuple[int, Fraction, Fraction]


class SeriesService:
    """Domain service for generating series in q and v^beta."""

    def __init__(self, cone_service: ConeService):
        self.cone_service = cone_service

    def n_closed_form(self, n_table: InvariantTable, beta: Sequence[int], model: ConeModel) -> RationalFn:
        """N'_beta(q) = sum_{n >= 0} n N_{n,beta} q^n as a reduced rational function.

        Symmetric tables use the paired-residue form; otherwise every residue j
        contributes N_j [j q^j (1 - q^d) + d q^{j+d}] / (1 - q^d)^2.
        """
        beta = model.check_beta(beta)
        if not any(beta):
            raise DomainError("N'_beta is undefined at beta = 0")
        d = self.cone_service.deg(beta, model)
        residues = [n_table.value(j, beta) for j in range(d)]

        num: Dict[int, Fraction] = {}

        def add(exponent: int, coeff: Fraction) -> None:
            num[exponent] = num.get(exponent, Fraction(0)) + coeff

        if n_table.is_symmetric(beta):
            for j in range(1, d):
                half = residues[j] / 2
                add(j + d, half * (d - j))
                add(d - j, half * (d - j))
                add(j, half * j)
                add(2 * d - j, half * j)
            add(d, residues[0] * d)
        else:
            for j in range(d):
                add(j, residues[j] * j)
                add(j + d, residues[j] * (d - j))

        top = 2 * d
        numerator = [num.get(e, Fraction(0)) for e in range(top + 1)]
        denominator = [Fraction(0)] * (top + 1)
        denominator[0], denominator[d], denominator[2 * d] = Fraction(1), Fraction(-2), Fraction(1)
        return RationalFn.from_coefficients(numerator, denominator)

    def n_window(
        self, n_table: InvariantTable, beta: Sequence[int], model: ConeModel, hi: int
    ) -> LaurentPoly:
        """sum_{1 <= n <= hi} n N_{n,beta} q^n."""
        return LaurentPoly({n: n * n_table.value(n, beta) for n in range(1, hi + 1)})

    def q_symmetry_check(self, f: RationalFn) -> bool:
        """Check if f(1/q) = f(q) as reduced rational functions."""
        return f.is_q_symmetric()

    def symmetry_defect(self, f: RationalFn, lo: int) -> Optional[Mismatch]:
        """First q-degree where the expansions of f(q) and f(1/q) differ.

        Returns (degree, coefficient of f(1/q), coefficient of f(q)), or None if f is symmetric.
        """
        flipped = f.inverse_q()
        difference = f - flipped
        if difference.is_zero():
            return None
        start = min(lo, -difference.order_at_zero())
        stop = -difference.order_at_zero() + len(difference.num)
        mine, theirs = f.expand(start, stop), flipped.expand(start, stop)
        for degree in range(start, stop + 1):
            if mine.coefficient(degree) != theirs.coefficient(degree):
                return degree, theirs.coefficient(degree), mine.coefficient(degree)
        raise DomainError("nonzero rational function with vanishing expansion")

    def first_mismatch(
        self,
        f: RationalFn,
        window: LaurentPoly,
        degree_bound: int,
        lo: Optional[int] = None,
    ) -> Optional[Mismatch]:
        """First degree in [lo, degree_bound] where the expansion of f differs from window.

        Returns (degree, window coefficient, expansion coefficient).
        """
        if lo is None:
            lo = min(-f.order_at_zero(), window.min_degree if window.min_degree is not None else 0)
        expansion = f.expand(lo, degree_bound)
        for degree in range(lo, degree_bound + 1):
            if expansion.coefficient(degree) != window.coefficient(degree):
                return degree, window.coefficient(degree), expansion.coefficient(degree)
        return None

    def series_matches_expansion(
        self,
        f: RationalFn,
        window: LaurentPoly,
        degree_bound: int,
        lo: Optional[int] = None,
    ) -> bool:
        """Check if f expands at q = 0 to the window coefficients up to degree_bound."""
        return self.first_mismatch(f, window, degree_bound, lo) is None

    def table_series(
        self,
        table: InvariantTable,
        model: ConeModel,
        beta_cutoff: Sequence[int],
        mode: SeriesMode,
        hi: Optional[int] = None,
    ) -> ConeSeries:
        """sum_beta (sum_n T_{n,beta} q^n) v^beta from an L or P table's stored windows."""
        cutoff = model.check_beta(beta_cutoff, "beta_cutoff")
        coeffs = {}
        for beta in classes_in_box(cutoff):
            if not any(beta):
                poly = LaurentPoly.monomial(0, table.value(0, beta))
            else:
                lo, top = table.windows[beta] if table.has(beta) else (0, -1)
                if hi is not None:
                    top = min(top, hi)
                poly = LaurentPoly({n: table.value(n, beta) for n in range(lo, top + 1)})
            coeffs[beta] = poly if mode is SeriesMode.WINDOW else poly.to_rational()
        return ConeSeries.create(coeffs, cutoff, mode)

    def exponent_series(
        self,
        n_table: InvariantTable,
        model: ConeModel,
        beta_cutoff: Sequence[int],
        mode: SeriesMode,
        ceiling: Optional[int] = None,
    ) -> ConeSeries:
        """sum_{beta > 0} N'_beta(q) v^beta; window mode needs a ceiling degree."""
        cutoff = model.check_beta(beta_cutoff, "beta_cutoff")
        coeffs = {}
        for beta in classes_in_box(cutoff):
            if not any(beta):
                continue
            if mode is SeriesMode.CLOSED:
                coeffs[beta] = self.n_closed_form(n_table, beta, model)
            else:
                if ceiling is None:
                    raise DomainError("window exponent series needs a ceiling degree")
                coeffs[beta] = self.n_window(n_table, beta, model, ceiling)
        return ConeSeries.create(coeffs, cutoff, mode, ceiling=ceiling)

    def expan_build(
        self,
        l_series: ConeSeries,
        n_table: InvariantTable,
        model: ConeModel,
        window: Optional[Tuple[int, int]] = None,
    ) -> ConeSeries:
        """P = (sum_beta L_beta v^beta) * exp(sum_beta N'_beta v^beta).

        In window mode L_beta may reach below degree 0, so N' is carried up to
        hi - (lowest L degree) before the product is cut back to [lo, hi].
        """
        if l_series.mode is SeriesMode.CLOSED:
            exponent = self.exponent_series(n_table, model, l_series.cutoff, SeriesMode.CLOSED)
            return l_series * exponent.exp()

        if window is None:
            raise DomainError("window mode needs a q-window")
        lo, hi = window
        lowest = min([0] + [c.min_degree for c in l_series.coeffs.values()])
        ceiling = hi - lowest
        exponent = self.exponent_series(n_table, model, l_series.cutoff, SeriesMode.WINDOW, ceiling)
        carried = ConeSeries.create(l_series.coeffs, l_series.cutoff, SeriesMode.WINDOW, ceiling=ceiling)
        product = carried * exponent.exp()
        logger.debug("expan_build", cutoff=list(l_series.cutoff), window=[lo, hi], ceiling=ceiling)
        return product.truncate(lo, hi)

    def log_expansion(
        self,
        p_series: ConeSeries,
        n_table: InvariantTable,
        model: ConeModel,
        window: Tuple[int, int],
    ) -> ConeSeries:
        """L = sum_{l >= 1} (-1)^{l-1} / (l-1)! N'^{l-1} P, cut to the window."""
        lo, hi = window
        lowest = min([0] + [c.min_degree for c in p_series.coeffs.values()])
        ceiling = hi - lowest
        exponent = self.exponent_series(n_table, model, p_series.cutoff, SeriesMode.WINDOW, ceiling)
        carried = ConeSeries.create(p_series.coeffs, p_series.cutoff, SeriesMode.WINDOW, ceiling=ceiling)

        result = carried
        power = carried.unit()
        for l in range(2, sum(p_series.cutoff) + 2):
            power = power * exponent
            if not power.coeffs:
                break
            sign = -1 if l % 2 == 0 else 1
            result = result + (power * carried).scale(Fraction(sign, factorial(l - 1)))
        return result.truncate(lo, hi)

    def build_p_table(
        self,
        l_table: InvariantTable,
        n_table: InvariantTable,
        model: ConeModel,
        beta_cutoff: Sequence[int],
        window: Tuple[int, int],
    ) -> InvariantTable:
        """P table on a q-window generated from L and N."""
        lo, hi = window
        cutoff = model.check_beta(beta_cutoff, "beta_cutoff")
        l_series = self.table_series(l_table, model, cutoff, SeriesMode.WINDOW)
        floor = min(model.n_floor(beta) for beta in classes_in_box(cutoff))
        start = min(lo, floor)
        p_series = self.expan_build(l_series, n_table, model, (start, hi))
        values: Dict[Beta, Dict[int, Fraction]] = {}
        windows: Dict[Beta, Tuple[int, int]] = {}
        for beta in classes_in_box(cutoff):
            if not any(beta):
                continue
            values[beta] = dict(p_series.coefficient(beta).coeffs)
            windows[beta] = (start, hi)
        return InvariantTable.p_table(model, values, windows)
