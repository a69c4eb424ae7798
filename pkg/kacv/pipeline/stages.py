"""Individual verification stages."""

import time
from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..config import (
    KacConfig,
    METHOD_AUTO,
    METHOD_BOTH,
    METHOD_DIRECT,
    METHOD_MOMENT,
    STATUS_FAIL,
    STATUS_INFO,
    STATUS_PASS,
    STATUS_SKIP
)
from ..core.forms import height, is_indivisible, rep_space_dimension, weight_dot
from ..core.quiver import DimVector, Quiver, WeightVector
from ..core.weights import (
    default_slope_weight,
    find_generic_weight,
    is_admissible_prime,
    is_generic_weight
)
from ..factories import get_counter
from ..fields.galois import GaloisField, field_for_order, prime_powers
from ..hn.counting import m_identity
from ..hn.equivalence import hom_vanishing_check, king_slope_equivalence_check
from ..hn.filtration import hn_filtration
from ..kacmoody.pbw import pbw_dimensions, pbw_dimensions_bruteforce
from ..kacmoody.peterson import MultTable, box_vectors, root_multiplicities
from ..moment.points import x_point_count, xs_point_count
from ..moment.polynomial import KacPolynomial, betti_from_kac, kac_polynomial
from ..representations.enumeration import check_budget, enumerate_reps
from ..representations.representation import Representation
from ..utils.errors import (
    BudgetExceededError,
    DivisibleDimensionError,
    HNUniquenessError,
    NotGenericError
)
from ..utils.logging import get_logger
from .results import CheckRecord

logger = get_logger(__name__)

PBW_ORACLE_MAX_HEIGHT = 6
DEFAULT_SWEEP_ORDERS = (2,)


@dataclass
class VerificationContext:
    """Inputs shared by every stage, plus lazily computed intermediates."""
    quiver: Quiver
    alpha: DimVector
    config: KacConfig = field(default_factory=KacConfig.default)
    orders: Tuple[int, ...] = ()
    method: str = METHOD_BOTH
    weight: Optional[WeightVector] = None
    double: bool = False
    _polynomial: Optional[KacPolynomial] = field(default=None, init=False, repr=False)
    _table: Optional[MultTable] = field(default=None, init=False, repr=False)

    def __post_init__(self):
        self.alpha = self.quiver.dim_vector(self.alpha)
        if not any(self.alpha):
            raise ValueError("Dimension vector must be nonzero")
        if self.weight is not None:
            self.weight = self.quiver.weight_vector(self.weight)

    @property
    def indivisible(self) -> bool:
        return is_indivisible(self.alpha)

    def generic_weight(self) -> WeightVector:
        """The supplied weight if generic, otherwise the canonical generic weight."""
        if self.weight is None:
            self.weight = find_generic_weight(self.alpha)
        elif not is_generic_weight(self.weight, self.alpha):
            raise NotGenericError(f"Weight {self.weight} is not generic for {self.alpha}")
        return self.weight

    def slope_weight(self) -> WeightVector:
        """Weight for HN sweeps; any weight works, the generic one by default."""
        if self.weight is not None:
            return self.weight
        if not self.indivisible:
            return default_slope_weight(self.alpha)
        return self.generic_weight()

    def field(self, q: int) -> GaloisField:
        return field_for_order(q, self.config.budgets.field_table_limit)

    def sampling_method(self) -> str:
        if self.method == METHOD_BOTH:
            return METHOD_AUTO if self.indivisible else METHOD_DIRECT
        return self.method

    def polynomial(self) -> KacPolynomial:
        if self._polynomial is None:
            self._polynomial = kac_polynomial(self.quiver, self.alpha, self.config,
                                              self.sampling_method())
        return self._polynomial

    def multiplicity_table(self) -> MultTable:
        if self._table is None:
            self._table = root_multiplicities(self.quiver, self.alpha)
        return self._table


class VerificationStage(ABC):
    """A unit of work producing check records."""

    name: str = ''

    @abstractmethod
    def process(self, context: VerificationContext) -> List[CheckRecord]:
        """Run the stage."""
        pass

    @staticmethod
    def timed(record_fn, *args):
        """Call record_fn and stamp the elapsed time on the record it returns."""
        start = time.perf_counter()
        record = record_fn(*args)
        record.elapsed_ms = (time.perf_counter() - start) * 1000.0
        return record


def _status(ok: bool) -> str:
    return STATUS_PASS if ok else STATUS_FAIL


def _skip(name: str, inputs: Dict, reason: str) -> CheckRecord:
    return CheckRecord(name=name, inputs=inputs, outputs={'reason': reason},
                       status=STATUS_SKIP)


class MethodAgreementStage(VerificationStage):
    """Direct and/or moment values of a_α(q) at each requested q."""

    name = 'method_agreement'

    def process(self, context: VerificationContext) -> List[CheckRecord]:
        logger.info(f"Evaluating a_{context.alpha} at q in {list(context.orders)}")
        return [self.timed(self._evaluate, context, q) for q in context.orders]

    def _moment(self, context: VerificationContext, field: GaloisField):
        """Moment value, or a skip reason when only `both` asked for it."""
        optional = context.method == METHOD_BOTH
        if optional and not context.indivisible:
            return None, 'divisible'
        weight = context.generic_weight()
        if optional and not is_admissible_prime(field.p, weight, context.alpha):
            return None, f"bad_prime_{field.p}"
        counter = get_counter(METHOD_MOMENT, config=context.config)
        return counter.count(context.quiver, context.alpha, field, weight), None

    def _evaluate(self, context: VerificationContext, q: int) -> CheckRecord:
        field = context.field(q)
        outputs: Dict[str, object] = {}
        if context.method in (METHOD_DIRECT, METHOD_BOTH):
            counter = get_counter(METHOD_DIRECT, config=context.config)
            outputs[METHOD_DIRECT] = counter.count(context.quiver, context.alpha, field)
        reason = None
        if context.method in (METHOD_MOMENT, METHOD_BOTH):
            value, reason = self._moment(context, field)
            outputs[METHOD_MOMENT] = value

        if context.method != METHOD_BOTH:
            status = STATUS_INFO
        elif reason is not None:
            outputs['reason'] = reason
            status = STATUS_SKIP
        else:
            status = _status(outputs[METHOD_DIRECT] == outputs[METHOD_MOMENT])
        return CheckRecord(name=self.name, inputs={'q': q}, outputs=outputs, status=status)


class KacPolynomialStage(VerificationStage):
    """Interpolated Kac polynomial, coefficients in ascending degree."""

    name = 'kac_polynomial'

    def process(self, context: VerificationContext) -> List[CheckRecord]:
        return [self.timed(self._record, context)]

    def _record(self, context: VerificationContext) -> CheckRecord:
        poly = context.polynomial()
        check = poly.samples[-1] if poly.samples else None
        return CheckRecord(
            name=self.name,
            inputs={'dim': context.alpha},
            outputs={
                'method': poly.method,
                'degree_bound': poly.degree_bound,
                'samples': [q for q, _ in poly.samples],
                'coefficients': list(poly.coefficients) or [0]
            },
            expected=check[1] if check else None,
            actual=poly.evaluate(check[0]) if check else None,
            status=STATUS_PASS
        )


class ConjectureAStage(VerificationStage):
    """Nonnegative coefficients, plus the Betti numbers they determine."""

    name = 'conjA'

    def process(self, context: VerificationContext) -> List[CheckRecord]:
        record = self.timed(self._nonnegative, context)
        if record.status == STATUS_FAIL:
            return [record]
        return [record, self.timed(self._betti, context)]

    def _nonnegative(self, context: VerificationContext) -> CheckRecord:
        poly = context.polynomial()
        return CheckRecord(
            name=self.name,
            inputs={'dim': context.alpha},
            outputs={'coefficients': list(poly.coefficients) or [0]},
            expected='nonnegative',
            actual=min(poly.coefficients, default=0),
            status=_status(poly.is_nonnegative())
        )

    def _betti(self, context: VerificationContext) -> CheckRecord:
        poly = context.polynomial()
        betti = betti_from_kac(poly)
        return CheckRecord(
            name='betti',
            inputs={'dim': context.alpha},
            outputs={'betti': betti},
            expected=poly.evaluate(1),
            actual=sum(betti),
            status=_status(sum(betti) == poly.evaluate(1))
        )


class ConjectureBStage(VerificationStage):
    """Constant term of a_α equals the root multiplicity r_α."""

    name = 'conjB'

    def process(self, context: VerificationContext) -> List[CheckRecord]:
        if not context.indivisible:
            raise DivisibleDimensionError(
                f"Dimension vector {context.alpha} is divisible; conjB needs gcd 1"
            )
        return [self.timed(self._record, context)]

    def _record(self, context: VerificationContext) -> CheckRecord:
        constant = context.polynomial().constant_term
        multiplicity = context.multiplicity_table().multiplicity(context.alpha)
        return CheckRecord(
            name=self.name,
            inputs={'dim': context.alpha},
            expected=multiplicity,
            actual=constant,
            status=_status(constant == multiplicity)
        )


class AppendixStage(VerificationStage):
    """#X_λ(F_q) = #X_s(F_q) at the requested or smallest admissible q."""

    name = 'appendix'

    def process(self, context: VerificationContext) -> List[CheckRecord]:
        if not context.indivisible:
            raise DivisibleDimensionError(
                f"Dimension vector {context.alpha} is divisible; appendix needs gcd 1"
            )
        weight = context.generic_weight()
        orders = context.orders or self._smallest_admissible(context, weight)
        return [self.timed(self._record, context, weight, q) for q in orders]

    @staticmethod
    def _smallest_admissible(context: VerificationContext,
                             weight: WeightVector) -> Tuple[int, ...]:
        for q, p, _ in prime_powers(context.config.interpolation.max_prime,
                                    context.config.interpolation.max_extension_degree):
            if is_admissible_prime(p, weight, context.alpha):
                return (q,)
        return ()

    def _record(self, context: VerificationContext, weight: WeightVector,
                q: int) -> CheckRecord:
        inputs = {'q': q, 'weight': weight}
        field = context.field(q)
        if not is_admissible_prime(field.p, weight, context.alpha):
            return _skip(self.name, inputs, f"bad_prime_{field.p}")
        try:
            x = x_point_count(context.quiver, context.alpha, weight, field, context.config)
            xs = xs_point_count(context.quiver, context.alpha, weight, field, context.config)
        except BudgetExceededError as error:
            return _skip(self.name, inputs, f"budget_{error.cost}")
        return CheckRecord(name=self.name, inputs=inputs, outputs={'x': x, 'xs': xs},
                           status=_status(x == xs))


class MIdentityStage(VerificationStage):
    """m_recursive = m_closed = r_α for Θ = −λ."""

    name = 'm_identity'

    def process(self, context: VerificationContext) -> List[CheckRecord]:
        if not context.indivisible:
            return [_skip(self.name, {'dim': context.alpha}, "divisible")]
        return [self.timed(self._record, context)]

    def _record(self, context: VerificationContext) -> CheckRecord:
        theta = tuple(-w for w in context.generic_weight())
        identity = m_identity(context.quiver, context.alpha, theta)
        return CheckRecord(
            name=self.name,
            inputs={'dim': context.alpha, 'theta': theta},
            outputs={
                'm_recursive': identity.recursive,
                'm_closed': identity.closed,
                'r': identity.multiplicity
            },
            status=_status(identity.holds)
        )


@dataclass
class SweepTally:
    """Counters accumulated while sweeping Rep(Q, α)(F_q)."""
    representations: int = 0
    hn_failures: int = 0
    king_failures: int = 0
    hom_pairs: int = 0
    hom_failures: int = 0
    semistable: int = 0
    histogram: Counter = field(default_factory=Counter)
    quotients: Dict[Tuple, Representation] = field(default_factory=dict)


def sweep_representations(quiver: Quiver, alpha: DimVector, field: GaloisField,
                          weight: WeightVector, config: KacConfig,
                          check_king: bool = True) -> SweepTally:
    """
    HN filtration of every representation of dimension α over F_q.

    Raises:
        BudgetExceededError: If Rep(Q, α)(F_q) exceeds the sweep budget or a
            representation has too many subspace tuples
    """
    theta = tuple(-w for w in weight)
    subrep_budget = config.budgets.subrep_budget
    tally = SweepTally()
    for v in enumerate_reps(quiver, alpha, field, config.budgets.sweep_budget):
        tally.representations += 1
        try:
            filtration = hn_filtration(v, theta, subrep_budget)
        except (HNUniquenessError, ArithmeticError) as error:
            logger.warning(f"HN filtration failed for {v.key()}: {error}")
            tally.hn_failures += 1
            continue
        if filtration.hn_type.total() != v.dims:
            tally.hn_failures += 1
        tally.histogram[filtration.hn_type] += 1
        if len(filtration.quotients) == 1:
            tally.semistable += 1
        for piece in filtration.quotients:
            tally.quotients.setdefault(piece.key(), piece)
        if check_king and not king_slope_equivalence_check(v, weight, subrep_budget):
            tally.king_failures += 1

    pieces = list(tally.quotients.values())
    for v in pieces:
        for w in pieces:
            if v is w:
                continue
            tally.hom_pairs += 1
            if not hom_vanishing_check(v, w, theta, subrep_budget):
                tally.hom_failures += 1
    return tally


class HNSweepStage(VerificationStage):
    """Exhaustive HN, Hom-vanishing and King/slope checks over Q and its double."""

    name = 'hn_sweep'

    def process(self, context: VerificationContext) -> List[CheckRecord]:
        weight = context.slope_weight()
        records: List[CheckRecord] = []
        for label, quiver in (('Q', context.quiver), ('Q_double', context.quiver.double())):
            for q in context.orders or DEFAULT_SWEEP_ORDERS:
                records.extend(self._sweep(context, label, quiver, q, weight))
        return records

    def _sweep(self, context: VerificationContext, label: str, quiver: Quiver,
               q: int, weight: WeightVector) -> List[CheckRecord]:
        inputs = {'quiver': label, 'q': q}
        start = time.perf_counter()
        try:
            tally = sweep_representations(quiver, context.alpha, context.field(q),
                                          weight, context.config,
                                          check_king=weight_dot(weight, context.alpha) == 0)
        except BudgetExceededError as error:
            return [_skip(self.name, inputs, f"budget_{error.cost}")]
        elapsed = (time.perf_counter() - start) * 1000.0

        records = [
            CheckRecord(name='hn_unique', inputs=dict(inputs),
                        outputs={'reps': tally.representations,
                                 'failures': tally.hn_failures},
                        status=_status(tally.hn_failures == 0)),
            CheckRecord(name='hom_vanishing', inputs=dict(inputs),
                        outputs={'pairs': tally.hom_pairs, 'failures': tally.hom_failures},
                        status=_status(tally.hom_failures == 0)),
            CheckRecord(name='king_slope', inputs=dict(inputs),
                        outputs={'reps': tally.representations,
                                 'failures': tally.king_failures},
                        status=_status(tally.king_failures == 0))
        ]
        for record in records:
            record.elapsed_ms = elapsed / len(records)
        return records


class MultiplicityTableStage(VerificationStage):
    """Rows (β, r_β, n_β) for 0 < β ≤ box, and the brute-force PBW cross-check."""

    name = 'multiplicity'

    def process(self, context: VerificationContext) -> List[CheckRecord]:
        start = time.perf_counter()
        table = context.multiplicity_table()
        series = pbw_dimensions(table)
        records = [
            CheckRecord(name=self.name, inputs={'beta': beta},
                        outputs={'r': table.multiplicity(beta), 'n': series[beta]},
                        status=STATUS_INFO)
            for beta in box_vectors(context.alpha)
        ]
        elapsed = (time.perf_counter() - start) * 1000.0
        for record in records:
            record.elapsed_ms = elapsed / max(len(records), 1)
        records.append(self.timed(self._oracle, context, series))
        return records

    def _oracle(self, context: VerificationContext, series) -> CheckRecord:
        inputs = {'box': context.alpha}
        if height(context.alpha) > PBW_ORACLE_MAX_HEIGHT:
            return _skip('pbw_oracle', inputs, f"height_{height(context.alpha)}")
        brute = pbw_dimensions_bruteforce(context.multiplicity_table())
        mismatches = [gamma for gamma, n in series.items() if brute[gamma] != n]
        return CheckRecord(name='pbw_oracle', inputs=inputs,
                           outputs={'mismatches': len(mismatches)},
                           status=_status(not mismatches))


class HNHistogramStage(VerificationStage):
    """HN-type histogram of Rep(Q, α)(F_q), or of the double with ``double``."""

    name = 'hn_type'

    def process(self, context: VerificationContext) -> List[CheckRecord]:
        weight = context.slope_weight()
        quiver = context.quiver.double() if context.double else context.quiver
        records: List[CheckRecord] = []
        for q in context.orders or DEFAULT_SWEEP_ORDERS:
            records.extend(self._histogram(context, quiver, q, weight))
        return records

    def _histogram(self, context: VerificationContext, quiver: Quiver, q: int,
                   weight: WeightVector) -> List[CheckRecord]:
        field = context.field(q)
        check_budget(
            f"HN sweep over Rep({'Q̄' if context.double else 'Q'}, {context.alpha}) over F_{q}",
            q ** rep_space_dimension(quiver, context.alpha),
            context.config.budgets.sweep_budget
        )
        king = weight_dot(weight, context.alpha) == 0
        start = time.perf_counter()
        tally = sweep_representations(quiver, context.alpha, field, weight,
                                      context.config, check_king=king)
        elapsed = (time.perf_counter() - start) * 1000.0

        ordered = sorted(tally.histogram.items(),
                         key=lambda item: (len(item[0].parts), item[0].label()))
        records = [
            CheckRecord(name=self.name, inputs={'q': q, 'type': hn_type.label()},
                        outputs={'slopes': [str(s) for s in hn_type.slopes],
                                 'count': count},
                        status=STATUS_INFO)
            for hn_type, count in ordered
        ]
        records.append(CheckRecord(
            name='hn_properties',
            inputs={'q': q, 'theta': tuple(-w for w in weight)},
            outputs={
                'reps': tally.representations,
                'semistable': tally.semistable,
                'hn_failures': tally.hn_failures,
                'hom_failures': tally.hom_failures,
                'king_failures': tally.king_failures if king else None
            },
            status=_status(tally.hn_failures == 0 and tally.hom_failures == 0
                           and tally.king_failures == 0)
        ))
        for record in records:
            record.elapsed_ms = elapsed / len(records)
        return records
