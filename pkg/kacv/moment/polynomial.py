"""Kac polynomials by exact interpolation of point counts."""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Integer, Poly, Symbol, factorint, interpolate

from ..config import KacConfig, METHOD_AUTO, METHOD_DIRECT, METHOD_MOMENT, SAMPLING_METHODS
from ..core.forms import is_indivisible, kac_degree
from ..core.quiver import Quiver, WeightVector
from ..core.weights import find_generic_weight
from ..fields.galois import field_make, prime_powers
from ..utils.errors import (
    BudgetExceededError,
    ConjectureViolationError,
    DivisibleDimensionError,
    KacError
)
from ..utils.logging import get_logger

logger = get_logger(__name__)

Q = Symbol('q')


@dataclass(frozen=True)
class KacPolynomial:
    """
    a_α(q) with integer coefficients in ascending order.

    Trailing zeros are stripped, so the zero polynomial has no coefficients.
    """
    coefficients: Tuple[int, ...]
    degree_bound: int
    samples: Tuple[Tuple[int, int], ...] = ()
    weight: Optional[WeightVector] = None
    method: str = METHOD_MOMENT

    def __post_init__(self):
        coefficients = [int(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, 'coefficients', tuple(coefficients))
        if coefficients and len(coefficients) - 1 > self.degree_bound:
            raise ValueError(
                f"Degree {len(coefficients) - 1} exceeds the bound {self.degree_bound}"
            )

    @property
    def degree(self) -> int:
        """Degree, −1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def evaluate(self, q: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * q + c
        return value

    def coefficient(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    @property
    def constant_term(self) -> int:
        """a_α(0)."""
        return self.coefficient(0)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    def as_poly(self) -> Poly:
        return Poly(list(reversed(self.coefficients)) or [0], Q)

    def __str__(self) -> str:
        return str(self.as_poly().as_expr())

    def to_dict(self) -> dict:
        return {
            'coefficients': list(self.coefficients),
            'degree_bound': self.degree_bound,
            'samples': [list(s) for s in self.samples],
            'weight': list(self.weight) if self.weight is not None else None,
            'method': self.method
        }


def _interpolate(points: Sequence[Tuple[int, int]]) -> Optional[Poly]:
    """Exact Lagrange interpolation over Q; None when a coefficient is not integral."""
    expression = interpolate([(Integer(x), Integer(y)) for x, y in points], Q)
    poly = Poly(expression, Q)
    if not all(c.is_integer for c in poly.all_coeffs()):
        return None
    return poly


def _sample_orders(counter, alpha, weight, config: KacConfig) -> List[int]:
    orders = []
    for q, p, k in prime_powers(config.interpolation.max_prime,
                                config.interpolation.max_extension_degree):
        if counter.admits(p, alpha, weight):
            orders.append(q)
    return orders


def kac_polynomial(quiver: Quiver, alpha: Sequence[int],
                   config: Optional[KacConfig] = None,
                   method: str = METHOD_MOMENT) -> KacPolynomial:
    """
    Reconstruct a_α(q) from its values at the smallest usable prime powers.

    With d = 1 − <α, α>, d + 1 samples fix the polynomial and one more is
    checked against it. If the check fails, or a coefficient is not an
    integer, the smallest sample is dropped and the next prime power is
    tried, up to ``config.interpolation.retries`` times.

    ``moment`` samples #X_λ(F_q)/q^d at primes where the generic λ stays
    generic; ``direct`` samples the Burnside count at every prime power;
    ``auto`` tries ``moment`` and falls back to ``direct`` when the moment
    samples exceed the enumeration budget.

    Raises:
        DivisibleDimensionError: If α is divisible and method is not ``direct``
        BudgetExceededError: If a sample exceeds the enumeration budget
        KacError: If too few admissible prime powers exist or interpolation
            does not stabilize
    """
    from ..factories import get_counter

    config = config or KacConfig.default()
    alpha = quiver.dim_vector(alpha)
    if method not in SAMPLING_METHODS:
        raise ValueError(f"Unknown sampling method: {method}. Available: {SAMPLING_METHODS}")
    if not any(alpha):
        raise ValueError("Dimension vector must be nonzero")

    if method == METHOD_AUTO:
        try:
            return kac_polynomial(quiver, alpha, config, METHOD_MOMENT)
        except BudgetExceededError as error:
            if not config.interpolation.fallback_to_direct:
                raise
            logger.warning(f"Moment sampling refused ({error}); sampling Burnside counts")
            return kac_polynomial(quiver, alpha, config, METHOD_DIRECT)

    indivisible = is_indivisible(alpha)
    if method == METHOD_MOMENT and not indivisible:
        raise DivisibleDimensionError(
            f"Dimension vector {alpha} is divisible; the moment method needs gcd 1"
        )
    weight = find_generic_weight(alpha) if indivisible else None
    d = kac_degree(quiver, alpha)
    if d < 0:
        logger.info(f"<α, α> > 1 for {alpha}: not a root, a_α = 0")
        return KacPolynomial((), d, (), weight, method)

    counter = get_counter(method, config=config)
    orders = _sample_orders(counter, alpha, weight, config)
    needed = d + 2
    values: Dict[int, int] = {}

    for attempt in range(config.interpolation.retries + 1):
        window = orders[attempt:attempt + needed]
        if len(window) < needed:
            raise KacError(
                f"Only {len(orders)} usable prime powers up to p = "
                f"{config.interpolation.max_prime} for {alpha}; "
                f"{attempt + needed} needed"
            )
        for q in window:
            if q not in values:
                values[q] = counter.count(quiver, alpha, field_make(*_split(q)), weight)
                logger.info(f"a_{alpha}({q}) = {values[q]} via {method}")

        points = [(q, values[q]) for q in window]
        poly = _interpolate(points[:-1])
        check_q, check_value = points[-1]
        if poly is not None and poly.degree() <= d and poly.eval(check_q) == check_value:
            coefficients = tuple(int(c) for c in reversed(poly.all_coeffs()))
            return KacPolynomial(coefficients, d, tuple(points), weight, method)
        logger.warning(
            f"Interpolation through {[q for q, _ in points[:-1]]} failed the check at "
            f"q = {check_q}; escalating"
        )

    raise KacError(
        f"Interpolation for {alpha} did not stabilize after "
        f"{config.interpolation.retries} escalations"
    )


def _split(q: int) -> Tuple[int, int]:
    (p, k), = factorint(q).items()
    return int(p), int(k)


def betti_from_kac(poly: KacPolynomial) -> List[int]:
    """
    Betti numbers of X_s read off a Kac polynomial.

    With a_α(q) = Σ c_i q^i and d the degree bound, b_{2d−2i} = c_i and odd
    Betti numbers vanish. The list is indexed by cohomological degree
    0..2d; the zero polynomial gives an empty list.

    Raises:
        ConjectureViolationError: If a coefficient is negative
    """
    if poly.is_zero():
        return []
    if not poly.is_nonnegative():
        raise ConjectureViolationError(
            f"Kac polynomial {poly} has a negative coefficient"
        )
    d = poly.degree_bound
    betti = [0] * (2 * d + 1)
    for i in range(d + 1):
        betti[2 * d - 2 * i] = poly.coefficient(i)
    return betti
