"""Generic weights and the primes at which they stay generic."""

from itertools import product
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from sympy import primefactors

from ..config.constants import MAX_WEIGHT_NORM
from ..utils.errors import DivisibleDimensionError, NotGenericError
from ..utils.logging import get_logger
from .forms import is_indivisible, weight_dot
from .quiver import DimVector, WeightVector

logger = get_logger(__name__)


def sub_dimension_vectors(alpha: Sequence[int]) -> Iterator[DimVector]:
    """All β with 0 ≤ β ≤ α componentwise, in lexicographic order (β = 0 included)."""
    return product(*(range(int(a) + 1) for a in alpha))


def proper_subvectors(alpha: Sequence[int]) -> Iterator[DimVector]:
    """All β with 0 < β < α componentwise."""
    alpha = tuple(int(a) for a in alpha)
    for beta in sub_dimension_vectors(alpha):
        if any(beta) and beta != alpha:
            yield beta


def is_generic_weight(weight: Sequence[int], alpha: Sequence[int]) -> bool:
    """λ·α = 0 and λ·β ≠ 0 for every 0 < β < α."""
    if weight_dot(weight, alpha) != 0:
        return False
    return all(weight_dot(weight, beta) != 0 for beta in proper_subvectors(alpha))


def _shell_values(norm: int) -> List[int]:
    """Entries of max-norm ≤ norm in the order 0, 1, −1, 2, −2, ..."""
    values = [0]
    for magnitude in range(1, norm + 1):
        values.extend([magnitude, -magnitude])
    return values


def find_generic_weight(alpha: Sequence[int],
                        max_norm: int = MAX_WEIGHT_NORM) -> WeightVector:
    """
    Smallest generic weight for α.

    Candidates are ordered by max-norm, then lexicographically under the entry
    order 0 ≺ 1 ≺ −1 ≺ 2 ≺ −2 ≺ ... .

    Args:
        alpha: Indivisible dimension vector
        max_norm: Largest max-norm searched

    Returns:
        The first generic weight in that order

    Raises:
        DivisibleDimensionError: If gcd(α) > 1 (no generic weight exists)
        NotGenericError: If nothing is found up to ``max_norm``
    """
    alpha = tuple(int(a) for a in alpha)
    if not any(alpha):
        raise ValueError("Dimension vector must be nonzero")
    if not is_indivisible(alpha):
        raise DivisibleDimensionError(
            f"Dimension vector {alpha} is divisible; no generic weight exists"
        )

    proper = list(proper_subvectors(alpha))
    for norm in range(max_norm + 1):
        values = _shell_values(norm)
        for weight in product(values, repeat=len(alpha)):
            if max((abs(w) for w in weight), default=0) != norm:
                continue
            if weight_dot(weight, alpha) != 0:
                continue
            if all(weight_dot(weight, beta) != 0 for beta in proper):
                logger.debug(f"Generic weight for {alpha}: {weight}")
                return tuple(weight)

    raise NotGenericError(
        f"No generic weight for {alpha} with max-norm ≤ {max_norm}"
    )


def default_slope_weight(alpha: Sequence[int],
                        max_norm: int = MAX_WEIGHT_NORM) -> WeightVector:
    """
    First nonzero λ with λ·α = 0 in the same search order as ``find_generic_weight``.

    Slope functions need no genericity, so this also serves divisible α.
    A single-vertex α has no such λ and gets e_1.
    """
    alpha = tuple(int(a) for a in alpha)
    if not any(alpha):
        raise ValueError("Dimension vector must be nonzero")
    for norm in range(1, max_norm + 1):
        for weight in product(_shell_values(norm), repeat=len(alpha)):
            if max(abs(w) for w in weight) == norm and weight_dot(weight, alpha) == 0:
                return tuple(weight)
    return (1,) + (0,) * (len(alpha) - 1)


def bad_primes(weight: Sequence[int], alpha: Sequence[int]) -> Set[int]:
    """Primes dividing some λ·β with 0 < β < α."""
    primes: Set[int] = set()
    for beta in proper_subvectors(alpha):
        value = abs(weight_dot(weight, beta))
        if value:
            primes.update(primefactors(value))
    return primes


def offending_subvector(weight: Sequence[int], alpha: Sequence[int],
                        p: int) -> Optional[Tuple[DimVector, int]]:
    """First β with p | λ·β, together with λ·β, or None when p is admissible."""
    for beta in proper_subvectors(alpha):
        value = weight_dot(weight, beta)
        if value % p == 0:
            return beta, value
    return None


def is_admissible_prime(p: int, weight: Sequence[int], alpha: Sequence[int]) -> bool:
    """Whether λ stays generic after reduction mod p."""
    return offending_subvector(weight, alpha, p) is None
