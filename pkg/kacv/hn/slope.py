"""Slope functions and slope (semi)stability."""

from fractions import Fraction
from typing import Optional, Sequence, Tuple

from ..config.constants import DEFAULT_SUBREP_BUDGET
from ..core.forms import height, weight_dot
from ..representations.representation import Representation
from ..representations.subreps import Subrepresentation, subrepresentations

SlopeValue = Fraction


def slope(theta: Sequence[int], alpha: Sequence[int]) -> SlopeValue:
    """
    s(α) = Θ·α / ht(α).

    Raises:
        ValueError: If α = 0
    """
    total = height(alpha)
    if total == 0:
        raise ValueError("Slope is undefined for the zero vector")
    return Fraction(weight_dot(theta, alpha), total)


def total_order_key(theta: Sequence[int], beta: Sequence[int]) -> Tuple[SlopeValue, Tuple[int, ...]]:
    """Sort key refining slope by the lexicographic order on vectors."""
    return slope(theta, beta), tuple(int(b) for b in beta)


def total_order_cmp(theta: Sequence[int], a: Sequence[int], b: Sequence[int]) -> int:
    """−1, 0 or 1 as a precedes, equals or follows b in the slope-then-lex order."""
    key_a, key_b = total_order_key(theta, a), total_order_key(theta, b)
    return (key_a > key_b) - (key_a < key_b)


def slope_destabilizing(v: Representation, theta: Sequence[int], strict: bool,
                        budget: int = DEFAULT_SUBREP_BUDGET) -> Optional[Subrepresentation]:
    """
    First proper nonzero W with s(W) > s(V) (≥ when ``strict``), or None.
    """
    if v.total_dimension == 0:
        raise ValueError("Slope stability is undefined for the zero representation")
    target = slope(theta, v.dims)
    for sub in subrepresentations(v, budget):
        if not sub.is_proper_nonzero():
            continue
        value = slope(theta, sub.dims)
        if value > target or (strict and value == target):
            return sub
    return None


def slope_semistable(v: Representation, theta: Sequence[int],
                     budget: int = DEFAULT_SUBREP_BUDGET) -> bool:
    """s(W) ≤ s(V) for every proper nonzero subrepresentation W."""
    return slope_destabilizing(v, theta, strict=False, budget=budget) is None


def slope_stable(v: Representation, theta: Sequence[int],
                 budget: int = DEFAULT_SUBREP_BUDGET) -> bool:
    """s(W) < s(V) for every proper nonzero subrepresentation W."""
    return slope_destabilizing(v, theta, strict=True, budget=budget) is None
