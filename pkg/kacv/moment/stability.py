"""King stability of representations of the double quiver."""

from typing import Optional, Sequence

from ..config.constants import DEFAULT_SUBREP_BUDGET
from ..core.forms import weight_dot
from ..representations.representation import Representation
from ..representations.subreps import Subrepresentation, subrepresentations


def _check_inputs(v: Representation, weight: Sequence[int]) -> None:
    if v.total_dimension == 0:
        raise ValueError("King stability is undefined for the zero representation")
    if weight_dot(weight, v.dims) != 0:
        raise ValueError(
            f"Weight {tuple(weight)} does not vanish on dim V = {v.dims}"
        )


def king_destabilizing(v: Representation, weight: Sequence[int], strict: bool,
                       budget: int = DEFAULT_SUBREP_BUDGET) -> Optional[Subrepresentation]:
    """
    First proper nonzero subrepresentation W with λ·dim W < 0
    (≤ 0 when ``strict``), or None.
    """
    _check_inputs(v, weight)
    for sub in subrepresentations(v, budget):
        if not sub.is_proper_nonzero():
            continue
        value = weight_dot(weight, sub.dims)
        if value < 0 or (strict and value == 0):
            return sub
    return None


def king_semistable(v: Representation, weight: Sequence[int],
                    budget: int = DEFAULT_SUBREP_BUDGET) -> bool:
    """λ·dim W ≥ 0 for every subrepresentation W."""
    return king_destabilizing(v, weight, strict=False, budget=budget) is None


def king_stable(v: Representation, weight: Sequence[int],
                budget: int = DEFAULT_SUBREP_BUDGET) -> bool:
    """λ·dim W > 0 for every proper nonzero subrepresentation W."""
    return king_destabilizing(v, weight, strict=True, budget=budget) is None
