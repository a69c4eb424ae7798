"""Harder-Narasimhan filtrations by exhaustive subrepresentation search."""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..config.constants import DEFAULT_SUBREP_BUDGET
from ..core.quiver import DimVector
from ..representations.representation import Representation
from ..representations.subreps import (
    Subrepresentation,
    lift_from_quotient,
    quotient_rep,
    restrict_rep,
    subrepresentations,
    zero_subrepresentation
)
from ..utils.errors import HNUniquenessError
from .slope import SlopeValue, slope, slope_semistable


@dataclass(frozen=True)
class HNType:
    """Dimension vectors of the HN subquotients with strictly decreasing slopes."""
    parts: Tuple[DimVector, ...]
    slopes: Tuple[SlopeValue, ...]

    def __post_init__(self):
        if len(self.parts) != len(self.slopes):
            raise ValueError("HN type needs one slope per part")
        if any(not any(part) for part in self.parts):
            raise ValueError("HN parts must be nonzero")
        if any(a <= b for a, b in zip(self.slopes, self.slopes[1:])):
            raise ValueError(f"HN slopes must strictly decrease: {self.slopes}")

    def total(self) -> DimVector:
        if not self.parts:
            return ()
        return tuple(sum(column) for column in zip(*self.parts))

    def label(self) -> str:
        return '|'.join(','.join(str(d) for d in part) for part in self.parts)


@dataclass(frozen=True, eq=False)
class HNFiltration:
    """0 = V_0 ⊂ V_1 ⊂ ... ⊂ V_n = V with semistable subquotients."""
    representation: Representation
    steps: Tuple[Subrepresentation, ...]
    quotients: Tuple[Representation, ...]
    hn_type: HNType


def maximal_destabilizing(v: Representation, theta: Sequence[int],
                          budget: int = DEFAULT_SUBREP_BUDGET) -> Subrepresentation:
    """
    The nonzero subrepresentation of maximal slope and, among those, maximal dimension.

    Raises:
        HNUniquenessError: If two different subrepresentations tie
    """
    best: List[Subrepresentation] = []
    best_key = None
    for sub in subrepresentations(v, budget):
        if sub.is_zero():
            continue
        key = (slope(theta, sub.dims), sub.total_dimension)
        if best_key is None or key > best_key:
            best, best_key = [sub], key
        elif key == best_key:
            best.append(sub)
    if len(best) != 1:
        raise HNUniquenessError(
            f"{len(best)} subrepresentations of {v.dims} share slope and dimension {best_key}"
        )
    return best[0]


def hn_filtration(v: Representation, theta: Sequence[int],
                  budget: int = DEFAULT_SUBREP_BUDGET) -> HNFiltration:
    """
    HN filtration of V for the slope Θ.

    V_1 is the maximal destabilizing subrepresentation of V and each later
    step lifts the maximal destabilizing subrepresentation of V / V_{i−1}.

    Raises:
        ValueError: If V = 0
        HNUniquenessError: If a maximal destabilizing step is not unique
        ArithmeticError: If a subquotient is not semistable
    """
    if v.total_dimension == 0:
        raise ValueError("HN filtration of the zero representation")

    steps: List[Subrepresentation] = []
    quotients: List[Representation] = []
    current = zero_subrepresentation(v)
    while not current.is_full():
        remainder = quotient_rep(v, current)
        top = maximal_destabilizing(remainder, theta, budget)
        piece = restrict_rep(top)
        if not slope_semistable(piece, theta, budget):
            raise ArithmeticError(f"HN subquotient {piece.dims} is not semistable")
        current = lift_from_quotient(current, top)
        steps.append(current)
        quotients.append(piece)

    parts = tuple(q.dims for q in quotients)
    hn_type = HNType(parts, tuple(slope(theta, part) for part in parts))
    return HNFiltration(v, tuple(steps), tuple(quotients), hn_type)
