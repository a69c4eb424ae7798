"""Consistency checks between King stability, slope stability and Hom."""

from typing import Sequence

from ..config.constants import DEFAULT_SUBREP_BUDGET
from ..moment.stability import king_semistable, king_stable
from ..representations.endomorphisms import hom_dimension
from ..representations.representation import Representation
from .slope import slope, slope_semistable, slope_stable


def king_slope_equivalence_check(v: Representation, weight: Sequence[int],
                                 budget: int = DEFAULT_SUBREP_BUDGET) -> bool:
    """
    λ-King (semi)stability agrees with slope (semi)stability for Θ = −λ.

    Requires λ·dim V = 0.
    """
    theta = tuple(-int(w) for w in weight)
    return (king_semistable(v, weight, budget) == slope_semistable(v, theta, budget)
            and king_stable(v, weight, budget) == slope_stable(v, theta, budget))


def hom_vanishing_check(v: Representation, w: Representation, theta: Sequence[int],
                        budget: int = DEFAULT_SUBREP_BUDGET) -> bool:
    """
    Hom(V, W) = 0 whenever V, W are semistable with s(V) > s(W).

    Pairs outside that hypothesis pass trivially.
    """
    if slope(theta, v.dims) <= slope(theta, w.dims):
        return True
    if not (slope_semistable(v, theta, budget) and slope_semistable(w, theta, budget)):
        return True
    return hom_dimension(v, w) == 0
