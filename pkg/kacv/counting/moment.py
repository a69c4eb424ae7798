"""Moment-map counter."""

from typing import Optional, Sequence

from ..config import METHOD_MOMENT
from ..core.quiver import Quiver
from ..core.weights import find_generic_weight, is_admissible_prime
from ..fields.galois import GaloisField
from ..moment.points import kac_value
from .base import KacCounter


class MomentCounter(KacCounter):
    """Counts points of the deformed quiver variety and rescales by q^(−d)."""

    name = METHOD_MOMENT

    def count(self, quiver: Quiver, alpha: Sequence[int], field: GaloisField,
              weight: Optional[Sequence[int]] = None) -> int:
        if weight is None:
            weight = find_generic_weight(alpha)
        return kac_value(quiver, alpha, weight, field, self.config)

    def admits(self, p: int, alpha: Sequence[int],
               weight: Optional[Sequence[int]] = None) -> bool:
        if weight is None:
            weight = find_generic_weight(alpha)
        return is_admissible_prime(p, weight, alpha)

    def requires_weight(self) -> bool:
        return True
