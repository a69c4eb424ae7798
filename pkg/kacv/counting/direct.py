"""Direct Burnside counter."""

from typing import Optional, Sequence

from ..config import METHOD_DIRECT
from ..core.quiver import Quiver
from ..fields.galois import GaloisField
from ..representations.counting import count_abs_indec_classes
from .base import KacCounter


class DirectCounter(KacCounter):
    """Counts absolutely indecomposable classes by enumerating Rep(Q, α)."""

    name = METHOD_DIRECT

    def count(self, quiver: Quiver, alpha: Sequence[int], field: GaloisField,
              weight: Optional[Sequence[int]] = None) -> int:
        return count_abs_indec_classes(quiver, alpha, field, self.config)

    def admits(self, p: int, alpha: Sequence[int],
               weight: Optional[Sequence[int]] = None) -> bool:
        return True
