"""Base interface for Kac-value counters."""

from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Sequence

from ..config import KacConfig
from ..core.quiver import Quiver
from ..fields.galois import GaloisField


class KacCounter(ABC):
    """Evaluates a_α(q) at a single finite field."""

    name: str = ''

    def __init__(self, config: Optional[KacConfig] = None):
        self.config = config or KacConfig.default()

    @abstractmethod
    def count(self,
              quiver: Quiver,
              alpha: Sequence[int],
              field: GaloisField,
              weight: Optional[Sequence[int]] = None) -> int:
        """
        Compute a_α(q) over the given field.

        Args:
            quiver: Quiver
            alpha: Dimension vector
            field: Finite field F_q
            weight: Generic weight, for counters that need one

        Returns:
            Number of absolutely indecomposable isoclasses
        """
        pass

    @abstractmethod
    def admits(self,
               p: int,
               alpha: Sequence[int],
               weight: Optional[Sequence[int]] = None) -> bool:
        """Whether fields of characteristic p can be sampled."""
        pass

    def requires_weight(self) -> bool:
        return False

    def get_params(self) -> Dict[str, Any]:
        """Get counter parameters."""
        return {
            'method': self.name,
            'enumeration_budget': self.config.budgets.enumeration_budget,
            'workers': self.config.parallel.workers
        }
