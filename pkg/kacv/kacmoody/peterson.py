"""Root multiplicities of the symmetric Kac-Moody algebra attached to a quiver."""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from functools import reduce
from typing import Dict, List, Sequence

from ..config.constants import MAX_BOX_HEIGHT
from ..core.forms import height, symmetric_form
from ..core.quiver import DimVector, Quiver
from ..core.weights import sub_dimension_vectors
from ..utils.errors import InexactDivisionError, KacError
from ..utils.logging import get_logger

logger = get_logger(__name__)


def box_vectors(box: Sequence[int]) -> List[DimVector]:
    """Nonzero vectors 0 < β ≤ box, by increasing height then lexicographically."""
    vectors = [beta for beta in sub_dimension_vectors(box) if any(beta)]
    return sorted(vectors, key=lambda beta: (height(beta), beta))


@dataclass(frozen=True)
class MultTable:
    """Root multiplicities r_β and Peterson coefficients c_β for 0 < β ≤ box."""
    quiver: Quiver
    box: DimVector
    multiplicities: Dict[DimVector, int]
    c_values: Dict[DimVector, Fraction]

    def _lookup(self, beta: Sequence[int]) -> DimVector:
        beta = tuple(int(b) for b in beta)
        if beta not in self.multiplicities:
            raise ValueError(f"{beta} lies outside the box {self.box}")
        return beta

    def multiplicity(self, beta: Sequence[int]) -> int:
        return self.multiplicities[self._lookup(beta)]

    def c_value(self, beta: Sequence[int]) -> Fraction:
        return self.c_values[self._lookup(beta)]

    def is_root(self, beta: Sequence[int]) -> bool:
        return self.multiplicity(beta) > 0

    def vectors(self) -> List[DimVector]:
        return box_vectors(self.box)

    def roots(self) -> List[DimVector]:
        """Positive roots in the box, by increasing height."""
        return [beta for beta in self.vectors() if self.multiplicities[beta] > 0]


def _divisors(beta: DimVector) -> List[int]:
    g = reduce(gcd, beta, 0)
    return [n for n in range(2, g + 1) if g % n == 0]


def root_multiplicities(quiver: Quiver, box: Sequence[int],
                        max_height: int = MAX_BOX_HEIGHT) -> MultTable:
    """
    Peterson's recursion for every 0 < β ≤ box.

    With D the doubled Cartan matrix, c_{e_i} = 1 and for non-simple β
        (D(β,β) − 2 ht(β)) c_β = Σ_{β'+β''=β} D(β',β'') c_β' c_β''
    over ordered pairs of nonzero summands. Then
        r_β = c_β − Σ_{n ≥ 2, n | β} r_{β/n} / n.
    Vectors with disconnected support are not roots and get c_β = r_β = 0.
    When the leading coefficient vanishes for non-simple β, (β,β) > 2 and β
    is not a root, so r_β = 0.

    Raises:
        ValueError: If the box is zero or taller than max_height
        KacError: On an inconsistent recursion or a negative multiplicity
        InexactDivisionError: If some r_β is not an integer
    """
    box = quiver.dim_vector(box)
    if not any(box):
        raise ValueError("Box must be a nonzero dimension vector")
    if height(box) > max_height:
        raise ValueError(f"Box {box} has height {height(box)} > {max_height}")

    c: Dict[DimVector, Fraction] = {}
    r: Dict[DimVector, int] = {}
    for beta in box_vectors(box):
        if height(beta) == 1:
            c[beta] = Fraction(1)
            r[beta] = 1
            continue
        if not quiver.is_connected_support(beta):
            c[beta] = Fraction(0)
            r[beta] = 0
            continue

        total = Fraction(0)
        for first in sub_dimension_vectors(beta):
            if not any(first) or first == beta:
                continue
            second = tuple(b - f for b, f in zip(beta, first))
            if c[first] and c[second]:
                total += symmetric_form(quiver, first, second) * c[first] * c[second]

        lower = sum(
            (Fraction(r[tuple(b // n for b in beta)], n) for n in _divisors(beta)),
            Fraction(0)
        )
        lead = symmetric_form(quiver, beta, beta) - 2 * height(beta)
        if lead == 0:
            # (β,β) = 2 ht(β) > 2, so β is not a root and c_β comes from its divisors
            if total != 0:
                raise KacError(f"Inconsistent Peterson recursion at {beta}: {total}")
            c[beta] = lower
            r[beta] = 0
            continue
        c[beta] = total / lead

        value = c[beta] - lower
        if value.denominator != 1:
            raise InexactDivisionError(value.numerator, value.denominator,
                                       f"root multiplicity of {beta}")
        if value < 0:
            raise KacError(f"Negative root multiplicity {value} at {beta}")
        r[beta] = int(value)

    logger.debug(f"Root multiplicities computed for the box {box}")
    return MultTable(quiver=quiver, box=box, multiplicities=r, c_values=c)


def is_root(quiver: Quiver, beta: Sequence[int]) -> bool:
    """Whether β is a positive root."""
    return root_multiplicities(quiver, beta).is_root(beta)
