"""Graded dimensions of U(n^+) from root multiplicities."""

from dataclasses import dataclass
from math import comb
from typing import Dict, Optional, Sequence

from ..core.quiver import DimVector
from ..core.weights import sub_dimension_vectors
from .peterson import MultTable


@dataclass(frozen=True)
class GradedSeries:
    """Coefficients n_γ for 0 ≤ γ ≤ box (n_0 = 1)."""
    box: DimVector
    coefficients: Dict[DimVector, int]

    def __getitem__(self, gamma: Sequence[int]) -> int:
        gamma = tuple(int(g) for g in gamma)
        if gamma not in self.coefficients:
            raise ValueError(f"{gamma} lies outside the box {self.box}")
        return self.coefficients[gamma]

    def items(self):
        return self.coefficients.items()


def _leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def pbw_dimensions(table: MultTable, box: Optional[Sequence[int]] = None) -> GradedSeries:
    """
    Coefficients of Π_{β>0} (1 − x^β)^{−r_β} up to the box.

    (1 − x^β)^{−r} = Σ_u C(r + u − 1, u) x^{uβ}, truncated to exponents ≤ box.
    """
    box = tuple(int(b) for b in (box if box is not None else table.box))
    if not _leq(box, table.box):
        raise ValueError(f"Box {box} exceeds the multiplicity table box {table.box}")

    zero = tuple(0 for _ in box)
    series: Dict[DimVector, int] = {zero: 1}
    for beta in table.roots():
        if not _leq(beta, box):
            continue
        r = table.multiplicities[beta]
        updated: Dict[DimVector, int] = {}
        for gamma, coefficient in series.items():
            u = 0
            shifted = gamma
            while _leq(shifted, box):
                updated[shifted] = updated.get(shifted, 0) + coefficient * comb(r + u - 1, u)
                u += 1
                shifted = tuple(g + u * b for g, b in zip(gamma, beta))
        series = updated

    coefficients = {gamma: series.get(gamma, 0) for gamma in sub_dimension_vectors(box)}
    return GradedSeries(box=box, coefficients=coefficients)


def pbw_dimensions_bruteforce(table: MultTable,
                              box: Optional[Sequence[int]] = None) -> GradedSeries:
    """
    n_γ by listing every multiset of root vectors e_{β,j} (j < r_β) below the box.

    Exponential in the box height; an oracle for ``pbw_dimensions``.
    """
    box = tuple(int(b) for b in (box if box is not None else table.box))
    if not _leq(box, table.box):
        raise ValueError(f"Box {box} exceeds the multiplicity table box {table.box}")

    basis = [beta for beta in table.roots() if _leq(beta, box)
             for _ in range(table.multiplicities[beta])]
    counts: Dict[DimVector, int] = {}

    def walk(index: int, total: DimVector) -> None:
        if index == len(basis):
            counts[total] = counts.get(total, 0) + 1
            return
        beta = basis[index]
        shifted = total
        while _leq(shifted, box):
            walk(index + 1, shifted)
            shifted = tuple(t + b for t, b in zip(shifted, beta))

    walk(0, tuple(0 for _ in box))
    coefficients = {gamma: counts.get(gamma, 0) for gamma in sub_dimension_vectors(box)}
    return GradedSeries(box=box, coefficients=coefficients)
