"""
Counting with slopes: the m-values attached to a slope function.

The PBW dimensions n_γ split along HN types, n_γ = Σ Π m_{γ_i} over tuples
with strictly decreasing slopes, which determines m recursively. For a
generic slope the same m-values are given in closed form by multisets of
equal-slope roots.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..core.quiver import DimVector, Quiver
from ..kacmoody.pbw import GradedSeries, pbw_dimensions
from ..kacmoody.peterson import MultTable, box_vectors, root_multiplicities
from ..core.weights import sub_dimension_vectors
from ..utils.errors import KacError
from .slope import slope, total_order_key


def _leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minus(a: Sequence[int], b: Sequence[int]) -> DimVector:
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True)
class SlopeDecomposition:
    """α = Σ u_i β_i with distinct roots β_i of slope s(α), in decreasing total order."""
    parts: Tuple[Tuple[int, DimVector], ...]

    def total(self) -> DimVector:
        size = len(self.parts[0][1])
        return tuple(sum(u * beta[i] for u, beta in self.parts) for i in range(size))

    def weight(self, table: MultTable) -> int:
        """Π_i C(r_{β_i} + u_i − 1, u_i)."""
        result = 1
        for u, beta in self.parts:
            result *= comb(table.multiplicity(beta) + u - 1, u)
        return result


def slope_decompositions(alpha: Sequence[int], theta: Sequence[int],
                         table: MultTable) -> Iterator[SlopeDecomposition]:
    """Every decomposition of α into positive multiples of distinct equal-slope roots."""
    alpha = tuple(int(a) for a in alpha)
    target = slope(theta, alpha)
    candidates = [beta for beta in table.roots()
                  if _leq(beta, alpha) and slope(theta, beta) == target]
    candidates.sort(key=lambda beta: total_order_key(theta, beta), reverse=True)
    return _decompose(alpha, candidates, 0, [])


def _decompose(remaining: DimVector, candidates: List[DimVector], start: int,
               chosen: List[Tuple[int, DimVector]]) -> Iterator[SlopeDecomposition]:
    if not any(remaining):
        yield SlopeDecomposition(tuple(chosen))
        return
    for index in range(start, len(candidates)):
        beta = candidates[index]
        u = 1
        rest = _minus(remaining, beta)
        while all(x >= 0 for x in rest):
            chosen.append((u, beta))
            yield from _decompose(rest, candidates, index + 1, chosen)
            chosen.pop()
            u += 1
            rest = _minus(rest, beta)


def m_closed(alpha: Sequence[int], theta: Sequence[int], table: MultTable) -> int:
    """Σ over equal-slope decompositions of Π C(r_β + u − 1, u)."""
    return sum(d.weight(table) for d in slope_decompositions(alpha, theta, table))


def m_values(alpha: Sequence[int], theta: Sequence[int],
             n_table: GradedSeries) -> Dict[DimVector, int]:
    """
    m_γ for every 0 < γ ≤ α from n_γ = Σ Π m_{γ_i} over strictly decreasing slopes.

    Raises:
        KacError: If some m_γ comes out negative
    """
    alpha = tuple(int(a) for a in alpha)
    m: Dict[DimVector, int] = {}
    memo: Dict[Tuple[DimVector, Optional[Fraction]], int] = {}

    def tail(delta: DimVector, bound: Optional[Fraction]) -> int:
        # tuples summing to delta whose first slope is below bound
        key = (delta, bound)
        if key in memo:
            return memo[key]
        total = 0
        for first in sub_dimension_vectors(delta):
            if not any(first):
                continue
            s = slope(theta, first)
            if bound is not None and s >= bound:
                continue
            if first == delta:
                total += m[first]
            elif m[first]:
                total += m[first] * tail(_minus(delta, first), s)
        memo[key] = total
        return total

    for gamma in box_vectors(alpha):
        value = n_table[gamma]
        for first in sub_dimension_vectors(gamma):
            if not any(first) or first == gamma or not m[first]:
                continue
            value -= m[first] * tail(_minus(gamma, first), slope(theta, first))
        if value < 0:
            raise KacError(f"Negative m-value {value} at {gamma}")
        m[gamma] = value
    return m


def m_recursive(alpha: Sequence[int], theta: Sequence[int], n_table: GradedSeries) -> int:
    """m_α determined by the HN recursion on PBW dimensions."""
    return m_values(alpha, theta, n_table)[tuple(int(a) for a in alpha)]


@dataclass(frozen=True)
class MIdentity:
    """The three quantities that agree for a generic slope."""
    alpha: DimVector
    theta: Tuple[int, ...]
    recursive: int
    closed: int
    multiplicity: int

    @property
    def holds(self) -> bool:
        return self.recursive == self.closed == self.multiplicity


def m_identity(quiver: Quiver, alpha: Sequence[int], theta: Sequence[int]) -> MIdentity:
    """Compute m_recursive, m_closed and r_α for the slope Θ."""
    alpha = quiver.dim_vector(alpha)
    theta = quiver.weight_vector(theta)
    table = root_multiplicities(quiver, alpha)
    n_table = pbw_dimensions(table, alpha)
    return MIdentity(
        alpha=alpha,
        theta=theta,
        recursive=m_recursive(alpha, theta, n_table),
        closed=m_closed(alpha, theta, table),
        multiplicity=table.multiplicity(alpha)
    )


def verify_m_equals_r(quiver: Quiver, alpha: Sequence[int], weight: Sequence[int]) -> bool:
    """m_recursive = m_closed = r_α for Θ = −λ."""
    theta = tuple(-int(w) for w in weight)
    return m_identity(quiver, alpha, theta).holds
