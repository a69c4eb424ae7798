"""Subrepresentations, restrictions and quotients."""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, List, Optional, Tuple

import numpy as np

from ..config.constants import DEFAULT_SUBREP_BUDGET
from ..core.quiver import DimVector
from ..fields.galois import GaloisField
from ..fields.linalg import reduce_by_basis, row_space_basis
from ..utils.errors import BudgetExceededError, KacError
from .representation import Representation


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    numerator = 1
    denominator = 1
    for i in range(k):
        numerator *= q ** (n - i) - 1
        denominator *= q ** (i + 1) - 1
    return numerator // denominator


def subspace_count(n: int, q: int) -> int:
    """Number of subspaces of F_q^n of any dimension."""
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


@lru_cache(maxsize=None)
def _subspaces(field: GaloisField, n: int) -> Tuple[Tuple[np.ndarray, Tuple[int, ...]], ...]:
    result = []
    for k in range(n + 1):
        for pivots in combinations(range(n), k):
            free_slots = [(row, col) for row, pivot in enumerate(pivots)
                          for col in range(pivot + 1, n) if col not in pivots]
            for values in product(range(field.q), repeat=len(free_slots)):
                basis = np.zeros((k, n), dtype=np.int64)
                for row, pivot in enumerate(pivots):
                    basis[row, pivot] = 1
                for (row, col), value in zip(free_slots, values):
                    basis[row, col] = value
                basis.setflags(write=False)
                result.append((basis, pivots))
    return tuple(result)


def subspaces(field: GaloisField, n: int) -> Tuple[Tuple[np.ndarray, Tuple[int, ...]], ...]:
    """
    Every subspace of F_q^n as (RREF basis rows, pivot columns).

    Ordered by dimension, then pivot columns, then the free entries.
    """
    return _subspaces(field, n)


@dataclass(frozen=True, eq=False)
class Subrepresentation:
    """Subspaces W_i ⊆ V_i, given by RREF bases, with x_a(W_t) ⊆ W_h."""
    parent: Representation
    bases: Tuple[np.ndarray, ...]
    pivots: Tuple[Tuple[int, ...], ...]

    @property
    def dims(self) -> DimVector:
        return tuple(int(b.shape[0]) for b in self.bases)

    @property
    def total_dimension(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dimension == 0

    def is_full(self) -> bool:
        return self.dims == self.parent.dims

    def is_proper_nonzero(self) -> bool:
        return not self.is_zero() and not self.is_full()


def _arrow_invariant(v: Representation, arrow: int,
                     tail_basis: np.ndarray, head_basis: np.ndarray,
                     head_pivots: Tuple[int, ...]) -> bool:
    if tail_basis.shape[0] == 0:
        return True
    images = v.field.matmul(tail_basis, v.matrices[arrow].T)
    if head_basis.shape[0] == 0:
        return not np.any(images)
    residue = reduce_by_basis(v.field, images, head_basis, list(head_pivots))
    return not np.any(residue)


def is_invariant(v: Representation, bases: Tuple[np.ndarray, ...],
                 pivots: Tuple[Tuple[int, ...], ...]) -> bool:
    """Whether the subspace tuple is stable under every arrow."""
    return all(
        _arrow_invariant(v, a, bases[t], bases[h], pivots[h])
        for a, (t, h) in enumerate(v.quiver.arrows)
    )


def subrepresentation_cost(v: Representation) -> int:
    """Number of subspace tuples the exhaustive search may inspect."""
    cost = 1
    for d in v.dims:
        cost *= subspace_count(d, v.field.q)
    return cost


def subrepresentations(v: Representation,
                       budget: int = DEFAULT_SUBREP_BUDGET) -> Iterator[Subrepresentation]:
    """
    Every subrepresentation of V (zero and V included).

    Vertices are assigned in order and an arrow is checked as soon as both
    of its endpoints are assigned.

    Raises:
        BudgetExceededError: If the subspace tuple count exceeds the budget
    """
    cost = subrepresentation_cost(v)
    if cost > budget:
        raise BudgetExceededError(f"subrepresentations of {v.dims}", cost, budget)

    choices = [subspaces(v.field, d) for d in v.dims]
    arrows_closing_at = [[] for _ in v.dims]
    for a, (t, h) in enumerate(v.quiver.arrows):
        arrows_closing_at[max(t, h)].append(a)
    return _search(v, choices, arrows_closing_at, 0, [], [])


def _search(v: Representation, choices, arrows_closing_at, vertex: int,
            bases: List[np.ndarray], pivots: List[Tuple[int, ...]]) -> Iterator[Subrepresentation]:
    if vertex == len(choices):
        yield Subrepresentation(v, tuple(bases), tuple(pivots))
        return
    for basis, pivot in choices[vertex]:
        bases.append(basis)
        pivots.append(pivot)
        if all(_arrow_invariant(v, a, bases[t], bases[h], pivots[h])
               for a in arrows_closing_at[vertex]
               for t, h in [v.quiver.arrows[a]]):
            yield from _search(v, choices, arrows_closing_at, vertex + 1, bases, pivots)
        bases.pop()
        pivots.pop()


def zero_subrepresentation(v: Representation) -> Subrepresentation:
    bases = tuple(np.zeros((0, d), dtype=np.int64) for d in v.dims)
    return Subrepresentation(v, bases, tuple(() for _ in v.dims))


def full_subrepresentation(v: Representation) -> Subrepresentation:
    bases = tuple(np.eye(d, dtype=np.int64) for d in v.dims)
    return Subrepresentation(v, bases, tuple(tuple(range(d)) for d in v.dims))


def restrict_rep(sub: Subrepresentation) -> Representation:
    """W as a representation in its own RREF bases."""
    v = sub.parent
    field = v.field
    matrices = []
    for a, (t, h) in enumerate(v.quiver.arrows):
        # rows: images of W_t basis vectors; coordinates in W_h are the pivot entries
        images = field.matmul(sub.bases[t], v.matrices[a].T)
        coordinates = images[:, list(sub.pivots[h])] if len(sub.pivots[h]) else \
            np.zeros((images.shape[0], 0), dtype=np.int64)
        matrices.append(coordinates.T.reshape(sub.dims[h], sub.dims[t]))
    return Representation(v.quiver, field, sub.dims, tuple(matrices))


def complement_columns(sub: Subrepresentation, vertex: int) -> List[int]:
    """Unit vectors e_j, j non-pivot, spanning a complement of W_i in V_i."""
    pivots = set(sub.pivots[vertex])
    return [j for j in range(sub.parent.dims[vertex]) if j not in pivots]


def quotient_rep(v: Representation, sub: Subrepresentation) -> Representation:
    """
    V / W in the basis given by the images of the complement unit vectors.

    Raises:
        ValueError: If W belongs to another representation
        KacError: If W is not stable under every arrow of V
    """
    if sub.parent is not v and sub.parent != v:
        raise ValueError("Subrepresentation belongs to a different representation")
    if not is_invariant(v, sub.bases, sub.pivots):
        raise KacError(f"Subspaces of dimension {sub.dims} are not invariant under the arrows")
    field = v.field
    complements = [complement_columns(sub, i) for i in range(len(v.dims))]
    dims = tuple(len(c) for c in complements)
    matrices = []
    for a, (t, h) in enumerate(v.quiver.arrows):
        columns = v.matrices[a][:, complements[t]].T
        reduced = reduce_by_basis(field, columns, sub.bases[h], list(sub.pivots[h]))
        block = reduced[:, complements[h]] if len(complements[h]) else \
            np.zeros((len(complements[t]), 0), dtype=np.int64)
        matrices.append(block.T.reshape(dims[h], dims[t]))
    return Representation(v.quiver, field, dims, tuple(matrices))


def lift_from_quotient(sub: Subrepresentation,
                       quotient_sub: Subrepresentation) -> Subrepresentation:
    """
    Preimage in V of a subrepresentation of V / W (as built by ``quotient_rep``).
    """
    v = sub.parent
    field = v.field
    bases = []
    pivots = []
    for i, d in enumerate(v.dims):
        complement = complement_columns(sub, i)
        lifted = np.zeros((quotient_sub.bases[i].shape[0], d), dtype=np.int64)
        if complement:
            lifted[:, complement] = quotient_sub.bases[i]
        stacked = np.vstack([sub.bases[i], lifted])
        if stacked.shape[0]:
            basis, pivot = row_space_basis(field, stacked)
        else:
            basis, pivot = np.zeros((0, d), dtype=np.int64), []
        bases.append(basis)
        pivots.append(tuple(pivot))
    return Subrepresentation(v, tuple(bases), tuple(pivots))
