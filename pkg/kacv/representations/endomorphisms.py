"""Endomorphism algebras, Hom and Ext dimensions, and indecomposability."""

from dataclasses import dataclass
from itertools import product
from typing import List, Sequence, Tuple

import numpy as np

from ..config.constants import DEFAULT_END_ENUMERATION_LIMIT
from ..core.forms import euler_form
from ..fields.linalg import (
    batched_rank,
    free_columns,
    nullspace,
    rank
)
from ..utils.errors import BudgetExceededError
from ..utils.logging import get_logger
from .linear_systems import intertwiner_template, vertex_offsets
from .representation import Representation

logger = get_logger(__name__)


def _hom_system(v: Representation, w: Representation) -> np.ndarray:
    if v.quiver != w.quiver or v.field != w.field:
        raise ValueError("Hom needs representations of the same quiver over the same field")
    template = intertwiner_template(v.quiver, v.dims, w.dims)
    sources = np.concatenate([v.entries(), w.entries()])[None, :]
    return template.build(v.field, sources)[0]


def hom_dimension(v: Representation, w: Representation) -> int:
    """dim Hom(V, W): the nullity of the intertwiner equations."""
    system = _hom_system(v, w)
    return system.shape[1] - rank(v.field, system)


def ext1_dimension(v: Representation, w: Representation) -> int:
    """dim Ext^1(V, W) = dim Hom(V, W) − <dim V, dim W>."""
    return hom_dimension(v, w) - euler_form(v.quiver, v.dims, w.dims)


def endomorphism_dimensions(quiver, alpha: Tuple[int, ...], field,
                            entries: np.ndarray) -> np.ndarray:
    """dim End(x) for each entry vector in a batch of shape (B, N)."""
    template = intertwiner_template(quiver, alpha, alpha)
    sources = np.concatenate([entries, entries], axis=1)
    systems = template.build(field, sources)
    return template.n_unknowns - batched_rank(field, systems)


@dataclass(frozen=True, eq=False)
class EndAlgebra:
    """
    End(V) with an F_q-basis of vertex-wise matrix tuples.

    ``basis`` rows are flat unknown vectors (ψ_i blocks in vertex order).
    Basis element j has a 1 at ``coordinate_columns[j]`` and zeros at the
    other coordinate columns, so coordinates are read off directly.
    """
    representation: Representation
    basis: np.ndarray
    coordinate_columns: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return int(self.basis.shape[0])

    def blocks(self, vector: np.ndarray) -> List[np.ndarray]:
        """Split a flat element into its per-vertex matrices."""
        dims = self.representation.dims
        offsets, _ = vertex_offsets(dims, dims)
        return [vector[o:o + d * d].reshape(d, d) for o, d in zip(offsets, dims)]

    def flatten(self, blocks: Sequence[np.ndarray]) -> np.ndarray:
        if not blocks:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate([b.reshape(-1) for b in blocks])

    def multiply(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Composition a ∘ b of flat elements."""
        field = self.representation.field
        product_blocks = [field.matmul(x, y) for x, y in zip(self.blocks(a), self.blocks(b))]
        return self.flatten(product_blocks)

    def coordinates(self, vector: np.ndarray) -> np.ndarray:
        return np.asarray(vector, dtype=np.int64)[list(self.coordinate_columns)]

    def identity(self) -> np.ndarray:
        dims = self.representation.dims
        return self.flatten([np.eye(d, dtype=np.int64) for d in dims])

    def left_regular(self) -> np.ndarray:
        """
        Matrices of left multiplication by each basis element.

        Returns:
            Shape (e, e, e): entry [j] maps coordinates of b to those of b_j b
        """
        e = self.dimension
        regular = np.zeros((e, e, e), dtype=np.int64)
        for j in range(e):
            for k in range(e):
                regular[j, :, k] = self.coordinates(self.multiply(self.basis[j], self.basis[k]))
        return regular


def end_algebra(v: Representation) -> EndAlgebra:
    """End(V) together with a coordinate basis."""
    system = _hom_system(v, v)
    field = v.field
    basis = nullspace(field, system)
    columns = tuple(free_columns(field, system))
    return EndAlgebra(representation=v, basis=basis, coordinate_columns=columns)


def _non_units(algebra: EndAlgebra, limit: int) -> Tuple[int, int]:
    """
    Count the non-units of End(V) and the dimension of their span.

    An element is a unit exactly when left multiplication by it is bijective,
    which is decided by the rank of its left-regular matrix.
    """
    field = algebra.representation.field
    e = algebra.dimension
    total = field.q ** e
    if total > limit:
        raise BudgetExceededError(f"End(V) enumeration (q^{e})", total, limit)

    regular = algebra.left_regular()
    coefficients = np.array(list(product(range(field.q), repeat=e)), dtype=np.int64)
    actions = field.sum(field.mul(coefficients[:, :, None, None], regular[None]), axis=1)
    ranks = batched_rank(field, actions)
    non_units = coefficients[ranks < e]
    span_rank = rank(field, non_units) if len(non_units) else 0
    return len(non_units), span_rank


def locality(v: Representation,
             limit: int = DEFAULT_END_ENUMERATION_LIMIT) -> Tuple[bool, int, int]:
    """
    Decide whether End(V) is local.

    The non-units of a finite-dimensional algebra are closed under addition
    exactly when they form a subspace, i.e. when their number equals
    q^(dimension of their span).

    Returns:
        (is_local, dim End(V), dim of the span of the non-units)
    """
    if v.total_dimension == 0:
        return False, 0, 0
    if v.support_components() > 1:
        return False, end_algebra(v).dimension, -1
    algebra = end_algebra(v)
    e = algebra.dimension
    if e == 1:
        return True, 1, 0
    count, span_rank = _non_units(algebra, limit)
    return count == v.field.q ** span_rank, e, span_rank


def is_indecomposable(v: Representation,
                      limit: int = DEFAULT_END_ENUMERATION_LIMIT) -> bool:
    """V ≠ 0 and End(V) is local."""
    return locality(v, limit)[0]


def is_absolutely_indecomposable(v: Representation,
                                 limit: int = DEFAULT_END_ENUMERATION_LIMIT) -> bool:
    """End(V) is local with residue field F_q, i.e. its radical has codimension 1."""
    local, e, span_rank = locality(v, limit)
    return local and span_rank == e - 1
