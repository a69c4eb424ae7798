"""Gaussian elimination over F_q, single and batched."""

from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Optional, Tuple

import numpy as np

from .galois import GaloisField


def batched_row_reduce(field: GaloisField, matrices: np.ndarray,
                       pivot_limit: Optional[int] = None
                       ) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Reduced row echelon form of a stack of matrices.

    Only the first ``pivot_limit`` columns are used as pivot columns, which
    lets an augmented column ride along untouched by pivot selection.

    Args:
        field: Coefficient field
        matrices: Array of shape (B, m, n)
        pivot_limit: Number of leading columns eligible as pivots

    Returns:
        (reduced matrices, rank per matrix, boolean pivot-column mask of shape (B, n))
    """
    reduced = np.array(matrices, dtype=np.int64, copy=True)
    batch, rows, cols = reduced.shape
    limit = cols if pivot_limit is None else pivot_limit
    next_row = np.zeros(batch, dtype=np.int64)
    pivots = np.zeros((batch, cols), dtype=bool)
    row_index = np.arange(rows)

    for col in range(limit):
        candidates = (reduced[:, :, col] != 0) & (row_index[None, :] >= next_row[:, None])
        found = candidates.any(axis=1)
        if not found.any():
            continue
        sel = np.nonzero(found)[0]
        source = np.argmax(candidates[sel], axis=1)
        target = next_row[sel]

        source_rows = reduced[sel, source, :].copy()
        reduced[sel, source, :] = reduced[sel, target, :]
        reduced[sel, target, :] = source_rows

        scale = field.inv(reduced[sel, target, col])
        pivot_rows = field.mul(reduced[sel, target, :], scale[:, None])
        reduced[sel, target, :] = pivot_rows

        factors = reduced[sel, :, col].copy()
        factors[np.arange(len(sel)), target] = 0
        updates = field.mul(factors[:, :, None], pivot_rows[:, None, :])
        reduced[sel] = field.sub(reduced[sel], updates)

        pivots[sel, col] = True
        next_row[sel] += 1

    return reduced, next_row, pivots


def batched_rank(field: GaloisField, matrices: np.ndarray) -> np.ndarray:
    """Rank of each matrix in a stack of shape (B, m, n)."""
    matrices = np.asarray(matrices, dtype=np.int64)
    if matrices.shape[1] == 0 or matrices.shape[2] == 0:
        return np.zeros(matrices.shape[0], dtype=np.int64)
    _, ranks, _ = batched_row_reduce(field, matrices)
    return ranks


def batched_affine_solve(field: GaloisField, matrices: np.ndarray,
                         rhs: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Solvability and solution-space dimension of A_b y = rhs_b for a stack.

    Args:
        field: Coefficient field
        matrices: Shape (B, m, n)
        rhs: Shape (m,) shared by the batch or (B, m)

    Returns:
        (consistent mask of shape (B,), nullity n − rank(A_b) of shape (B,))
    """
    matrices = np.asarray(matrices, dtype=np.int64)
    batch, rows, cols = matrices.shape
    rhs = np.broadcast_to(np.asarray(rhs, dtype=np.int64), (batch, rows))
    augmented = np.concatenate([matrices, rhs[:, :, None]], axis=2)
    reduced, ranks, _ = batched_row_reduce(field, augmented, pivot_limit=cols)
    tail_rows = np.arange(rows)[None, :] >= ranks[:, None]
    inconsistent = (tail_rows & (reduced[:, :, cols] != 0)).any(axis=1)
    return ~inconsistent, cols - ranks


def row_reduce(field: GaloisField, matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row echelon form of one matrix.

    Returns:
        (RREF with the zero rows kept at the bottom, list of pivot columns)
    """
    matrix = np.asarray(matrix, dtype=np.int64)
    if matrix.ndim != 2:
        raise ValueError(f"Expected a matrix, got shape {matrix.shape}")
    if matrix.size == 0:
        return matrix.copy(), []
    reduced, _, pivots = batched_row_reduce(field, matrix[None])
    return reduced[0], [int(c) for c in np.nonzero(pivots[0])[0]]


def rank(field: GaloisField, matrix: np.ndarray) -> int:
    """Rank over F_q."""
    return len(row_reduce(field, matrix)[1])


def row_space_basis(field: GaloisField, matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """RREF basis rows of the row space and their pivot columns."""
    matrix = np.asarray(matrix, dtype=np.int64)
    reduced, pivots = row_reduce(field, matrix)
    return reduced[:len(pivots)], pivots


def nullspace(field: GaloisField, matrix: np.ndarray) -> np.ndarray:
    """
    Basis of {v : A v = 0}, one vector per row.

    Basis vector j has a 1 at the j-th free column and 0 at the other free
    columns, so the coordinates of any kernel vector are its free entries.
    """
    matrix = np.asarray(matrix, dtype=np.int64)
    cols = matrix.shape[1]
    reduced, pivots = row_reduce(field, matrix)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for j, f in enumerate(free):
        basis[j, f] = 1
        for row, pivot in enumerate(pivots):
            basis[j, pivot] = field.neg(reduced[row, f])
    return basis


def free_columns(field: GaloisField, matrix: np.ndarray) -> List[int]:
    """Non-pivot columns of A, i.e. the coordinate positions of ``nullspace``."""
    matrix = np.asarray(matrix, dtype=np.int64)
    pivots = set(row_reduce(field, matrix)[1])
    return [c for c in range(matrix.shape[1]) if c not in pivots]


@dataclass
class AffineSolution:
    """Solution set of A y = b: empty, or particular + span(kernel)."""
    consistent: bool
    particular: Optional[np.ndarray]
    kernel: np.ndarray

    @property
    def nullity(self) -> int:
        return int(self.kernel.shape[0])

    def size(self, q: int) -> int:
        """Number of solutions over F_q."""
        return q ** self.nullity if self.consistent else 0

    def points(self, field: GaloisField) -> Iterator[np.ndarray]:
        """Every solution, in lexicographic order of kernel coordinates."""
        if not self.consistent:
            return
        for coefficients in product(range(field.q), repeat=self.nullity):
            point = self.particular.copy()
            for c, vector in zip(coefficients, self.kernel):
                if c:
                    point = field.add(point, field.mul(c, vector))
            yield point


def solve_affine(field: GaloisField, matrix: np.ndarray, rhs: np.ndarray) -> AffineSolution:
    """Solve A y = b over F_q."""
    matrix = np.asarray(matrix, dtype=np.int64)
    rhs = np.asarray(rhs, dtype=np.int64)
    rows, cols = matrix.shape
    kernel = nullspace(field, matrix) if rows else np.eye(cols, dtype=np.int64)
    if rows == 0:
        return AffineSolution(True, np.zeros(cols, dtype=np.int64), kernel)

    augmented = np.concatenate([matrix, rhs.reshape(rows, 1)], axis=1)
    reduced, ranks, pivot_mask = batched_row_reduce(field, augmented[None], pivot_limit=cols)
    reduced, r = reduced[0], int(ranks[0])
    if np.any(reduced[r:, cols] != 0):
        return AffineSolution(False, None, kernel)

    particular = np.zeros(cols, dtype=np.int64)
    for row, pivot in enumerate(np.nonzero(pivot_mask[0])[0]):
        particular[pivot] = reduced[row, cols]
    return AffineSolution(True, particular, kernel)


def matrix_inverse(field: GaloisField, matrix: np.ndarray) -> np.ndarray:
    """
    Inverse of a square matrix.

    Raises:
        ValueError: If the matrix is singular
    """
    matrix = np.asarray(matrix, dtype=np.int64)
    n = matrix.shape[0]
    if n == 0:
        return matrix.copy()
    augmented = np.concatenate([matrix, np.eye(n, dtype=np.int64)], axis=1)
    reduced, ranks, _ = batched_row_reduce(field, augmented[None], pivot_limit=n)
    if int(ranks[0]) != n:
        raise ValueError("Matrix is singular")
    return reduced[0, :, n:]


def invertible_matrices(field: GaloisField, n: int) -> Iterator[np.ndarray]:
    """Every element of GL_n(F_q), by filtering all n×n matrices."""
    if n == 0:
        yield np.zeros((0, 0), dtype=np.int64)
        return
    for entries in product(range(field.q), repeat=n * n):
        candidate = np.array(entries, dtype=np.int64).reshape(n, n)
        if rank(field, candidate) == n:
            yield candidate


def reduce_by_basis(field: GaloisField, vectors: np.ndarray,
                    basis: np.ndarray, pivots: List[int]) -> np.ndarray:
    """
    Reduce row vectors modulo an RREF basis.

    The result vanishes at the pivot columns; it is zero exactly when the
    vector lies in the row space.
    """
    result = np.array(vectors, dtype=np.int64, copy=True)
    for row, pivot in enumerate(pivots):
        coefficients = result[..., pivot].copy()
        result = field.sub(result, field.mul(coefficients[..., None], basis[row]))
    return result
