"""Finite fields, linear algebra over them and group orders."""

from .galois import (
    GaloisField,
    field_make,
    field_for_order,
    prime_powers,
    smallest_irreducible_modulus
)
from .linalg import (
    AffineSolution,
    batched_row_reduce,
    batched_rank,
    batched_affine_solve,
    row_reduce,
    rank,
    row_space_basis,
    nullspace,
    free_columns,
    solve_affine,
    matrix_inverse,
    invertible_matrices,
    reduce_by_basis
)
from .groups import gl_order, gl_alpha_order, g_alpha_order

__all__ = [
    'GaloisField',
    'field_make',
    'field_for_order',
    'prime_powers',
    'smallest_irreducible_modulus',
    'AffineSolution',
    'batched_row_reduce',
    'batched_rank',
    'batched_affine_solve',
    'row_reduce',
    'rank',
    'row_space_basis',
    'nullspace',
    'free_columns',
    'solve_affine',
    'matrix_inverse',
    'invertible_matrices',
    'reduce_by_basis',
    'gl_order',
    'gl_alpha_order',
    'g_alpha_order'
]
