"""Bilinear forms and degree bookkeeping on the root lattice."""

from math import gcd
from functools import reduce
from typing import Sequence

import numpy as np

from ..utils.errors import KacError
from .quiver import Quiver


def euler_form(quiver: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    """
    Euler form <a, b> = Σ_i a_i b_i − Σ_arrows a_tail · b_head.

    Not symmetric in general; the symmetric form (a, b) used for roots is
    ``symmetric_form``.

    Raises:
        KacError: If a or b does not have one entry per vertex
    """
    n = quiver.vertex_count
    if len(a) != n or len(b) != n:
        raise KacError(f"Expected vectors of length {n}, got {len(a)} and {len(b)}")
    diagonal = sum(int(x) * int(y) for x, y in zip(a, b))
    return diagonal - sum(int(a[t]) * int(b[h]) for t, h in quiver.arrows)


def symmetric_form(quiver: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    """(a, b) = <a, b> + <b, a>, equal to aᵀ D b for the doubled Cartan matrix D."""
    return euler_form(quiver, a, b) + euler_form(quiver, b, a)


def cartan_matrix(quiver: Quiver) -> np.ndarray:
    """
    Symmetric generalized Cartan matrix with 2 on the diagonal and
    −(number of arrows between i and j) off it.
    """
    n = quiver.vertex_count
    matrix = 2 * np.eye(n, dtype=np.int64)
    for tail, head in quiver.arrows:
        matrix[tail, head] -= 1
        matrix[head, tail] -= 1
    return matrix


def weight_dot(weight: Sequence[int], alpha: Sequence[int]) -> int:
    """λ·α = Σ λ_i α_i."""
    if len(weight) != len(alpha):
        raise KacError(f"Weight {tuple(weight)} and dimension vector {tuple(alpha)} differ in length")
    return sum(int(w) * int(a) for w, a in zip(weight, alpha))


def height(alpha: Sequence[int]) -> int:
    """Total dimension Σ α_i."""
    return sum(int(a) for a in alpha)


def is_indivisible(alpha: Sequence[int]) -> bool:
    """Whether gcd(α_i) = 1."""
    return reduce(gcd, (int(a) for a in alpha), 0) == 1


def kac_degree(quiver: Quiver, alpha: Sequence[int]) -> int:
    """d = 1 − <α, α>; the Kac polynomial has degree at most d."""
    return 1 - euler_form(quiver, alpha, alpha)


def rep_space_dimension(quiver: Quiver, alpha: Sequence[int]) -> int:
    """dim Rep(Q, α) = Σ_arrows α_tail α_head."""
    return sum(int(alpha[t]) * int(alpha[h]) for t, h in quiver.arrows)


def quotient_dimension(quiver: Quiver, alpha: Sequence[int]) -> int:
    """Dimension 2d of the smooth quiver variety X_s for indivisible α."""
    return 2 * kac_degree(quiver, alpha)
