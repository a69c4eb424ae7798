"""Orders of the groups acting on representation spaces."""

from typing import Sequence, Union

from ..utils.validation import exact_divide
from .galois import GaloisField

FieldOrOrder = Union[GaloisField, int]


def _order(field: FieldOrOrder) -> int:
    return field.q if isinstance(field, GaloisField) else int(field)


def gl_order(n: int, field: FieldOrOrder) -> int:
    """|GL_n(F_q)| = Π_{i<n} (q^n − q^i); 1 for n = 0."""
    q = _order(field)
    result = 1
    for i in range(n):
        result *= q ** n - q ** i
    return result


def gl_alpha_order(alpha: Sequence[int], field: FieldOrOrder) -> int:
    """|Gl(α)(F_q)| = Π_i |GL_{α_i}(F_q)|."""
    result = 1
    for a in alpha:
        result *= gl_order(int(a), field)
    return result


def g_alpha_order(alpha: Sequence[int], field: FieldOrOrder) -> int:
    """
    |G(α)(F_q)| = |Gl(α)(F_q)| / (q − 1), the group modulo central scalars.

    Raises:
        ValueError: If α = 0
    """
    if not any(alpha):
        raise ValueError("G(α) needs a nonzero dimension vector")
    q = _order(field)
    return exact_divide(gl_alpha_order(alpha, q), q - 1, 'G(α) order')
