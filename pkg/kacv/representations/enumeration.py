"""Exhaustive enumeration of representation spaces under a budget."""

from typing import Iterator, Sequence

import numpy as np

from ..config.constants import DEFAULT_BUDGET, DEFAULT_CHUNK_SIZE
from ..core.forms import rep_space_dimension
from ..core.quiver import Quiver
from ..fields.galois import GaloisField
from ..utils.errors import BudgetExceededError
from ..utils.logging import get_logger
from .representation import Representation

logger = get_logger(__name__)


def enumeration_cost(quiver: Quiver, alpha: Sequence[int], field: GaloisField) -> int:
    """|Rep(Q, α)(F_q)| = q^N with N = Σ_arrows α_t α_h."""
    return field.q ** rep_space_dimension(quiver, alpha)


def check_budget(what: str, cost: int, budget: int) -> None:
    """
    Refuse enumerations larger than the budget.

    Raises:
        BudgetExceededError: If cost > budget
    """
    if cost > budget:
        logger.warning(f"Refusing {what}: {cost} > budget {budget}")
        raise BudgetExceededError(what, cost, budget)


def index_entries(field: GaloisField, entry_count: int,
                  start: int, stop: int) -> np.ndarray:
    """
    Entry vectors with indices in [start, stop).

    Index i is read as an entry_count-digit base-q number, most significant
    digit first, so indices enumerate entry vectors lexicographically.

    Returns:
        Array of shape (stop − start, entry_count)
    """
    indices = np.arange(start, stop, dtype=np.int64)
    powers = field.q ** np.arange(entry_count - 1, -1, -1, dtype=np.int64)
    return (indices[:, None] // powers[None, :]) % field.q


def entry_chunks(field: GaloisField, entry_count: int, start: int, stop: int,
                 chunk_size: int = DEFAULT_CHUNK_SIZE) -> Iterator[np.ndarray]:
    """``index_entries`` over [start, stop) in batches of at most chunk_size rows."""
    for chunk_start in range(start, stop, chunk_size):
        yield index_entries(field, entry_count, chunk_start,
                            min(stop, chunk_start + chunk_size))


def enumerate_reps(quiver: Quiver, alpha: Sequence[int], field: GaloisField,
                   budget: int = DEFAULT_BUDGET) -> Iterator[Representation]:
    """
    Every point of Rep(Q, α)(F_q), each exactly once, in lexicographic entry order.

    Raises:
        BudgetExceededError: If q^N > budget (checked before anything is yielded)
    """
    alpha = quiver.dim_vector(alpha)
    entry_count = rep_space_dimension(quiver, alpha)
    total = field.q ** entry_count
    check_budget(f"Rep(Q, {alpha}) over F_{field.q} (q^{entry_count})", total, budget)
    logger.debug(f"Enumerating {total} representations of dimension {alpha} over F_{field.q}")
    return _generate(quiver, alpha, field, entry_count, total)


def _generate(quiver: Quiver, alpha, field: GaloisField,
              entry_count: int, total: int) -> Iterator[Representation]:
    for chunk in entry_chunks(field, entry_count, 0, total):
        for entries in chunk:
            yield Representation.from_entries(quiver, field, alpha, entries)
