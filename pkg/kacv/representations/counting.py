"""Burnside counting of absolutely indecomposable isoclasses."""

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

import numpy as np

from ..config import KacConfig
from ..core.forms import rep_space_dimension
from ..core.quiver import Quiver
from ..fields.galois import GaloisField
from ..fields.groups import g_alpha_order, gl_alpha_order
from ..fields.linalg import invertible_matrices, matrix_inverse
from ..utils.logging import get_logger
from ..utils.parallel import run_partitioned
from ..utils.validation import exact_divide
from .endomorphisms import endomorphism_dimensions, is_absolutely_indecomposable, locality
from .enumeration import check_budget, entry_chunks, enumerate_reps
from .representation import Representation

logger = get_logger(__name__)


def _burnside_slice(payload, start: int, stop: int) -> int:
    """Σ q^(e(x)−1) over absolutely indecomposable x with index in [start, stop)."""
    quiver, alpha, field, entry_count, chunk_size, end_limit = payload
    total = 0
    for entries in entry_chunks(field, entry_count, start, stop, chunk_size):
        dims = endomorphism_dimensions(quiver, alpha, field, entries)
        total += int(np.count_nonzero(dims == 1))
        for row in np.nonzero(dims > 1)[0]:
            rep = Representation.from_entries(quiver, field, alpha, entries[row])
            if is_absolutely_indecomposable(rep, end_limit):
                total += field.q ** (int(dims[row]) - 1)
    return total


def count_abs_indec_classes(quiver: Quiver, alpha: Sequence[int], field: GaloisField,
                            config: Optional[KacConfig] = None) -> int:
    """
    Number of isoclasses of absolutely indecomposable representations of
    dimension α over F_q.

    Burnside over G(α) = Gl(α)/F_q^*: an absolutely indecomposable x has
    |Stab_G(x)| = q^(dim End(x) − 1), so the class count is
    Σ_x q^(e(x)−1) / |G(α)(F_q)| over absolutely indecomposable x.

    Raises:
        BudgetExceededError: If q^N exceeds the enumeration budget
        InexactDivisionError: If the weighted sum is not divisible by |G(α)|
    """
    config = config or KacConfig.default()
    alpha = quiver.dim_vector(alpha)
    if not any(alpha):
        raise ValueError("Dimension vector must be nonzero")

    entry_count = rep_space_dimension(quiver, alpha)
    total = field.q ** entry_count
    check_budget(f"Rep(Q, {alpha}) over F_{field.q} (q^{entry_count})",
                 total, config.budgets.enumeration_budget)
    logger.info(f"Burnside count for {alpha} over F_{field.q}: {total} representations")

    payload = (quiver, alpha, field, entry_count,
               config.parallel.chunk_size, config.budgets.end_enumeration_limit)
    weighted = run_partitioned(_burnside_slice, payload, total, config.parallel.workers)
    return exact_divide(weighted, g_alpha_order(alpha, field), 'Burnside count')


@dataclass(frozen=True)
class IsoclassCount:
    """Orbit census of Rep(Q, α)(F_q) under Gl(α)(F_q)."""
    orbits: int
    indecomposable: int
    absolutely_indecomposable: int


def _act(field: GaloisField, quiver: Quiver, group_element, inverses,
         rep: Representation) -> Representation:
    matrices = tuple(
        field.matmul(field.matmul(group_element[h], x), inverses[t])
        for (t, h), x in zip(quiver.arrows, rep.matrices)
    )
    return Representation(quiver, field, rep.dims, matrices)


def count_isoclasses_bruteforce(quiver: Quiver, alpha: Sequence[int], field: GaloisField,
                                budget: int) -> IsoclassCount:
    """
    Partition Rep(Q, α)(F_q) into Gl(α) orbits by explicit group action.

    Only usable for tiny cases; it is the reference the Burnside count is
    checked against.

    Raises:
        BudgetExceededError: If |Rep| · |Gl(α)| exceeds the budget
    """
    alpha = quiver.dim_vector(alpha)
    cost = field.q ** rep_space_dimension(quiver, alpha) * gl_alpha_order(alpha, field)
    check_budget(f"orbit enumeration for {alpha} over F_{field.q}", cost, budget)

    group = []
    for element in product(*(list(invertible_matrices(field, d)) for d in alpha)):
        group.append((element, [matrix_inverse(field, g) for g in element]))

    seen = set()
    orbits = indecomposable = absolute = 0
    for rep in enumerate_reps(quiver, alpha, field, budget=cost):
        if rep.key() in seen:
            continue
        orbits += 1
        for element, inverses in group:
            seen.add(_act(field, quiver, element, inverses, rep).key())
        local, e, span_rank = locality(rep, limit=budget)
        if local:
            indecomposable += 1
            if span_rank == e - 1:
                absolute += 1
    return IsoclassCount(orbits, indecomposable, absolute)
