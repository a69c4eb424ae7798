"""Point counts of the deformed moment-map fibers μ^{-1}(Λ)."""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..config import KacConfig
from ..core.forms import rep_space_dimension
from ..core.quiver import DimVector, Quiver
from ..fields.galois import GaloisField
from ..fields.linalg import AffineSolution, batched_affine_solve, solve_affine
from ..representations.enumeration import check_budget, entry_chunks, enumerate_reps
from ..representations.linear_systems import moment_rhs, moment_template
from ..representations.representation import Representation
from ..utils.logging import get_logger
from ..utils.parallel import run_partitioned

logger = get_logger(__name__)


@dataclass(frozen=True)
class MomentEquation:
    """
    The system Σ_a [x_a, x_a*] = Λ on the double of ``quiver``.

    ``target`` holds one field element (as its integer encoding) per vertex;
    Λ acts on V_i as target[i] times the identity.
    """
    quiver: Quiver
    alpha: DimVector
    target: Tuple[int, ...]

    def __post_init__(self):
        if self.quiver.is_doubled:
            raise ValueError("MomentEquation takes the undoubled quiver")
        object.__setattr__(self, 'alpha', self.quiver.dim_vector(self.alpha))
        target = tuple(int(t) for t in self.target)
        if len(target) != self.quiver.vertex_count:
            raise ValueError(
                f"target has {len(target)} entries, expected {self.quiver.vertex_count}"
            )
        object.__setattr__(self, 'target', target)

    @classmethod
    def from_weight(cls, quiver: Quiver, alpha: Sequence[int],
                    weight: Sequence[int], field: GaloisField) -> 'MomentEquation':
        """Reduce an integer weight λ into F_q."""
        weight = quiver.weight_vector(weight)
        return cls(quiver, tuple(alpha), tuple(field.element(w) for w in weight))

    def is_trace_compatible(self, field: GaloisField) -> bool:
        """Σ_i target_i α_i = 0 in F_q, necessary for the fiber to be nonempty."""
        scalars = np.array([field.element(a) for a in self.alpha], dtype=np.int64)
        terms = field.mul(np.array(self.target, dtype=np.int64), scalars)
        return int(field.sum(terms, axis=0)) == 0

    def system(self):
        return moment_template(self.quiver, self.alpha)

    def rhs(self, field: GaloisField) -> np.ndarray:
        for t in self.target:
            if not 0 <= t < field.q:
                raise ValueError(f"target entry {t} is not an element of F_{field.q}")
        _, diagonal = self.system()
        return moment_rhs(diagonal, self.target)


def _fiber_slice(payload, start: int, stop: int) -> int:
    quiver, alpha, target, field, entry_count, chunk_size = payload
    equation = MomentEquation(quiver, alpha, target)
    template, _ = equation.system()
    rhs = equation.rhs(field)
    total = 0
    for entries in entry_chunks(field, entry_count, start, stop, chunk_size):
        systems = template.build(field, entries)
        consistent, nullity = batched_affine_solve(field, systems, rhs)
        values, counts = np.unique(nullity[consistent], return_counts=True)
        total += sum(int(c) * field.q ** int(n) for n, c in zip(values, counts))
    return total


def moment_fiber_count(equation: MomentEquation, field: GaloisField,
                       config: Optional[KacConfig] = None) -> int:
    """
    |μ^{-1}(Λ)(F_q)| for the doubled quiver.

    For each x ∈ Rep(Q, α) the condition on y is linear; the fiber over x has
    q^(nullity) points when the system is consistent and none otherwise.

    Raises:
        BudgetExceededError: If q^N exceeds the enumeration budget
    """
    config = config or KacConfig.default()
    entry_count = rep_space_dimension(equation.quiver, equation.alpha)
    total = field.q ** entry_count
    check_budget(f"Rep(Q, {equation.alpha}) over F_{field.q} (q^{entry_count})",
                 total, config.budgets.enumeration_budget)
    logger.info(
        f"Moment fiber count for {equation.alpha} over F_{field.q}: {total} base points"
    )
    payload = (equation.quiver, equation.alpha, equation.target, field,
               entry_count, config.parallel.chunk_size)
    return run_partitioned(_fiber_slice, payload, total, config.parallel.workers)


def moment_fiber_over(equation: MomentEquation, x: Representation,
                      field: GaloisField) -> AffineSolution:
    """All y with μ(x, y) = Λ, as an affine solution set."""
    if x.quiver != equation.quiver or x.dims != equation.alpha:
        raise ValueError("Representation does not match the moment equation")
    template, _ = equation.system()
    system = template.build(field, x.entries()[None, :])[0]
    return solve_affine(field, system, equation.rhs(field))


def join_double(x: Representation, y: np.ndarray) -> Representation:
    """The representation (x, y) of the double quiver."""
    double = x.quiver.double()
    entries = np.concatenate([x.entries(), np.asarray(y, dtype=np.int64)])
    return Representation.from_entries(double, x.field, x.dims, entries)


def split_double(v: Representation) -> Tuple[Representation, np.ndarray]:
    """Inverse of ``join_double``."""
    if not v.quiver.is_doubled:
        raise ValueError("Representation is not of a doubled quiver")
    base = v.quiver.undouble()
    m = v.quiver.base_arrow_count
    x = Representation(base, v.field, v.dims, v.matrices[:m])
    y = np.concatenate([b.reshape(-1) for b in v.matrices[m:]]) if m else \
        np.zeros(0, dtype=np.int64)
    return x, y


def moment_fiber_points(equation: MomentEquation, field: GaloisField,
                        budget: int) -> Iterator[Representation]:
    """
    Every point of μ^{-1}(Λ)(F_q) as a representation of the double quiver.

    Raises:
        BudgetExceededError: If the double's representation space exceeds the budget
    """
    double = equation.quiver.double()
    check_budget(
        f"Rep(Q̄, {equation.alpha}) over F_{field.q}",
        field.q ** rep_space_dimension(double, equation.alpha), budget
    )
    return _fiber_points(equation, field, budget)


def _fiber_points(equation: MomentEquation, field: GaloisField,
                  budget: int) -> Iterator[Representation]:
    for x in enumerate_reps(equation.quiver, equation.alpha, field, budget):
        for y in moment_fiber_over(equation, x, field).points(field):
            yield join_double(x, y)


def moment_map(v: Representation) -> List[np.ndarray]:
    """
    μ(x, y) vertex by vertex: Σ_{h(a)=i} x_a y_a − Σ_{t(a)=i} y_a x_a.
    """
    x, _ = split_double(v)
    field = v.field
    m = v.quiver.base_arrow_count
    result = [np.zeros((d, d), dtype=np.int64) for d in v.dims]
    for a, (t, h) in enumerate(x.quiver.arrows):
        xa, ya = v.matrices[a], v.matrices[m + a]
        result[h] = field.add(result[h], field.matmul(xa, ya))
        result[t] = field.sub(result[t], field.matmul(ya, xa))
    return result
