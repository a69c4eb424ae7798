"""F_q-point counts of the quiver varieties X_λ and X_s."""

from typing import Optional, Sequence

from ..config import KacConfig
from ..core.forms import kac_degree, rep_space_dimension
from ..core.quiver import Quiver
from ..core.weights import is_generic_weight, offending_subvector
from ..fields.galois import GaloisField
from ..fields.groups import g_alpha_order
from ..representations.enumeration import check_budget
from ..utils.errors import BadPrimeError, NotGenericError
from ..utils.logging import get_logger
from ..utils.validation import exact_divide
from .fibers import MomentEquation, moment_fiber_count, moment_fiber_points
from .stability import king_stable

logger = get_logger(__name__)


def check_generic(quiver: Quiver, alpha: Sequence[int], weight: Sequence[int],
                  field: GaloisField, reduce_mod_p: bool = True) -> None:
    """
    Require λ generic for α over Z and, unless reduce_mod_p is False, after reduction mod p.

    Raises:
        NotGenericError: If λ is not generic over Z
        BadPrimeError: If p divides some λ·β
    """
    alpha = quiver.dim_vector(alpha)
    weight = quiver.weight_vector(weight)
    if not is_generic_weight(weight, alpha):
        raise NotGenericError(f"Weight {weight} is not generic for {alpha}")
    if not reduce_mod_p:
        return
    offending = offending_subvector(weight, alpha, field.p)
    if offending is not None:
        beta, value = offending
        raise BadPrimeError(field.p, beta, value)


def x_point_count(quiver: Quiver, alpha: Sequence[int], weight: Sequence[int],
                  field: GaloisField, config: Optional[KacConfig] = None) -> int:
    """
    #X_λ(F_q) = |μ^{-1}(λ)(F_q)| / |G(α)(F_q)|.

    G(α) acts freely on the fiber for generic λ, so the division is exact.

    Raises:
        NotGenericError, BadPrimeError: On a non-generic weight
        BudgetExceededError: If the enumeration exceeds the budget
    """
    check_generic(quiver, alpha, weight, field)
    equation = MomentEquation.from_weight(quiver, alpha, weight, field)
    fiber = moment_fiber_count(equation, field, config)
    return exact_divide(fiber, g_alpha_order(equation.alpha, field), 'X_λ point count')


def kac_value(quiver: Quiver, alpha: Sequence[int], weight: Sequence[int],
              field: GaloisField, config: Optional[KacConfig] = None) -> int:
    """a_α(q) = q^(−d) · #X_λ(F_q) with d = 1 − <α, α>."""
    points = x_point_count(quiver, alpha, weight, field, config)
    d = kac_degree(quiver, alpha)
    if d >= 0:
        return exact_divide(points, field.q ** d, 'Kac value')
    return points * field.q ** (-d)


def xs_point_count(quiver: Quiver, alpha: Sequence[int], weight: Sequence[int],
                   field: GaloisField, config: Optional[KacConfig] = None) -> int:
    """
    #X_s(F_q): λ-stable points of μ^{-1}(0)(F_q) divided by |G(α)(F_q)|.

    Stable points have trivial stabilizer in G(α), so the division is exact.

    Stability only sees λ over Z, so bad primes are allowed.

    Raises:
        NotGenericError: If λ is not generic for α
        BudgetExceededError: If Rep(Q̄, α)(F_q) exceeds the enumeration budget
    """
    check_generic(quiver, alpha, weight, field, reduce_mod_p=False)
    config = config or KacConfig.default()
    alpha = quiver.dim_vector(alpha)
    weight = quiver.weight_vector(weight)
    double = quiver.double()
    cost = field.q ** rep_space_dimension(double, alpha)
    check_budget(f"Rep(Q̄, {alpha}) over F_{field.q}", cost,
                 config.budgets.enumeration_budget)

    zero = MomentEquation(quiver, alpha, tuple(0 for _ in alpha))
    stable = 0
    for point in moment_fiber_points(zero, field, config.budgets.enumeration_budget):
        if king_stable(point, weight, config.budgets.subrep_budget):
            stable += 1
    logger.info(f"X_s over F_{field.q} for {alpha}: {stable} stable points")
    return exact_divide(stable, g_alpha_order(alpha, field), 'X_s point count')


def verify_lambda_independence(quiver: Quiver, alpha: Sequence[int], weight: Sequence[int],
                               field: GaloisField,
                               config: Optional[KacConfig] = None) -> bool:
    """#X_λ(F_q) = #X_s(F_q)."""
    return (x_point_count(quiver, alpha, weight, field, config)
            == xs_point_count(quiver, alpha, weight, field, config))


def verify_scaling_invariance(quiver: Quiver, alpha: Sequence[int], weight: Sequence[int],
                              field: GaloisField,
                              config: Optional[KacConfig] = None) -> bool:
    """The fiber size over t·λ is the same for every t ∈ F_q^*."""
    check_generic(quiver, alpha, weight, field)
    base = MomentEquation.from_weight(quiver, alpha, weight, field)
    counts = set()
    for t in range(1, field.q):
        target = tuple(int(field.mul(t, value)) for value in base.target)
        counts.add(moment_fiber_count(MomentEquation(quiver, base.alpha, target), field, config))
    return len(counts) == 1
