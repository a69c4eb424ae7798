"""Moment-map fibers, quiver-variety point counts and Kac polynomials."""

from .fibers import (
    MomentEquation,
    moment_fiber_count,
    moment_fiber_over,
    moment_fiber_points,
    moment_map,
    join_double,
    split_double
)
from .stability import king_destabilizing, king_semistable, king_stable
from .points import (
    check_generic,
    x_point_count,
    kac_value,
    xs_point_count,
    verify_lambda_independence,
    verify_scaling_invariance
)
from .polynomial import KacPolynomial, kac_polynomial, betti_from_kac

__all__ = [
    'MomentEquation',
    'moment_fiber_count',
    'moment_fiber_over',
    'moment_fiber_points',
    'moment_map',
    'join_double',
    'split_double',
    'king_destabilizing',
    'king_semistable',
    'king_stable',
    'check_generic',
    'x_point_count',
    'kac_value',
    'xs_point_count',
    'verify_lambda_independence',
    'verify_scaling_invariance',
    'KacPolynomial',
    'kac_polynomial',
    'betti_from_kac'
]
