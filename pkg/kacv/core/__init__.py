"""Quivers, root-lattice forms and generic weights."""

from .quiver import Quiver, DimVector, WeightVector, Arrow
from .forms import (
    euler_form,
    symmetric_form,
    cartan_matrix,
    weight_dot,
    height,
    is_indivisible,
    kac_degree,
    rep_space_dimension,
    quotient_dimension
)
from .weights import (
    sub_dimension_vectors,
    proper_subvectors,
    is_generic_weight,
    find_generic_weight,
    default_slope_weight,
    bad_primes,
    offending_subvector,
    is_admissible_prime
)

__all__ = [
    'Quiver',
    'DimVector',
    'WeightVector',
    'Arrow',
    'euler_form',
    'symmetric_form',
    'cartan_matrix',
    'weight_dot',
    'height',
    'is_indivisible',
    'kac_degree',
    'rep_space_dimension',
    'quotient_dimension',
    'sub_dimension_vectors',
    'proper_subvectors',
    'is_generic_weight',
    'find_generic_weight',
    'default_slope_weight',
    'bad_primes',
    'offending_subvector',
    'is_admissible_prime'
]
