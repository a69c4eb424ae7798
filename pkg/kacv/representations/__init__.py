"""Representations of quivers over finite fields."""

from .representation import Representation, arrow_offsets
from .enumeration import (
    enumeration_cost,
    check_budget,
    index_entries,
    entry_chunks,
    enumerate_reps
)
from .linear_systems import (
    LinearTemplate,
    intertwiner_template,
    moment_template,
    moment_rhs
)
from .endomorphisms import (
    EndAlgebra,
    end_algebra,
    hom_dimension,
    ext1_dimension,
    endomorphism_dimensions,
    locality,
    is_indecomposable,
    is_absolutely_indecomposable
)
from .subreps import (
    Subrepresentation,
    gaussian_binomial,
    subspace_count,
    subspaces,
    subrepresentations,
    subrepresentation_cost,
    is_invariant,
    zero_subrepresentation,
    full_subrepresentation,
    restrict_rep,
    quotient_rep,
    lift_from_quotient
)
from .counting import (
    IsoclassCount,
    count_abs_indec_classes,
    count_isoclasses_bruteforce
)

__all__ = [
    'Representation',
    'arrow_offsets',
    'enumeration_cost',
    'check_budget',
    'index_entries',
    'entry_chunks',
    'enumerate_reps',
    'LinearTemplate',
    'intertwiner_template',
    'moment_template',
    'moment_rhs',
    'EndAlgebra',
    'end_algebra',
    'hom_dimension',
    'ext1_dimension',
    'endomorphism_dimensions',
    'locality',
    'is_indecomposable',
    'is_absolutely_indecomposable',
    'Subrepresentation',
    'gaussian_binomial',
    'subspace_count',
    'subspaces',
    'subrepresentations',
    'subrepresentation_cost',
    'is_invariant',
    'zero_subrepresentation',
    'full_subrepresentation',
    'restrict_rep',
    'quotient_rep',
    'lift_from_quotient',
    'IsoclassCount',
    'count_abs_indec_classes',
    'count_isoclasses_bruteforce'
]
