"""Harder-Narasimhan theory for slope functions on quiver representations."""

from .slope import (
    SlopeValue,
    slope,
    total_order_key,
    total_order_cmp,
    slope_destabilizing,
    slope_semistable,
    slope_stable
)
from .filtration import HNType, HNFiltration, maximal_destabilizing, hn_filtration
from .counting import (
    SlopeDecomposition,
    slope_decompositions,
    m_closed,
    m_values,
    m_recursive,
    MIdentity,
    m_identity,
    verify_m_equals_r
)
from .equivalence import king_slope_equivalence_check, hom_vanishing_check

__all__ = [
    'SlopeValue',
    'slope',
    'total_order_key',
    'total_order_cmp',
    'slope_destabilizing',
    'slope_semistable',
    'slope_stable',
    'HNType',
    'HNFiltration',
    'maximal_destabilizing',
    'hn_filtration',
    'SlopeDecomposition',
    'slope_decompositions',
    'm_closed',
    'm_values',
    'm_recursive',
    'MIdentity',
    'm_identity',
    'verify_m_equals_r',
    'king_slope_equivalence_check',
    'hom_vanishing_check'
]
