"""Kac-Moody root multiplicities and PBW dimensions."""

from .peterson import MultTable, box_vectors, root_multiplicities, is_root
from .pbw import GradedSeries, pbw_dimensions, pbw_dimensions_bruteforce

__all__ = [
    'MultTable',
    'box_vectors',
    'root_multiplicities',
    'is_root',
    'GradedSeries',
    'pbw_dimensions',
    'pbw_dimensions_bruteforce'
]
