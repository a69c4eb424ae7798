"""Counters evaluating Kac polynomials at a single field."""

from .base import KacCounter
from .direct import DirectCounter
from .moment import MomentCounter

__all__ = [
    'KacCounter',
    'DirectCounter',
    'MomentCounter'
]
