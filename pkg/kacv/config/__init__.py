"""Configuration module for kacv."""

from .budgets import (
    BudgetConfig,
    InterpolationConfig,
    ParallelConfig,
    KacConfig,
    load_config
)

from .constants import (
    # Limits
    DEFAULT_BUDGET,
    DEFAULT_MAX_PRIME,
    DEFAULT_WORKERS,
    MAX_EXTENSION_DEGREE,
    MAX_BOX_HEIGHT,
    MAX_WEIGHT_NORM,
    # Methods
    METHOD_DIRECT,
    METHOD_MOMENT,
    METHOD_BOTH,
    METHOD_AUTO,
    SUPPORTED_METHODS,
    SAMPLING_METHODS,
    # Checks
    CHECK_CONJ_A,
    CHECK_CONJ_B,
    CHECK_APPENDIX,
    CHECK_HN,
    CHECK_ALL,
    SUPPORTED_CHECKS,
    # Statuses
    STATUS_PASS,
    STATUS_FAIL,
    STATUS_INFO,
    STATUS_SKIP,
    # Presets
    SUPPORTED_PRESETS
)

__all__ = [
    'BudgetConfig',
    'InterpolationConfig',
    'ParallelConfig',
    'KacConfig',
    'load_config',
    'DEFAULT_BUDGET',
    'DEFAULT_MAX_PRIME',
    'DEFAULT_WORKERS',
    'MAX_EXTENSION_DEGREE',
    'MAX_BOX_HEIGHT',
    'MAX_WEIGHT_NORM',
    'METHOD_DIRECT',
    'METHOD_MOMENT',
    'METHOD_BOTH',
    'METHOD_AUTO',
    'SUPPORTED_METHODS',
    'SAMPLING_METHODS',
    'CHECK_CONJ_A',
    'CHECK_CONJ_B',
    'CHECK_APPENDIX',
    'CHECK_HN',
    'CHECK_ALL',
    'SUPPORTED_CHECKS',
    'STATUS_PASS',
    'STATUS_FAIL',
    'STATUS_INFO',
    'STATUS_SKIP',
    'SUPPORTED_PRESETS'
]
