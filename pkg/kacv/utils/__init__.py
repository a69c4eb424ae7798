"""Utility modules for kacv."""

from .errors import (
    KacError,
    BudgetExceededError,
    BadPrimeError,
    NotGenericError,
    DivisibleDimensionError,
    InexactDivisionError,
    HNUniquenessError,
    ConjectureViolationError,
    QuiverFileError
)
from .io import read_yaml, write_yaml, read_text
from .parallel import partition_range, run_partitioned
from .validation import (
    validate_file_exists,
    validate_nonnegative_vector,
    exact_divide
)

__all__ = [
    'KacError',
    'BudgetExceededError',
    'BadPrimeError',
    'NotGenericError',
    'DivisibleDimensionError',
    'InexactDivisionError',
    'HNUniquenessError',
    'ConjectureViolationError',
    'QuiverFileError',
    'read_yaml',
    'write_yaml',
    'read_text',
    'partition_range',
    'run_partitioned',
    'validate_file_exists',
    'validate_nonnegative_vector',
    'exact_divide'
]
