"""Input validation utilities."""

from pathlib import Path
from typing import Sequence, Union

from .errors import InexactDivisionError


def validate_file_exists(path: Union[str, Path]) -> Path:
    """
    Validate that file exists.

    Args:
        path: File path

    Returns:
        Path object

    Raises:
        FileNotFoundError: If file doesn't exist
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")
    return path


def validate_nonnegative_vector(values: Sequence[int], length: int,
                                name: str = 'vector') -> tuple:
    """
    Validate an integer vector of the given length with entries >= 0.

    Returns:
        The vector as a tuple of ints

    Raises:
        ValueError: On wrong length or negative entries
    """
    vector = tuple(int(v) for v in values)
    if len(vector) != length:
        raise ValueError(
            f"{name} has {len(vector)} entries, expected {length}"
        )
    if any(v < 0 for v in vector):
        raise ValueError(f"{name} has negative entries: {vector}")
    return vector


def exact_divide(numerator: int, denominator: int, context: str = '') -> int:
    """
    Divide integers, insisting on a zero remainder.

    Raises:
        InexactDivisionError: If denominator does not divide numerator
    """
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InexactDivisionError(numerator, denominator, context)
    return quotient
