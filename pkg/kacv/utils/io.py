"""Centralized I/O operations."""

from pathlib import Path
from typing import Any, Union

import yaml

from .validation import validate_file_exists


def read_yaml(path: Union[str, Path]) -> Any:
    """
    Read YAML file.

    Args:
        path: Path to YAML file

    Returns:
        Parsed YAML data (``{}`` for an empty file)

    Raises:
        FileNotFoundError: If file doesn't exist
        yaml.YAMLError: If file is not valid YAML
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")

    with open(path, 'r', encoding='utf-8') as f:
        data = yaml.safe_load(f)
    return {} if data is None else data


def write_yaml(data: Any, path: Union[str, Path]) -> None:
    """
    Write data to YAML file, preserving key order.

    Args:
        data: Data to write (plain Python types)
        path: Output file path
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    with open(path, 'w', encoding='utf-8') as f:
        yaml.safe_dump(data, f, sort_keys=False, default_flow_style=False)


def read_text(path: Union[str, Path]) -> str:
    """Read a UTF-8 text file."""
    return validate_file_exists(path).read_text(encoding='utf-8')
