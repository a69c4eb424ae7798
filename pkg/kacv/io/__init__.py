"""Quiver file input and output."""

from .quiver_file import (
    QuiverFile,
    parse_quiver_file,
    load_quiver_file,
    render_quiver_file
)

__all__ = [
    'QuiverFile',
    'parse_quiver_file',
    'load_quiver_file',
    'render_quiver_file'
]
