"""CLI module for kacv."""

from .main import main, create_parser

__all__ = ['main', 'create_parser']
