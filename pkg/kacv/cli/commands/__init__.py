"""CLI command modules."""

from .kac import KacCommand
from .verify import VerifyCommand
from .mult import MultCommand
from .hn import HnCommand

__all__ = [
    'KacCommand',
    'VerifyCommand',
    'MultCommand',
    'HnCommand'
]
