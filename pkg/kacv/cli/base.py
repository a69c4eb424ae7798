"""Base classes and utilities for CLI commands."""

import argparse
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Tuple

from ..config import (
    DEFAULT_BUDGET,
    DEFAULT_MAX_PRIME,
    DEFAULT_WORKERS,
    KacConfig,
    METHOD_BOTH,
    SUPPORTED_PRESETS,
    load_config
)
from ..config.constants import PRESET_DEFAULT
from ..io import QuiverFile, load_quiver_file
from ..pipeline import Report, VerificationContext, VerificationPipeline, VerificationStage
from ..utils.logging import get_logger

logger = get_logger(__name__)


class BaseCommand(ABC):
    """Base class for CLI commands."""

    name: str = ''

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.logger = get_logger(f"kacv.cli.{self.__class__.__name__}")

    @abstractmethod
    def stages(self) -> List[VerificationStage]:
        """Stages this command runs."""
        pass

    def execute(self) -> Report:
        """Build the context, run the stages and return the report."""
        config = self.load_config()
        quiver_file = self.load_input(self.args.file)
        context = self.build_context(quiver_file, config)
        pipeline = VerificationPipeline(self.stages())
        return pipeline.run(self.name, context, self.header(context))

    def load_config(self) -> KacConfig:
        return load_config(
            getattr(self.args, 'config_file', None),
            getattr(self.args, 'preset', PRESET_DEFAULT),
            budget=self.args.budget,
            max_prime=self.args.max_prime,
            workers=self.args.workers
        )

    def load_input(self, path: str) -> QuiverFile:
        """Load the quiver file."""
        self.logger.info(f"Loading quiver from {path}")
        return load_quiver_file(path)

    def build_context(self, quiver_file: QuiverFile, config: KacConfig) -> VerificationContext:
        weight = quiver_file.weight(self.args.weight) if self.args.weight else None
        return VerificationContext(
            quiver=quiver_file.quiver,
            alpha=quiver_file.dim(self.args.dim),
            config=config,
            orders=tuple(self.args.q or ()),
            method=getattr(self.args, 'method', METHOD_BOTH),
            weight=weight,
            double=getattr(self.args, 'double', False)
        )

    def header(self, context: VerificationContext) -> Dict[str, Any]:
        """Ordered command echo for the first report line."""
        return {
            'file': self.args.file,
            'dim': context.alpha,
            'weight': context.weight
        }


def parse_orders(text: str) -> Tuple[int, ...]:
    """Parse a comma-separated list of field orders."""
    try:
        orders = tuple(int(part) for part in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers like 2,3,4, got '{text}'")
    if any(q < 2 for q in orders):
        raise argparse.ArgumentTypeError(f"field orders must be at least 2, got '{text}'")
    return orders


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    """Add common arguments to parser."""
    parser.add_argument(
        '--log-level',
        default='WARNING',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
        help='Logging level (logs go to stderr)'
    )
    parser.add_argument(
        '--quiet',
        action='store_true',
        help='Suppress log output below ERROR'
    )


def add_input_arguments(parser: argparse.ArgumentParser) -> None:
    """Arguments shared by every subcommand."""
    parser.add_argument('file', help='Quiver file')
    parser.add_argument('--dim', required=True, help='Dimension vector label')
    parser.add_argument('--weight', help='Weight vector label')
    parser.add_argument('--q', type=parse_orders,
                        help='Comma-separated field orders, e.g. 2,3,4')
    parser.add_argument('--budget', type=int, default=None,
                        help=f'Enumeration budget (default {DEFAULT_BUDGET})')
    parser.add_argument('--max-prime', type=int, default=None,
                        help=f'Largest prime sampled for interpolation (default {DEFAULT_MAX_PRIME})')
    parser.add_argument('--workers', type=int, default=None,
                        help=f'Worker processes (default {DEFAULT_WORKERS})')
    parser.add_argument('--config-file', help='YAML file with configuration overrides')
    parser.add_argument('--preset', choices=SUPPORTED_PRESETS, default=PRESET_DEFAULT,
                        help='Configuration preset')
    parser.add_argument('--output', '-o', help='Also write the report as YAML')
    parser.add_argument('--timings', action='store_true',
                        help='Include elapsed milliseconds per check')
