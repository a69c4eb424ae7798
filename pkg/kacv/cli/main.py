"""Main CLI entry point."""

import argparse
import sys
from typing import List, Optional

from ..config import SUPPORTED_CHECKS, SUPPORTED_METHODS, CHECK_ALL, METHOD_BOTH
from ..utils.errors import BudgetExceededError
from ..utils.logging import get_logger, set_global_level
from .base import add_common_arguments, add_input_arguments
from .commands import HnCommand, KacCommand, MultCommand, VerifyCommand

logger = get_logger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

COMMANDS = {
    'kac': KacCommand,
    'verify': VerifyCommand,
    'mult': MultCommand,
    'hn': HnCommand,
}


def create_parser() -> argparse.ArgumentParser:
    """Create argument parser for CLI."""
    parser = argparse.ArgumentParser(
        prog='kacv',
        description='Kac polynomials, root multiplicities and HN identities for quivers'
    )

    common = argparse.ArgumentParser(add_help=False)
    add_common_arguments(common)
    add_input_arguments(common)

    subparsers = parser.add_subparsers(
        dest='command',
        help='Available commands'
    )

    kac_parser = subparsers.add_parser(
        'kac',
        parents=[common],
        help='Count absolutely indecomposables or interpolate the Kac polynomial'
    )
    kac_parser.add_argument(
        '--method',
        choices=SUPPORTED_METHODS,
        default=METHOD_BOTH,
        help='Counting method; both compares them at every --q'
    )

    verify_parser = subparsers.add_parser(
        'verify',
        parents=[common],
        help='Verify Conjectures A and B, the X = X_s identity and the HN identities'
    )
    verify_parser.add_argument(
        '--check',
        choices=SUPPORTED_CHECKS,
        default=CHECK_ALL,
        help='Which verification to run'
    )
    verify_parser.add_argument(
        '--method',
        choices=SUPPORTED_METHODS,
        default=METHOD_BOTH,
        help='Sampling method for the Kac polynomial'
    )

    subparsers.add_parser(
        'mult',
        parents=[common],
        help='Root multiplicity and PBW table for the box --dim'
    )

    hn_parser = subparsers.add_parser(
        'hn',
        parents=[common],
        help='HN-type histogram of all representations of dimension --dim'
    )
    hn_parser.add_argument(
        '--double',
        action='store_true',
        help='Sweep representations of the double quiver'
    )

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main CLI entry point.

    Returns:
        0 if every check passed, 1 if any failed, 2 on usage or budget errors
    """
    parser = create_parser()
    args = parser.parse_args(argv)

    if args.command not in COMMANDS:
        parser.print_help(sys.stderr)
        return EXIT_ERROR

    set_global_level('ERROR' if args.quiet else args.log_level)
    command = COMMANDS[args.command](args)

    try:
        report = command.execute()
    except BudgetExceededError as e:
        print(f"error: {e}. Raise --budget or shrink the input.", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as e:
        logger.error(f"Command failed: {e}", exc_info=True)
        return EXIT_ERROR

    sys.stdout.write(report.render(timings=args.timings))
    if args.output:
        report.save(args.output)
    return EXIT_PASS if report.exit_code == 0 else EXIT_FAIL


if __name__ == '__main__':
    sys.exit(main())
