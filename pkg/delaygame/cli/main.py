"""Approximate and compute the minimal lookahead of delay games.

Instances are JSON files or @delaygame:resources/instances/<name>.json
references (d_univ, d_empty, d_pred1, d_pred2).

Exit codes: 0 success, 1 usage error, 2 unreadable or invalid input,
3 resource limit exceeded.
"""

import argparse
import sys
import traceback
from collections.abc import Sequence
from pathlib import Path
from typing import NoReturn

import argcomplete

from delaygame import __version__
from delaygame.config import load_config
from delaygame.errors import DelayGameError, UsageError
from delaygame.logging import configure_logging, get_logger

from ._utils import positive_int
from .config import add_config_subparser, handle_config_command
from .games import (
    add_export_subparser,
    add_solve_subparsers,
    handle_export_pg_command,
    handle_solve_gk_command,
    handle_solve_pg_command,
    handle_solve_queue_command,
)
from .generate import add_gen_subparser, handle_gen_command
from .layers import add_layers_subparser, handle_layers_command
from .lookahead import (
    add_approx_subparser,
    add_compare_subparser,
    add_exact_subparser,
    handle_approx_command,
    handle_compare_command,
    handle_exact_command,
)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(f'{self.prog}: {message}')


def _common_flags() -> argparse.ArgumentParser:
    """Flags accepted both before and after the subcommand."""
    common = _ArgumentParser(add_help=False)
    arg = common.add_argument
    arg('--json', action='store_true', default=argparse.SUPPRESS, help='Print the report as JSON')
    arg('--vertex-budget', type=positive_int, default=argparse.SUPPRESS, help='Largest game to build, in vertices')
    arg('--layer-cap', type=positive_int, default=argparse.SUPPRESS, help='Most behavior-function layers to explore')
    arg('--parallelism', type=positive_int, default=argparse.SUPPRESS, help='Worker processes for the scan')
    arg(
        '--enumeration-guard',
        type=positive_int,
        default=argparse.SUPPRESS,
        help='Most positional strategies --cross-check may enumerate',
    )
    return common


def create_parser() -> argparse.ArgumentParser:
    """Create the main argument parser for the delaygame CLI."""
    common = _common_flags()
    parser = _ArgumentParser(
        prog='delaygame',
        description='Minimal lookahead for delay games with parity winning conditions',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
        parents=[common],
    )
    arg = parser.add_argument
    arg('--version', action='version', version=__version__)
    arg('--config', '-c', type=Path, help='Configuration file (delaygame.yaml or a pyproject.toml)')
    arg('--verbose', '-v', action='store_true', help='Enable verbose output')
    subparsers = parser.add_subparsers(dest='command', help='Available commands', required=True)

    parents = [common]
    add_approx_subparser(subparsers, parents)
    add_exact_subparser(subparsers, parents)
    add_compare_subparser(subparsers, parents)
    add_solve_subparsers(subparsers, parents)
    add_gen_subparser(subparsers, parents)
    add_export_subparser(subparsers, parents)
    add_layers_subparser(subparsers, parents)
    add_config_subparser(subparsers, parents)

    return parser


def _flag_overrides(args: argparse.Namespace) -> dict[str, object]:
    return {
        'output': 'json' if getattr(args, 'json', False) else None,
        'vertex_budget': getattr(args, 'vertex_budget', None),
        'layer_cap': getattr(args, 'layer_cap', None),
        'parallelism': getattr(args, 'parallelism', None),
        'enumeration_guard': getattr(args, 'enumeration_guard', None),
        'scan': getattr(args, 'scan', None),
    }


command_handlers = {
    'approx': handle_approx_command,
    'exact': handle_exact_command,
    'compare': handle_compare_command,
    'solve-gk': handle_solve_gk_command,
    'solve-queue': handle_solve_queue_command,
    'solve-pg': handle_solve_pg_command,
    'gen': handle_gen_command,
    'export-pg': handle_export_pg_command,
    'layers': handle_layers_command,
    'config': handle_config_command,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Main entry point for the delaygame CLI."""
    argv = list(sys.argv[1:] if argv is None else argv)
    # configure before parsing so usage errors reach stderr
    configure_logging(verbose='--verbose' in argv or '-v' in argv)
    logger = get_logger(__name__)

    parser = create_parser()
    argcomplete.autocomplete(parser)

    try:
        args = parser.parse_args(argv)
        config = load_config(args.config, overrides=_flag_overrides(args))
        logger.debug('config_loaded', sources=config.sources, **config.settings())
        # argparse will ensure args.command is one of the keys
        return command_handlers[args.command](config, args)
    except SystemExit as e:
        # --help and --version
        return e.code if isinstance(e.code, int) else 0
    except DelayGameError as e:
        logger.error('command_failed', error=str(e), error_type=type(e).__name__, exit_code=e.exit_code)
        return e.exit_code
    except Exception as e:
        logger.exception(
            'exception',
            error=str(e),
            error_type=type(e).__name__,
            traceback=traceback.format_exc(),
        )
        return 1


if __name__ == '__main__':  # pragma: no cover
    sys.exit(main())
