"""Shared utilities for CLI modules."""

import argparse
import json
import sys
from collections.abc import Callable
from typing import Any

from rich.console import Console
from rich.table import Table

from delaygame.automaton import Dpa, load_dpa
from delaygame.config import DelayGameConfig

console = Console()

REFERENCE_NAMES = ('d_univ', 'd_empty', 'd_pred1', 'd_pred2')


def reference_completer(**kwargs: Any) -> list[str]:  # noqa: ARG001
    # kwargs is required by argcomplete interface, even if unused
    """Offer the shipped reference instances for argcomplete completion."""
    return [f'@delaygame:resources/instances/{name}.json' for name in REFERENCE_NAMES]


def add_instance_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        'instance',
        help='Automaton instance: a JSON file or an @delaygame:resources/instances/<name>.json reference',
    ).completer = reference_completer


def read_instance(args: argparse.Namespace) -> Dpa:
    return load_dpa(args.instance)


def write_json(payload: dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + '\n')


def emit(
    config: DelayGameConfig,
    payload: dict[str, Any],
    render_text: Callable[[dict[str, Any]], None],
) -> None:
    """Print ``payload`` as JSON or hand it to ``render_text``; never both."""
    if config.output == 'json':
        write_json(payload)
    else:
        render_text(payload)


def key_value_table(title: str, rows: dict[str, Any]) -> Table:
    table = Table(title=title, show_header=False, box=None, title_justify='left', title_style='bold bright_blue')
    table.add_column('Field', style='bold green', no_wrap=True)
    table.add_column('Value', style='white')
    for key, value in rows.items():
        table.add_row(key, '-' if value is None else str(value))
    return table


def steps_table(title: str, steps: list[dict[str, Any]]) -> Table:
    table = Table(title=title, show_header=True, header_style='bold magenta', box=None, title_justify='left')
    table.add_column('k', justify='right', style='cyan')
    table.add_column('winner', style='white')
    for step in steps:
        style = 'green' if step['winner'] == 'O' else 'red'
        table.add_row(str(step['k']), f'[{style}]{step["winner"]}[/{style}]')
    return table


def positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        msg = f'expected a positive integer, got {value}'
        raise argparse.ArgumentTypeError(msg)
    return number


def non_negative_int(value: str) -> int:
    number = int(value)
    if number < 0:
        msg = f'expected a non-negative integer, got {value}'
        raise argparse.ArgumentTypeError(msg)
    return number
