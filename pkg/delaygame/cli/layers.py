import argparse
from typing import Any

from rich.table import Table

from delaygame.config import DelayGameConfig
from delaygame.tracking import layer_sequence, layer_summary

from ._utils import add_instance_argument, console, emit, key_value_table, read_instance


def add_layers_subparser(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        'layers',
        parents=parents,
        help='Show the preperiod, period and sizes of the behavior-function layers',
    )
    add_instance_argument(parser)


def _render_layers(payload: dict[str, Any]) -> None:
    result = payload['result']
    console.print(
        key_value_table(
            'Layer sequence',
            {'preperiod': result['preperiod'], 'period': result['period'], 'layers': result['layer_count']},
        ),
    )
    table = Table(show_header=True, header_style='bold magenta', box=None)
    table.add_column('k', justify='right', style='cyan')
    table.add_column('functions', justify='right', style='white')
    for k, size in enumerate(result['layer_sizes']):
        table.add_row(str(k), str(size))
    console.print(table)


def handle_layers_command(config: DelayGameConfig, args: argparse.Namespace) -> int:
    ls = layer_sequence(read_instance(args), config.layer_cap)
    emit(config, {'result': layer_summary(ls), 'meta': {}}, _render_layers)
    return 0
