import argparse
from typing import Any

from rich.table import Table

from delaygame.config import DelayGameConfig

from ._utils import console, emit


def add_config_subparser(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    subparsers.add_parser('config', parents=parents, help='Show the effective settings and where they come from')


def _render_config(payload: dict[str, Any]) -> None:
    result = payload['result']
    sources = result['sources']
    if sources:
        console.print('[bold bright_blue]Configuration sources (in load order):[/bold bright_blue]')
        for i, source in enumerate(sources, 1):
            console.print(f'  [cyan]{i}.[/cyan] [white]{source}[/white]')
    else:
        console.print('[bold yellow]No configuration sources found, using defaults.[/bold yellow]')
    console.print()

    table = Table(show_header=True, header_style='bold magenta', box=None)
    table.add_column('Setting', style='bold green', no_wrap=True)
    table.add_column('Value', style='white')
    table.add_column('Source', style='cyan', no_wrap=True)
    for name, value in result['settings'].items():
        table.add_row(name, str(value), result['origins'].get(name, 'default'))
    console.print(table)


def handle_config_command(config: DelayGameConfig, _args: argparse.Namespace) -> int:
    payload = {
        'result': {'settings': config.settings(), 'sources': config.sources, 'origins': config.origins},
        'meta': {},
    }
    emit(config, payload, _render_config)
    return 0
