"""Commands that build, solve or export a single parity game."""

import argparse
import time
from pathlib import Path
from typing import Any

from delaygame.arena import ParityGame, build_abstract_game, build_queue_game, export_pg, game_stats, import_pg
from delaygame.automaton import Dpa
from delaygame.config import DelayGameConfig
from delaygame.errors import InstanceError, ResourceLimitError
from delaygame.logging import get_logger
from delaygame.solver import brute_force_solve, solve_parity, verify_solution, winner
from delaygame.tracking import layer_at, layer_sequence

from ._utils import add_instance_argument, console, emit, key_value_table, non_negative_int, positive_int, read_instance

logger = get_logger(__name__)


def add_solve_subparsers(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    gk_parser = subparsers.add_parser('solve-gk', parents=parents, help='Solve the abstract game for one k')
    add_instance_argument(gk_parser)
    gk_parser.add_argument('--k', type=positive_int, required=True, help='Block length, at least 1')

    queue_parser = subparsers.add_parser('solve-queue', parents=parents, help='Solve the delay game for one k')
    add_instance_argument(queue_parser)
    queue_parser.add_argument('--k', type=non_negative_int, required=True, help='Lookahead')

    pg_parser = subparsers.add_parser('solve-pg', parents=parents, help='Solve a game in the interchange format')
    pg_parser.add_argument('game', type=Path, help='Game file')
    pg_parser.add_argument('--regions', action='store_true', help='Include winning regions and strategies')

    for parser in (gk_parser, queue_parser, pg_parser):
        parser.add_argument(
            '--cross-check',
            action='store_true',
            help='Also solve by strategy enumeration and verify the solution',
        )


def add_export_subparser(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser('export-pg', parents=parents, help='Write a game in the interchange format')
    add_instance_argument(parser)
    which = parser.add_mutually_exclusive_group(required=True)
    which.add_argument('--gk', type=positive_int, metavar='K', help='Export the abstract game for block length K')
    which.add_argument('--queue', type=non_negative_int, metavar='K', help='Export the delay game for lookahead K')
    parser.add_argument('--out', type=Path, required=True, help='Destination file')


def _abstract_game(dpa: Dpa, k: int, config: DelayGameConfig) -> ParityGame:
    ls = layer_sequence(dpa, config.layer_cap)
    try:
        return build_abstract_game(dpa, layer_at(ls, k), vertex_budget=config.vertex_budget)
    except ResourceLimitError as e:
        raise e.at_k(k) from e


def _solved(
    kind: str,
    game: ParityGame,
    started: float,
    extra: dict[str, Any],
    *,
    regions: bool = False,
    guard: int | None = None,
) -> dict[str, Any]:
    sol = solve_parity(game)
    result = {'game': kind, **extra, 'winner': winner(game, sol).name, 'stats': game_stats(game)}
    if regions:
        result['regions'] = sol.to_dict()
    if guard is not None:
        reference = brute_force_solve(game, guard=guard)
        result['cross_check'] = {
            'agrees': reference.win_O == sol.win_O,
            'verified': verify_solution(game, sol),
        }
        if not all(result['cross_check'].values()):
            logger.warning('cross_check_failed', kind=kind, **result['cross_check'])
    return {'result': result, 'meta': {'wall_time_s': time.perf_counter() - started}}


def _guard(config: DelayGameConfig, args: argparse.Namespace) -> int | None:
    return config.enumeration_guard if args.cross_check else None


def _render_solved(payload: dict[str, Any]) -> None:
    result = payload['result']
    rows = {key: value for key, value in result.items() if key not in ('stats', 'regions', 'cross_check')}
    rows.update(result['stats'])
    for key, value in result.get('cross_check', {}).items():
        rows[f'cross-check {key}'] = value
    console.print(key_value_table('Parity game', rows))


def handle_solve_gk_command(config: DelayGameConfig, args: argparse.Namespace) -> int:
    started = time.perf_counter()
    game = _abstract_game(read_instance(args), args.k, config)
    emit(config, _solved('abstract', game, started, {'k': args.k}, guard=_guard(config, args)), _render_solved)
    return 0


def handle_solve_queue_command(config: DelayGameConfig, args: argparse.Namespace) -> int:
    started = time.perf_counter()
    game = build_queue_game(read_instance(args), args.k, vertex_budget=config.vertex_budget)
    emit(config, _solved('queue', game, started, {'k': args.k}, guard=_guard(config, args)), _render_solved)
    return 0


def handle_solve_pg_command(config: DelayGameConfig, args: argparse.Namespace) -> int:
    started = time.perf_counter()
    try:
        game = import_pg(args.game.read_text(encoding='utf-8'))
    except (OSError, ValueError) as e:
        raise InstanceError(str(e), location=str(args.game)) from e
    payload = _solved(
        'imported',
        game,
        started,
        {'initial': game.initial},
        regions=args.regions,
        guard=_guard(config, args),
    )
    emit(config, payload, _render_solved)
    return 0


def handle_export_pg_command(config: DelayGameConfig, args: argparse.Namespace) -> int:
    dpa = read_instance(args)
    if args.gk is not None:
        kind, k = 'abstract', args.gk
        game = _abstract_game(dpa, k, config)
    else:
        kind, k = 'queue', args.queue
        game = build_queue_game(dpa, k, vertex_budget=config.vertex_budget)
    try:
        args.out.write_text(export_pg(game), encoding='utf-8')
    except OSError as e:
        raise InstanceError(f'cannot write game: {e}', location=str(args.out)) from e
    logger.info('game_exported', path=str(args.out), kind=kind, k=k, vertices=game.vertex_count)
    payload = {'result': {'game': kind, 'k': k, 'path': str(args.out), 'stats': game_stats(game)}, 'meta': {}}
    emit(config, payload, _render_solved)
    return 0
