"""The approx, exact and compare commands."""

import argparse
from typing import Any

from delaygame.config import DelayGameConfig
from delaygame.lookahead import approx_min_lookahead, compare, exact_min_lookahead

from ._utils import (
    add_instance_argument,
    console,
    emit,
    key_value_table,
    non_negative_int,
    positive_int,
    read_instance,
    steps_table,
)


def add_approx_subparser(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        'approx',
        parents=parents,
        help='Approximate the minimal lookahead within a factor of two',
    )
    add_instance_argument(parser)
    parser.add_argument(
        '--binary-search',
        action='store_const',
        const='binary',
        dest='scan',
        help='Binary-search k; assumes the abstract games are monotone in k',
    )
    parser.add_argument('--cap', type=positive_int, help='Never scan beyond this k')


def add_exact_subparser(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser('exact', parents=parents, help='Exact minimal lookahead up to a bound')
    add_instance_argument(parser)
    parser.add_argument('--max-k', type=non_negative_int, required=True, help='Largest lookahead to try')
    parser.add_argument(
        '--check-monotone',
        action='store_true',
        help='Keep going after the first win and report later losses',
    )


def add_compare_subparser(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        'compare',
        parents=parents,
        help='Run both algorithms and check k_opt <= reported <= 2*k_opt - 1',
    )
    add_instance_argument(parser)
    parser.add_argument('--max-k', type=non_negative_int, required=True, help='Bound for the exact oracle')


def _render_approx(payload: dict[str, Any]) -> None:
    result = payload['result']
    console.print(
        key_value_table(
            'Approximate minimal lookahead',
            {
                'outcome': result['outcome'],
                'k*': result['k_star'],
                'reported': result['reported'],
                'scan': result['scan'],
                'effective bound': result['effective_bound'],
                'preperiod': result['layer_stats']['preperiod'],
                'period': result['layer_stats']['period'],
                'k_max': result['k_max'],
            },
        ),
    )
    console.print(steps_table('Abstract games', result['scanned_ks']))


def _render_exact(payload: dict[str, Any]) -> None:
    result = payload['result']
    rows = {'outcome': result['outcome'], 'k_opt': result['k_opt'], 'bound': result['bound']}
    if result['monotone_violations']:
        rows['monotone violations'] = ', '.join(str(k) for k in result['monotone_violations'])
    console.print(key_value_table('Exact minimal lookahead', rows))
    console.print(steps_table('Delay games', result['per_k']))


def _render_compare(payload: dict[str, Any]) -> None:
    console.print(key_value_table('Approximation against the optimum', payload['result']))


def handle_approx_command(config: DelayGameConfig, args: argparse.Namespace) -> int:
    report = approx_min_lookahead(
        read_instance(args),
        scan=config.scan,
        cap=args.cap,
        vertex_budget=config.vertex_budget,
        layer_cap=config.layer_cap,
        parallelism=config.parallelism,
    )
    emit(config, report.payload(), _render_approx)
    return 0


def handle_exact_command(config: DelayGameConfig, args: argparse.Namespace) -> int:
    report = exact_min_lookahead(
        read_instance(args),
        args.max_k,
        vertex_budget=config.vertex_budget,
        check_monotone=args.check_monotone,
    )
    emit(config, report.payload(), _render_exact)
    return 0


def handle_compare_command(config: DelayGameConfig, args: argparse.Namespace) -> int:
    report = compare(
        read_instance(args),
        args.max_k,
        scan=config.scan,
        vertex_budget=config.vertex_budget,
        layer_cap=config.layer_cap,
        parallelism=config.parallelism,
    )
    emit(config, report.payload(), _render_compare)
    return 0
