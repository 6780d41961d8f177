from dataclasses import dataclass
from pathlib import Path

import pytest

from delaygame.cli.main import _flag_overrides, create_parser
from delaygame.errors import UsageError


def test_missing_command_fails() -> None:
    with pytest.raises(UsageError):
        create_parser().parse_args([])


def test_invalid_command_fails() -> None:
    with pytest.raises(UsageError, match="invalid choice: 'play'"):
        create_parser().parse_args(['play'])


@dataclass
class ParseCase:
    argv: list[str]
    expected: dict[str, object]
    desc: str


@pytest.mark.parametrize(
    'tcase',
    [
        ParseCase(
            argv=['approx', 'a.json'],
            expected={'command': 'approx', 'instance': 'a.json', 'scan': None, 'cap': None},
            desc='approx_defaults',
        ),
        ParseCase(
            argv=['approx', 'a.json', '--binary-search', '--cap', '9'],
            expected={'scan': 'binary', 'cap': 9},
            desc='approx_flags',
        ),
        ParseCase(
            argv=['--json', 'exact', 'a.json', '--max-k', '0'],
            expected={'json': True, 'max_k': 0, 'check_monotone': False},
            desc='json_before_command',
        ),
        ParseCase(
            argv=['exact', 'a.json', '--max-k', '3', '--json', '--check-monotone'],
            expected={'json': True, 'max_k': 3, 'check_monotone': True},
            desc='json_after_command',
        ),
        ParseCase(
            argv=['compare', 'a.json', '--max-k', '4', '--vertex-budget', '10', '--parallelism', '2'],
            expected={'max_k': 4, 'vertex_budget': 10, 'parallelism': 2},
            desc='compare_budgets',
        ),
        ParseCase(
            argv=['solve-gk', 'a.json', '--k', '2', '--cross-check'],
            expected={'k': 2, 'cross_check': True},
            desc='solve_gk',
        ),
        ParseCase(
            argv=['solve-queue', 'a.json', '--k', '0'],
            expected={'k': 0, 'cross_check': False},
            desc='solve_queue_zero',
        ),
        ParseCase(
            argv=['solve-pg', 'g.pg', '--regions'],
            expected={'game': Path('g.pg'), 'regions': True},
            desc='solve_pg',
        ),
        ParseCase(
            argv=['gen', 'random', '--states', '3', '--colors', '2', '--seed', '7'],
            expected={'generator': 'random', 'states': 3, 'colors': 2, 'in_size': 2, 'out_size': 2, 'seed': 7},
            desc='gen_random',
        ),
        ParseCase(
            argv=['gen', 'prediction', '--d', '2'],
            expected={'generator': 'prediction', 'd': 2},
            desc='gen_prediction',
        ),
        ParseCase(
            argv=['export-pg', 'a.json', '--queue', '0', '--out', 'x.pg'],
            expected={'gk': None, 'queue': 0, 'out': Path('x.pg')},
            desc='export_queue',
        ),
        ParseCase(
            argv=['-v', '-c', 'run.yaml', 'layers', 'a.json', '--layer-cap', '5'],
            expected={'verbose': True, 'config': Path('run.yaml'), 'layer_cap': 5},
            desc='globals',
        ),
    ],
    ids=lambda c: c.desc,
)
def test_parse(tcase: ParseCase) -> None:
    args = vars(create_parser().parse_args(tcase.argv))
    for key, value in tcase.expected.items():
        assert args[key] == value, key


@dataclass
class BadArgsCase:
    argv: list[str]
    message: str
    desc: str


@pytest.mark.parametrize(
    'tcase',
    [
        BadArgsCase(argv=['solve-gk', 'a.json', '--k', '0'], message='expected a positive integer', desc='gk_zero'),
        BadArgsCase(argv=['exact', 'a.json'], message='--max-k', desc='exact_needs_bound'),
        BadArgsCase(argv=['exact', 'a.json', '--max-k', '-1'], message='non-negative', desc='negative_bound'),
        BadArgsCase(argv=['export-pg', 'a.json', '--out', 'x.pg'], message='--gk', desc='export_needs_kind'),
        BadArgsCase(
            argv=['export-pg', 'a.json', '--gk', '1', '--queue', '1', '--out', 'x.pg'],
            message='not allowed with',
            desc='export_both_kinds',
        ),
        BadArgsCase(argv=['approx', 'a.json', '--vertex-budget', '0'], message='positive', desc='zero_budget'),
        BadArgsCase(argv=['approx', 'a.json', '--frobnicate'], message='unrecognized', desc='unknown_flag'),
        BadArgsCase(argv=['gen', 'random', '--states', '2'], message='required', desc='gen_missing'),
    ],
    ids=lambda c: c.desc,
)
def test_bad_arguments(tcase: BadArgsCase) -> None:
    with pytest.raises(UsageError, match=tcase.message):
        create_parser().parse_args(tcase.argv)


def test_flag_overrides() -> None:
    args = create_parser().parse_args(['--json', 'approx', 'a.json', '--binary-search', '--parallelism', '3'])
    assert _flag_overrides(args) == {
        'output': 'json',
        'vertex_budget': None,
        'layer_cap': None,
        'parallelism': 3,
        'scan': 'binary',
        'enumeration_guard': None,
    }


def test_flag_overrides_without_flags() -> None:
    args = create_parser().parse_args(['config'])
    assert all(value is None for value in _flag_overrides(args).values())
