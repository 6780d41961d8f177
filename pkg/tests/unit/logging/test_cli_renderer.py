from dataclasses import dataclass
from pathlib import Path
from typing import Any
from unittest.mock import MagicMock

import pytest
from pytest_mock import MockerFixture
from rich.syntax import Syntax

from delaygame import logging as logging_mod
from delaygame.logging import Logger, cli_renderer, format_context_yaml


@pytest.fixture(autouse=True)
def patch_console(mocker: MockerFixture) -> dict[str, Any]:
    """Capture what cli_renderer prints on the stderr console."""
    printed: list[Any] = []
    mocker.patch.object(
        logging_mod.console,
        'print',
        side_effect=lambda *args, **kwargs: printed.append((args, kwargs)),
    )
    return {'printed': printed}


def test_console_writes_to_stderr() -> None:
    assert logging_mod.console.stderr


@dataclass
class RendererCase:
    method_name: str
    event_dict: dict
    expected_fragments: list[str]
    expected_style: str
    desc: str


@pytest.mark.parametrize(
    'tcase',
    [
        RendererCase(
            method_name='info',
            event_dict={'event': 'approximation_finished', 'k_star': 2},
            expected_fragments=['[INFO]', 'approximation_finished'],
            expected_style='blue',
            desc='info',
        ),
        RendererCase(
            method_name='warning',
            event_dict={'event': 'sandwich_violated'},
            expected_fragments=['[WARNING]', 'sandwich_violated'],
            expected_style='yellow',
            desc='warning_log',
        ),
        RendererCase(
            method_name='error',
            event_dict={'event': 'ResourceLimitError'},
            expected_fragments=['[ERROR]', 'ResourceLimitError'],
            expected_style='red',
            desc='error_log',
        ),
        RendererCase(
            method_name='debug',
            event_dict={'event': 'scan_step'},
            expected_fragments=['[DEBUG]', 'scan_step'],
            expected_style='magenta',
            desc='debug_log',
        ),
        RendererCase(
            method_name='critical',
            event_dict={'event': 'oh no'},
            expected_fragments=['[CRITICAL]', 'oh no'],
            expected_style='white on red',
            desc='critical',
        ),
        RendererCase(
            method_name='notice',
            event_dict={'event': 'unstyled'},
            expected_fragments=['[NOTICE]', 'unstyled'],
            expected_style='bold cyan',
            desc='fallback_style',
        ),
    ],
    ids=lambda c: c.desc,
)
def test_cli_renderer_styles(patch_console: dict[str, Any], tcase: RendererCase) -> None:
    result = cli_renderer(MagicMock(spec=Logger), tcase.method_name, dict(tcase.event_dict))
    assert result == ''
    header = ' '.join(str(a) for a in patch_console['printed'][0][0])
    assert all(frag in header for frag in tcase.expected_fragments)
    assert tcase.expected_style in header


def test_cli_renderer_context_yaml(patch_console: dict[str, Any]) -> None:
    cli_renderer(MagicMock(spec=Logger), 'info', {'event': 'scan_step', 'k': 3, 'winner': 'O'})
    assert len(patch_console['printed']) == 2
    assert isinstance(patch_console['printed'][1][0][0], Syntax)


def test_cli_renderer_without_context(patch_console: dict[str, Any]) -> None:
    cli_renderer(MagicMock(spec=Logger), 'info', {'event': 'done', 'timestamp': 'now', 'level': 'info'})
    assert len(patch_console['printed']) == 1


def test_format_context_yaml() -> None:
    rendered = format_context_yaml({'sources': ('a', 'b'), 'k': 2, 'path': Path('runs/a.json'), 'x': None})
    assert rendered.splitlines() == [
        '  k: 2',
        '  path: runs/a.json',
        '  sources:',
        '  - a',
        '  - b',
        '  x: null',
    ]
    assert format_context_yaml({}) == ''
