import argparse
import json
from typing import Any

import pytest

from delaygame.cli._utils import (
    REFERENCE_NAMES,
    emit,
    key_value_table,
    non_negative_int,
    positive_int,
    reference_completer,
    steps_table,
)
from delaygame.config import DelayGameConfig


def test_reference_completer_lists_shipped_instances() -> None:
    result = reference_completer(prefix='@')
    assert result == [f'@delaygame:resources/instances/{name}.json' for name in REFERENCE_NAMES]


def test_positive_int() -> None:
    assert positive_int('3') == 3
    with pytest.raises(argparse.ArgumentTypeError, match='positive'):
        positive_int('0')
    with pytest.raises(ValueError):
        positive_int('three')


def test_non_negative_int() -> None:
    assert non_negative_int('0') == 0
    with pytest.raises(argparse.ArgumentTypeError, match='non-negative'):
        non_negative_int('-2')


def test_emit_json(capsys: pytest.CaptureFixture[str]) -> None:
    rendered: list[Any] = []
    payload = {'result': {'b': 1, 'a': [1, 2]}, 'meta': {}}
    emit(DelayGameConfig(output='json'), payload, rendered.append)
    out = capsys.readouterr().out
    assert out.endswith('}\n')
    assert json.loads(out) == payload
    assert list(json.loads(out)['result']) == ['b', 'a']
    assert rendered == []


def test_emit_text() -> None:
    rendered: list[Any] = []
    payload = {'result': {}, 'meta': {}}
    emit(DelayGameConfig(), payload, rendered.append)
    assert rendered == [payload]


def test_tables() -> None:
    table = key_value_table('Report', {'k*': 2, 'reported': None})
    assert table.row_count == 2
    assert table.title == 'Report'
    steps = steps_table('Scan', [{'k': 1, 'winner': 'I'}, {'k': 2, 'winner': 'O'}])
    assert steps.row_count == 2
