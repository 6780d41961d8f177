from dataclasses import dataclass

import pytest
from pytest_mock import MockerFixture

from delaygame.automaton import Dpa
from delaygame.errors import ResourceLimitError
from delaygame.lookahead import wins_abstract, wins_exact
from delaygame.tracking import layer_sequence


@dataclass
class WinCase:
    instance: str
    k: int
    expected: bool
    desc: str


@pytest.mark.parametrize(
    'tcase',
    [
        WinCase(instance='d_univ', k=1, expected=True, desc='universal'),
        WinCase(instance='d_empty', k=1, expected=False, desc='empty'),
        WinCase(instance='d_pred1', k=1, expected=True, desc='pred1'),
        WinCase(instance='d_pred2', k=1, expected=False, desc='pred2_short'),
        WinCase(instance='d_pred2', k=2, expected=True, desc='pred2'),
        WinCase(instance='d_univ', k=2**40, expected=True, desc='huge_k'),
    ],
    ids=lambda c: c.desc,
)
def test_wins_abstract(request: pytest.FixtureRequest, tcase: WinCase) -> None:
    assert wins_abstract(request.getfixturevalue(tcase.instance), tcase.k) is tcase.expected


@pytest.mark.parametrize(
    'tcase',
    [
        WinCase(instance='d_univ', k=0, expected=True, desc='universal'),
        WinCase(instance='d_empty', k=2, expected=False, desc='empty'),
        WinCase(instance='d_pred1', k=0, expected=False, desc='pred1_k0'),
        WinCase(instance='d_pred1', k=1, expected=True, desc='pred1_k1'),
        WinCase(instance='d_pred2', k=1, expected=False, desc='pred2_k1'),
        WinCase(instance='d_pred2', k=2, expected=True, desc='pred2_k2'),
    ],
    ids=lambda c: c.desc,
)
def test_wins_exact(request: pytest.FixtureRequest, tcase: WinCase) -> None:
    assert wins_exact(request.getfixturevalue(tcase.instance), tcase.k) is tcase.expected


def test_wins_abstract_needs_positive_k(d_univ: Dpa) -> None:
    with pytest.raises(ValueError, match='k >= 1'):
        wins_abstract(d_univ, 0)


def test_wins_abstract_reuses_layers(d_pred1: Dpa, mocker: MockerFixture) -> None:
    layers = layer_sequence(d_pred1, 1000)
    spy = mocker.patch('delaygame.lookahead.games.layer_sequence')
    assert wins_abstract(d_pred1, 3, layers=layers)
    spy.assert_not_called()


def test_wins_abstract_budget_names_k(d_pred1: Dpa) -> None:
    with pytest.raises(ResourceLimitError) as excinfo:
        wins_abstract(d_pred1, 2, vertex_budget=3)
    assert excinfo.value.k == 2
    assert excinfo.value.limit == 3
