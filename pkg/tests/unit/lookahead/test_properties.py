"""Cross-checks between the abstract games and the exact delay games on small random automata."""

import pytest

from delaygame.automaton import Dpa, random_dpa
from delaygame.lookahead import approx_min_lookahead, compare, wins_abstract, wins_exact
from delaygame.tracking import layer_sequence

SEEDS = range(25)


def _sample(seed: int) -> Dpa:
    return random_dpa(1 + seed % 3, 1 + seed % 3, 2, 2, seed)


@pytest.mark.parametrize('seed', SEEDS)
def test_exact_win_implies_abstract_win(seed: int) -> None:
    dpa = _sample(seed)
    layers = layer_sequence(dpa, 10_000)
    for k in range(1, 5):
        if wins_exact(dpa, k):
            assert wins_abstract(dpa, k, layers=layers)


@pytest.mark.parametrize('seed', SEEDS)
def test_abstract_win_implies_exact_win(seed: int) -> None:
    dpa = _sample(seed)
    layers = layer_sequence(dpa, 10_000)
    for k in range(1, 3):
        if wins_abstract(dpa, k, layers=layers):
            assert wins_exact(dpa, 2 * k - 1)


@pytest.mark.parametrize('seed', SEEDS)
def test_exact_games_are_monotone(seed: int) -> None:
    dpa = _sample(seed)
    verdicts = [wins_exact(dpa, k) for k in range(5)]
    assert verdicts == sorted(verdicts)


@pytest.mark.parametrize('seed', SEEDS)
def test_approximation_brackets_optimum(seed: int) -> None:
    dpa = _sample(seed)
    report = compare(dpa, 4)
    assert report.sandwich_holds is not False
    if report.reported is not None:
        assert report.reported % 2 == 1
    if report.approx_outcome == 'no_win':
        assert report.k_opt is None


@pytest.mark.parametrize('seed', SEEDS)
def test_win_stays_within_bound(seed: int) -> None:
    report = approx_min_lookahead(_sample(seed))
    if report.outcome == 'win':
        assert report.k_star <= report.effective_bound
