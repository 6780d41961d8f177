"""Main test configuration and fixtures."""

from collections.abc import Callable, Sequence

import pytest
from hypothesis import strategies as st

from delaygame.arena import ParityGame, Player
from delaygame.automaton import Dpa, reference_instance

GameFactory = Callable[..., ParityGame]


@pytest.fixture
def d_univ() -> Dpa:
    """One state, color 0, every word accepted."""
    return reference_instance('d_univ')


@pytest.fixture
def d_empty() -> Dpa:
    """One state, color 1, no word accepted."""
    return reference_instance('d_empty')


@pytest.fixture
def d_pred1() -> Dpa:
    """Output must predict the next input letter; states q_s=0, q_0=1, q_1=2, q_bad=3."""
    return reference_instance('d_pred1')


@pytest.fixture
def d_pred2() -> Dpa:
    """Output must predict the input two letters ahead."""
    return reference_instance('d_pred2')


def make_game(
    owners: Sequence[int],
    colors: Sequence[int],
    successors: Sequence[Sequence[int]],
    initial: int = 0,
) -> ParityGame:
    return ParityGame(
        owners=tuple(Player(o) for o in owners),
        colors=tuple(colors),
        successors=tuple(tuple(sorted(set(s))) for s in successors),
        labels=tuple(f'v{v}' for v in range(len(owners))),
        initial=initial,
    )


@pytest.fixture
def game_factory() -> GameFactory:
    """Build a small game from owner (0 = O, 1 = I), color and successor lists."""
    return make_game


@st.composite
def parity_games(draw: st.DrawFn, max_vertices: int = 7, max_degree: int = 2, max_color: int = 4) -> ParityGame:
    """Small arbitrary games; every vertex keeps at least one successor."""
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    vertex = st.integers(min_value=0, max_value=n - 1)
    owners = draw(st.lists(st.integers(min_value=0, max_value=1), min_size=n, max_size=n))
    colors = draw(st.lists(st.integers(min_value=0, max_value=max_color), min_size=n, max_size=n))
    successors = [draw(st.lists(vertex, min_size=1, max_size=max_degree)) for _ in range(n)]
    return make_game(owners, colors, successors, initial=draw(vertex))
