from dataclasses import dataclass

import pytest

from delaygame.arena import GameBuilder, ParityGame, Player, game_stats
from delaygame.errors import ResourceLimitError
from tests.conftest import GameFactory


def test_player_opponent() -> None:
    assert Player.O.opponent is Player.I
    assert Player.I.opponent is Player.O
    assert int(Player.I) == 1


def test_predecessors(game_factory: GameFactory) -> None:
    game = game_factory([0, 1, 0], [0, 1, 2], [[1, 2], [0], [2]])
    assert game.predecessors == ((1,), (0,), (0, 2))
    assert game.vertices_of(Player.O) == [0, 2]
    assert game.owner_of(1) is Player.I
    assert game.color_of(2) == 2


@dataclass
class InvalidGameCase:
    owners: tuple[Player, ...]
    successors: tuple[tuple[int, ...], ...]
    initial: int
    message: str
    desc: str


@pytest.mark.parametrize(
    'tcase',
    [
        InvalidGameCase(
            owners=(Player.O,),
            successors=((),),
            initial=0,
            message='vertex 0 has no successor',
            desc='dead_end',
        ),
        InvalidGameCase(
            owners=(Player.O,),
            successors=((3,),),
            initial=0,
            message='missing vertex',
            desc='dangling_edge',
        ),
        InvalidGameCase(
            owners=(Player.O,),
            successors=((0,),),
            initial=1,
            message='initial vertex 1 out of range',
            desc='bad_initial',
        ),
        InvalidGameCase(
            owners=(Player.O, Player.I),
            successors=((0,),),
            initial=0,
            message='equal length',
            desc='ragged',
        ),
    ],
    ids=lambda c: c.desc,
)
def test_invalid_game(tcase: InvalidGameCase) -> None:
    with pytest.raises(ValueError, match=tcase.message):
        ParityGame(
            owners=tcase.owners,
            colors=(0,) * len(tcase.owners),
            successors=tcase.successors,
            labels=('x',) * len(tcase.owners),
            initial=tcase.initial,
        )


def test_builder_deduplicates_edges() -> None:
    builder = GameBuilder(10)
    v = builder.add(Player.O, 0, 'a')
    w = builder.add(Player.I, 1, 'b')
    builder.connect(v, [w, w, v])
    builder.connect(w, [v])
    game = builder.build()
    assert game.successors == ((0, 1), (0,))
    assert len(builder) == 2


def test_builder_budget() -> None:
    builder = GameBuilder(1)
    builder.add(Player.O, 0, 'a')
    with pytest.raises(ResourceLimitError, match='vertex limit of 1 exceeded, reached 2'):
        builder.add(Player.O, 0, 'b')


def test_game_stats(game_factory: GameFactory) -> None:
    game = game_factory([0, 1, 1], [3, 1, 1], [[1, 2], [0], [0, 1, 2]])
    assert game_stats(game) == {
        'vertices': 3,
        'edges': 6,
        'vertices_O': 1,
        'vertices_I': 2,
        'colors': [1, 3],
        'max_out_degree': 3,
    }
