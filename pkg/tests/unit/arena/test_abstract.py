import pytest

from delaygame.arena import Player, build_abstract_game
from delaygame.automaton import Dpa, random_dpa
from delaygame.errors import ResourceLimitError
from delaygame.tracking import layer_at, layer_sequence

CAP = 10_000


@pytest.mark.parametrize(('instance', 'color'), [('d_univ', 0), ('d_empty', 1)])
def test_single_state_shape(request: pytest.FixtureRequest, instance: str, color: int) -> None:
    dpa = request.getfixturevalue(instance)
    game = build_abstract_game(dpa, layer_at(layer_sequence(dpa, CAP), 1))
    assert game.owners == (Player.I, Player.O, Player.I)
    assert game.colors == (color, color, color)
    assert game.successors == ((1,), (2,), (1,))
    assert game.labels == ('init', 'r0@{0/0}' if color == 0 else 'r0@{0/1}', f'r0,(0,{color})')
    assert game.initial == 0


def test_layer_must_not_be_empty(d_univ: Dpa) -> None:
    with pytest.raises(ValueError, match='must not be empty'):
        build_abstract_game(d_univ, frozenset())


@pytest.mark.parametrize('k', [1, 2, 3])
def test_prediction_game_structure(d_pred1: Dpa, k: int) -> None:
    game = build_abstract_game(d_pred1, layer_at(layer_sequence(d_pred1, CAP), k))
    assert game.owners[game.initial] is Player.I
    for v in range(game.vertex_count):
        assert all(game.owners[w] is not game.owners[v] for w in game.successors[v])
        if game.owners[v] is Player.O:
            assert game.colors[v] == d_pred1.min_color
    assert set(game.colors) <= set(d_pred1.colors)


@pytest.mark.parametrize('seed', range(10))
def test_construction_is_deterministic(seed: int) -> None:
    dpa = random_dpa(3, 3, 2, 2, seed)
    layer = layer_at(layer_sequence(dpa, CAP), 2)
    assert build_abstract_game(dpa, layer) == build_abstract_game(dpa, layer)


def test_vertex_budget(d_pred1: Dpa) -> None:
    layer = layer_at(layer_sequence(d_pred1, CAP), 1)
    with pytest.raises(ResourceLimitError) as excinfo:
        build_abstract_game(d_pred1, layer, vertex_budget=2)
    assert excinfo.value.resource == 'vertex'
    assert excinfo.value.limit == 2
