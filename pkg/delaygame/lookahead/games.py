"""Per-k decisions: does Player O win 𝒢_k, does she win Γ_k?"""

from delaygame.arena import DEFAULT_VERTEX_BUDGET, Player, build_abstract_game, build_queue_game
from delaygame.automaton import Dpa
from delaygame.errors import ResourceLimitError
from delaygame.solver import solve_parity, winner
from delaygame.tracking import Layer, LayerSequence, layer_at, layer_sequence

DEFAULT_LAYER_CAP = 1_000_000


def decide_layer(dpa: Dpa, layer: Layer, vertex_budget: int) -> tuple[bool, int]:
    """Solve 𝒢 over ``layer``; returns O's verdict and the arena size."""
    game = build_abstract_game(dpa, layer, vertex_budget=vertex_budget)
    return winner(game, solve_parity(game)) == Player.O, game.vertex_count


def decide_queue(dpa: Dpa, k: int, vertex_budget: int) -> tuple[bool, int]:
    game = build_queue_game(dpa, k, vertex_budget=vertex_budget)
    return winner(game, solve_parity(game)) == Player.O, game.vertex_count


def wins_abstract(
    dpa: Dpa,
    k: int,
    *,
    layers: LayerSequence | None = None,
    vertex_budget: int = DEFAULT_VERTEX_BUDGET,
    layer_cap: int = DEFAULT_LAYER_CAP,
) -> bool:
    """Whether Player O wins the abstract game 𝒢_k; ``k`` may be huge.

    Raises:
        ValueError: ``k`` is not positive.
        ResourceLimitError: A layer or vertex budget was exhausted.
    """
    if k < 1:
        msg = f'the abstract game needs k >= 1, got {k}'
        raise ValueError(msg)
    if layers is None:
        layers = layer_sequence(dpa, layer_cap)
    try:
        won, _ = decide_layer(dpa, layer_at(layers, k), vertex_budget)
    except ResourceLimitError as e:
        raise e.at_k(k) from e
    return won


def wins_exact(dpa: Dpa, k: int, *, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> bool:
    """Whether Player O wins the delay game Γ_k, decided on its queue encoding.

    Raises:
        ResourceLimitError: The queue encoding exceeds ``vertex_budget``.
    """
    won, _ = decide_queue(dpa, k, vertex_budget)
    return won
