"""Attractors inside subgames given as boolean vertex masks."""

from collections.abc import Iterable, MutableSequence

import numpy as np
import numpy.typing as npt

from delaygame.arena import ParityGame, Player

Mask = npt.NDArray[np.bool_]


def full_mask(game: ParityGame) -> Mask:
    return np.ones(game.vertex_count, dtype=bool)


def mask_of(game: ParityGame, vertices: Iterable[int]) -> Mask:
    mask = np.zeros(game.vertex_count, dtype=bool)
    mask[list(vertices)] = True
    return mask


def attract(
    game: ParityGame,
    subgame: Mask,
    player: Player,
    targets: Mask,
    strategy: MutableSequence[int],
) -> Mask:
    """The ``player`` attractor of ``targets`` within ``subgame``.

    Every ``player`` vertex pulled in (targets excluded) gets the successor
    it was attracted through written to ``strategy``.
    """
    inside = subgame.tolist()
    attracted = (targets & subgame).tolist()
    pending = [v for v, hit in enumerate(attracted) if hit]
    remaining: dict[int, int] = {}
    owners = game.owners
    predecessors = game.predecessors
    successors = game.successors

    while pending:
        w = pending.pop()
        for v in predecessors[w]:
            if not inside[v] or attracted[v]:
                continue
            if owners[v] == player:
                strategy[v] = w
            else:
                left = remaining.get(v)
                if left is None:
                    left = sum(1 for u in successors[v] if inside[u])
                left -= 1
                remaining[v] = left
                if left:
                    continue
            attracted[v] = True
            pending.append(v)
    return np.array(attracted, dtype=bool)


def attractor(game: ParityGame, player: Player, targets: Iterable[int]) -> frozenset[int]:
    """Vertices from which ``player`` can force a visit to ``targets``."""
    scratch = [-1] * game.vertex_count
    result = attract(game, full_mask(game), player, mask_of(game, targets), scratch)
    return frozenset(np.flatnonzero(result).tolist())
