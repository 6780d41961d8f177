"""Zielonka's decomposition with an explicit frame stack.

Each frame solves the subgame selected by its mask. With d the largest
color present and p its parity owner, the p-attractor A of the d-colored
vertices is removed and the rest solved. If the opponent wins nothing
there, p wins the whole subgame. Otherwise the opponent's attractor B of
its region is removed, the remainder solved again, and B is added to the
opponent's side.
"""

from dataclasses import dataclass

import numpy as np

from delaygame.arena import ParityGame, Player
from delaygame.logging import get_logger

from .attractor import Mask, attract, full_mask
from .solution import Solution

logger = get_logger(__name__)


@dataclass
class _Frame:
    mask: Mask
    stage: int = 0
    player: Player = Player.O
    removed: Mask | None = None


def solve_parity(game: ParityGame) -> Solution:
    """Winning regions and positional strategies of both players.

    Free choices inside a region go to the lowest-numbered successor.
    """
    n = game.vertex_count
    colors = np.array(game.colors, dtype=np.int64)
    owners = np.array([int(owner) for owner in game.owners], dtype=np.int8)
    strategy = [-1] * n
    empty = np.zeros(n, dtype=bool)

    stack = [_Frame(full_mask(game))]
    returned = empty
    while stack:
        frame = stack[-1]
        if frame.stage == 0:
            if not frame.mask.any():
                stack.pop()
                returned = empty
                continue
            top = int(colors[frame.mask].max())
            frame.player = Player(top & 1)
            scoring = frame.mask & (colors == top)
            frame.removed = attract(game, frame.mask, frame.player, scoring, strategy)
            inside = frame.mask.tolist()
            for v in np.flatnonzero(scoring & (owners == frame.player)).tolist():
                strategy[v] = next(w for w in game.successors[v] if inside[w])
            frame.stage = 1
            stack.append(_Frame(frame.mask & ~frame.removed))
        elif frame.stage == 1:
            rest = frame.mask & ~frame.removed
            lost = rest & ~returned if frame.player == Player.O else returned
            if not lost.any():
                stack.pop()
                returned = frame.mask.copy() if frame.player == Player.O else empty
                continue
            frame.removed = attract(game, frame.mask, frame.player.opponent, lost, strategy)
            frame.stage = 2
            stack.append(_Frame(frame.mask & ~frame.removed))
        else:
            stack.pop()
            if frame.player == Player.I:
                returned = frame.removed | returned

    win_o = np.flatnonzero(returned).tolist()
    win_i = np.flatnonzero(~returned).tolist()
    solution = Solution(
        win_O=frozenset(win_o),
        win_I=frozenset(win_i),
        strategy_O={v: strategy[v] for v in win_o if game.owners[v] == Player.O},
        strategy_I={v: strategy[v] for v in win_i if game.owners[v] == Player.I},
    )
    logger.debug('game_solved', vertices=n, won_by_O=len(win_o), won_by_I=len(win_i))
    return solution
