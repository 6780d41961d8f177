from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

from delaygame.arena import ParityGame, Player


@dataclass(frozen=True)
class Solution:
    """Winning regions and positional winning strategies.

    ``strategy_O`` is defined on the O-owned vertices of ``win_O`` and maps
    each to the successor O moves to; ``strategy_I`` likewise for I.
    """

    win_O: frozenset[int]
    win_I: frozenset[int]
    strategy_O: Mapping[int, int] = field(default_factory=dict)
    strategy_I: Mapping[int, int] = field(default_factory=dict)

    def region(self, player: Player) -> frozenset[int]:
        return self.win_O if player == Player.O else self.win_I

    def strategy(self, player: Player) -> Mapping[int, int]:
        return self.strategy_O if player == Player.O else self.strategy_I

    def to_dict(self) -> dict[str, Any]:
        return {
            'win_O': sorted(self.win_O),
            'win_I': sorted(self.win_I),
            'strategy_O': {str(v): w for v, w in sorted(self.strategy_O.items())},
            'strategy_I': {str(v): w for v, w in sorted(self.strategy_I.items())},
        }


def winner(game: ParityGame, sol: Solution) -> Player:
    """The player winning from the initial vertex."""
    return Player.O if game.initial in sol.win_O else Player.I


def dual_game(game: ParityGame) -> ParityGame:
    """Swap the owners and shift every color up by one.

    The winning regions of the dual are those of ``game`` with the roles
    exchanged.
    """
    return ParityGame(
        owners=tuple(owner.opponent for owner in game.owners),
        colors=tuple(c + 1 for c in game.colors),
        successors=game.successors,
        labels=game.labels,
        initial=game.initial,
    )
