"""Finite parity games with max-parity semantics.

Player O wins a play iff the largest color seen infinitely often is even.
"""

from collections.abc import Iterable
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from typing import Any

from delaygame.errors import ResourceLimitError


class Player(IntEnum):
    """The two players; the values match the interchange-format owner field."""

    O = 0
    I = 1  # noqa: E741

    @property
    def opponent(self) -> 'Player':
        return Player(1 - self)


@dataclass(frozen=True)
class ParityGame:
    """An arena where every vertex has at least one successor."""

    owners: tuple[Player, ...]
    colors: tuple[int, ...]
    successors: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    initial: int

    def __post_init__(self) -> None:
        n = len(self.owners)
        if not (len(self.colors) == len(self.successors) == len(self.labels) == n):
            msg = 'owners, colors, successors and labels must have equal length'
            raise ValueError(msg)
        if not 0 <= self.initial < n:
            msg = f'initial vertex {self.initial} out of range'
            raise ValueError(msg)
        for v, succ in enumerate(self.successors):
            if not succ:
                msg = f'vertex {v} has no successor'
                raise ValueError(msg)
            if any(not 0 <= w < n for w in succ):
                msg = f'vertex {v} has an edge to a missing vertex'
                raise ValueError(msg)

    @property
    def vertex_count(self) -> int:
        return len(self.owners)

    @property
    def edge_count(self) -> int:
        return sum(len(succ) for succ in self.successors)

    @cached_property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        preds: list[list[int]] = [[] for _ in self.owners]
        for v, succ in enumerate(self.successors):
            for w in succ:
                preds[w].append(v)
        return tuple(tuple(p) for p in preds)

    def owner_of(self, v: int) -> Player:
        return self.owners[v]

    def color_of(self, v: int) -> int:
        return self.colors[v]

    def vertices_of(self, player: Player) -> list[int]:
        return [v for v, owner in enumerate(self.owners) if owner == player]


class GameBuilder:
    """Accumulates vertices under a vertex budget."""

    def __init__(self, vertex_budget: int) -> None:
        self.vertex_budget = vertex_budget
        self._owners: list[Player] = []
        self._colors: list[int] = []
        self._labels: list[str] = []
        self._successors: list[tuple[int, ...]] = []

    def __len__(self) -> int:
        return len(self._owners)

    def add(self, owner: Player, color: int, label: str) -> int:
        if len(self._owners) >= self.vertex_budget:
            raise ResourceLimitError('vertex', self.vertex_budget, reached=len(self._owners) + 1)
        self._owners.append(owner)
        self._colors.append(color)
        self._labels.append(label)
        self._successors.append(())
        return len(self._owners) - 1

    def connect(self, v: int, targets: Iterable[int]) -> None:
        self._successors[v] = tuple(sorted(set(targets)))

    def build(self, initial: int = 0) -> ParityGame:
        return ParityGame(
            owners=tuple(self._owners),
            colors=tuple(self._colors),
            successors=tuple(self._successors),
            labels=tuple(self._labels),
            initial=initial,
        )


def game_stats(game: ParityGame) -> dict[str, Any]:
    """Vertex, edge and color counts for diagnostics."""
    return {
        'vertices': game.vertex_count,
        'edges': game.edge_count,
        'vertices_O': sum(1 for owner in game.owners if owner == Player.O),
        'vertices_I': sum(1 for owner in game.owners if owner == Player.I),
        'colors': sorted(set(game.colors)),
        'max_out_degree': max(len(succ) for succ in game.successors),
    }
