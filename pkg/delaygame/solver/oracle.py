"""Slow, independent checks for the solver.

Both work on explicit one-player graphs: fixing a positional strategy for
one player leaves a graph where the opponent wins from a vertex iff it can
reach a cycle whose largest color has the opponent's parity.
"""

import itertools
import math
from collections.abc import Iterable, Mapping

import networkx as nx

from delaygame.arena import ParityGame, Player
from delaygame.errors import ResourceLimitError
from delaygame.logging import get_logger

from .solution import Solution

logger = get_logger(__name__)

DEFAULT_ENUMERATION_GUARD = 1_000_000


def _restricted_graph(game: ParityGame, vertices: Iterable[int], player: Player, choice: Mapping[int, int]) -> nx.DiGraph:
    """``player`` follows ``choice``; the opponent keeps all of its edges."""
    keep = set(vertices)
    graph = nx.DiGraph()
    graph.add_nodes_from(keep)
    for v in keep:
        targets = (choice[v],) if game.owners[v] == player else game.successors[v]
        graph.add_edges_from((v, w) for w in targets if w in keep)
    return graph


def _cycle_anchors(game: ParityGame, graph: nx.DiGraph, parity: int) -> set[int]:
    """Vertices of color c with ``c % 2 == parity`` lying on a cycle of colors ≤ c."""
    anchors: set[int] = set()
    for c in sorted({game.colors[v] for v in graph if game.colors[v] % 2 == parity}):
        low = graph.subgraph(v for v in graph if game.colors[v] <= c)
        for component in nx.strongly_connected_components(low):
            tops = [v for v in component if game.colors[v] == c]
            if not tops:
                continue
            if len(component) > 1 or any(low.has_edge(v, v) for v in tops):
                anchors.update(tops)
    return anchors


def _won_with(game: ParityGame, player: Player, choice: Mapping[int, int]) -> frozenset[int]:
    graph = _restricted_graph(game, range(game.vertex_count), player, choice)
    lost: set[int] = set()
    for anchor in _cycle_anchors(game, graph, int(player.opponent)):
        if anchor not in lost:
            lost.add(anchor)
            lost.update(nx.ancestors(graph, anchor))
    return frozenset(range(game.vertex_count)) - lost


def _best_positional(game: ParityGame, player: Player, guard: int) -> tuple[frozenset[int], dict[int, int]]:
    own = game.vertices_of(player)
    profiles = math.prod(len(game.successors[v]) for v in own)
    if profiles > guard:
        raise ResourceLimitError('enumeration', guard, reached=profiles)

    outcomes = []
    for picks in itertools.product(*(game.successors[v] for v in own)):
        choice = dict(zip(own, picks, strict=True))
        outcomes.append((choice, _won_with(game, player, choice)))
    region = frozenset().union(*(won for _, won in outcomes))
    choice = next(choice for choice, won in outcomes if won == region)
    return region, {v: w for v, w in choice.items() if v in region}


def brute_force_solve(game: ParityGame, *, guard: int = DEFAULT_ENUMERATION_GUARD) -> Solution:
    """Solve by enumerating every positional strategy of each player.

    Raises:
        ResourceLimitError: A player has more than ``guard`` positional strategies.
    """
    win_o, strategy_o = _best_positional(game, Player.O, guard)
    win_i, strategy_i = _best_positional(game, Player.I, guard)
    return Solution(win_O=win_o, win_I=win_i, strategy_O=strategy_o, strategy_I=strategy_i)


def _region_holds(game: ParityGame, sol: Solution, player: Player) -> str | None:
    region = sol.region(player)
    strategy = sol.strategy(player)
    for v in region:
        if game.owners[v] == player:
            w = strategy.get(v)
            if w is None:
                return f'vertex {v} has no strategy move'
            if w not in game.successors[v]:
                return f'strategy move {v}->{w} is not an edge'
            if w not in region:
                return f'strategy move {v}->{w} leaves the region'
        elif any(w not in region for w in game.successors[v]):
            return f'opponent escapes the region at vertex {v}'
    graph = _restricted_graph(game, region, player, strategy)
    if _cycle_anchors(game, graph, int(player.opponent)):
        return 'the opponent can close a losing cycle'
    return None


def verify_solution(game: ParityGame, sol: Solution) -> bool:
    """Check the partition and that each strategy wins its whole region."""
    everything = frozenset(range(game.vertex_count))
    if sol.win_O & sol.win_I or sol.win_O | sol.win_I != everything:
        logger.debug('solution_rejected', player=None, reason='regions do not partition the vertices')
        return False
    for player in Player:
        reason = _region_holds(game, sol, player)
        if reason is not None:
            logger.debug('solution_rejected', player=player.name, reason=reason)
            return False
    return True
