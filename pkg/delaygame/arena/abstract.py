"""The delay-free game 𝒢_k over restricted behavior functions.

Vertices:

* ``init`` (Player I): picks the first restricted function, whose domain is
  the singleton {(q_ι, Ω(q_ι))}.
* ``r`` (Player O): a function restricted to its domain D; O picks a
  tracked state (q, c) from D.
* ``(r, (q, c))`` (Player I, color c): I picks a function of the layer
  restricted to the domain r(q, c).

Only vertices reachable from ``init`` are built; functions that agree on a
domain yield a single vertex. Non-scoring vertices carry the neutral color
min C.
"""

from collections import deque

from delaygame.automaton import Dpa
from delaygame.logging import get_logger
from delaygame.tracking import Layer, tracking_table

from .game import GameBuilder, ParityGame, Player

logger = get_logger(__name__)

DEFAULT_VERTEX_BUDGET = 5_000_000

RestrictionKey = tuple[int, tuple[int, ...]]
"""An O-vertex: the domain mask and the values of the states occurring in it."""


def build_abstract_game(
    dpa: Dpa,
    f_layer: Layer,
    *,
    vertex_budget: int = DEFAULT_VERTEX_BUDGET,
) -> ParityGame:
    """Build the reachable part of 𝒢_k for the layer F_k.

    Raises:
        ResourceLimitError: The arena outgrows ``vertex_budget``.
    """
    if not f_layer:
        msg = 'the layer must not be empty'
        raise ValueError(msg)
    table = tracking_table(dpa)
    functions = sorted(f_layer)
    neutral = dpa.min_color
    builder = GameBuilder(vertex_budget)
    restrictions: dict[int, list[tuple[int, ...]]] = {}
    o_vertices: dict[RestrictionKey, int] = {}
    names: dict[RestrictionKey, str] = {}
    pending: deque[RestrictionKey] = deque()

    def restrictions_to(domain: int) -> list[tuple[int, ...]]:
        found = restrictions.get(domain)
        if found is None:
            states = table.states_of(domain)
            found = sorted({f.restrict(states) for f in functions})
            restrictions[domain] = found
        return found

    def o_vertex(domain: int, values: tuple[int, ...]) -> int:
        key = (domain, values)
        v = o_vertices.get(key)
        if v is None:
            members = ','.join(f'{ts.state}/{ts.color}' for ts in sorted(table.unpack(domain)))
            names[key] = f'r{len(o_vertices)}'
            v = builder.add(Player.O, neutral, f'{names[key]}@{{{members}}}')
            o_vertices[key] = v
            pending.append(key)
        return v

    init = builder.add(Player.I, neutral, 'init')
    start = table.seed(dpa.initial)
    builder.connect(init, [o_vertex(start, values) for values in restrictions_to(start)])

    while pending:
        domain, values = pending.popleft()
        v = o_vertices[(domain, values)]
        value_of = dict(zip(table.states_of(domain), values, strict=True))
        picks = []
        for ts in sorted(table.unpack(domain)):
            pick = builder.add(Player.I, ts.color, f'{names[(domain, values)]},({ts.state},{ts.color})')
            target = value_of[ts.state]
            builder.connect(pick, [o_vertex(target, r) for r in restrictions_to(target)])
            picks.append(pick)
        builder.connect(v, picks)

    game = builder.build(initial=init)
    logger.debug(
        'game_built',
        kind='abstract',
        vertices=game.vertex_count,
        edges=game.edge_count,
        layer_size=len(functions),
    )
    return game
