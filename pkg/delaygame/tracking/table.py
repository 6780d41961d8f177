"""Color tracking and the projected powerset step.

Sets of tracked states are bit patterns: the pair ``(q, c)`` owns bit
``q * |C| + index(c)`` where ``index`` ranks ``c`` within the sorted color
set. Union is then a bitwise or.
"""

from collections.abc import Iterable
from functools import lru_cache

from delaygame.automaton import Dpa, Letter, TrackedState

TrackedSet = frozenset[TrackedState]

# (mask, letter) pairs remembered per table
STEP_CACHE_SIZE = 1 << 16


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class TrackingTable:
    """Per-automaton lookup tables for δ_T and δ_P on bit-pattern sets."""

    def __init__(self, dpa: Dpa) -> None:
        self.dpa = dpa
        self.width = len(dpa.colors)
        self.color_index = {c: i for i, c in enumerate(dpa.colors)}
        n_in = len(dpa.sigma_i)
        n_out = len(dpa.sigma_o)
        # _successors[a][bit] = δ_P({(q, c)}, a) as a mask
        self._successors: list[list[int]] = [[0] * (dpa.state_count * self.width) for _ in range(n_in)]
        for q in range(dpa.state_count):
            for ci, c in enumerate(dpa.colors):
                for a in range(n_in):
                    mask = 0
                    for b in range(n_out):
                        target = dpa.successor(q, a, b)
                        mask |= 1 << self.bit(target, max(c, dpa.omega[target]))
                    self._successors[a][q * self.width + ci] = mask
        self._cached_step = lru_cache(maxsize=STEP_CACHE_SIZE)(self._step)

    def bit(self, q: int, color: int) -> int:
        return q * self.width + self.color_index[color]

    def seed(self, q: int) -> int:
        """The singleton {(q, Ω(q))} as a mask."""
        return 1 << self.bit(q, self.dpa.omega[q])

    def pack(self, states: Iterable[TrackedState]) -> int:
        mask = 0
        for ts in states:
            if ts.color not in self.color_index:
                msg = f'color {ts.color} is not a color of the automaton'
                raise ValueError(msg)
            mask |= 1 << self.bit(ts.state, ts.color)
        return mask

    def unpack(self, mask: int) -> TrackedSet:
        colors = self.dpa.colors
        return frozenset(TrackedState(*_decode_bit(i, self.width, colors)) for i in _bits(mask))

    def states_of(self, mask: int) -> tuple[int, ...]:
        """The distinct automaton states occurring in a set, ascending."""
        return tuple(sorted({i // self.width for i in _bits(mask)}))

    def step(self, mask: int, a: int) -> int:
        """δ_P(S, a) for the set S given as a mask and a by input index."""
        return self._cached_step(mask, a)

    def _step(self, mask: int, a: int) -> int:
        successors = self._successors[a]
        result = 0
        for i in _bits(mask):
            result |= successors[i]
        return result


def _decode_bit(bit: int, width: int, colors: tuple[int, ...]) -> tuple[int, int]:
    q, ci = divmod(bit, width)
    return q, colors[ci]


@lru_cache(maxsize=4)
def tracking_table(dpa: Dpa) -> TrackingTable:
    """Shared table for an automaton; automata are immutable so sharing is safe."""
    return TrackingTable(dpa)


def delta_t(dpa: Dpa, ts: TrackedState, letter: Letter) -> TrackedState:
    """δ_T((q, c), (a, b)) = (q', max(c, Ω(q'))) with q' = δ(q, (a, b))."""
    if ts.color not in dpa.colors:
        msg = f'color {ts.color} is not a color of the automaton'
        raise ValueError(msg)
    target = dpa.step(ts.state, letter)
    return TrackedState(target, max(ts.color, dpa.omega[target]))


def delta_p(dpa: Dpa, states: Iterable[TrackedState], a: str) -> TrackedSet:
    """δ_P(S, a): δ_T over every member of S and every output letter."""
    table = tracking_table(dpa)
    return table.unpack(table.step(table.pack(states), dpa.input_index(a)))
