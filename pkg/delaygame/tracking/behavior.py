"""Behavior functions: what an input block does to every start state."""

from dataclasses import dataclass

from delaygame.automaton import Dpa

from .table import TrackedSet, TrackingTable, tracking_table


@dataclass(frozen=True, order=True)
class BehaviorFunction:
    """The map q ↦ δ_P*({(q, Ω(q))}, w) for one input block w.

    ``values[q]`` is the tracked set reached from ``q``, as a bit pattern of
    the automaton's :class:`TrackingTable`. Restricting the function to a
    domain D only keeps the values of the states occurring in D, because the
    color in a tracked argument does not influence the result.
    """

    values: tuple[int, ...]

    def restrict(self, states: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(self.values[q] for q in states)


def identity_function(table: TrackingTable) -> BehaviorFunction:
    return BehaviorFunction(tuple(table.seed(q) for q in range(table.dpa.state_count)))


def step_function(table: TrackingTable, f: BehaviorFunction, a: int) -> BehaviorFunction:
    return BehaviorFunction(tuple(table.step(mask, a) for mask in f.values))


def behavior_identity(dpa: Dpa) -> BehaviorFunction:
    """The behavior of the empty block: f(q) = {(q, Ω(q))}."""
    return identity_function(tracking_table(dpa))


def behavior_step(dpa: Dpa, f: BehaviorFunction, a: str) -> BehaviorFunction:
    """Extend the summarized block by the input letter ``a``."""
    return step_function(tracking_table(dpa), f, dpa.input_index(a))


def behavior_values(dpa: Dpa, f: BehaviorFunction) -> tuple[TrackedSet, ...]:
    """Decode every value set of ``f`` into tracked states."""
    table = tracking_table(dpa)
    return tuple(table.unpack(mask) for mask in f.values)
