"""Deterministic parity automata over a product alphabet Σ_I × Σ_O."""

import re
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from delaygame.errors import InstanceValidationError, UnknownSymbolError

Letter = tuple[str, str]
"""A letter of the product alphabet: (input symbol, output symbol)."""

_BAD_SYMBOL = re.compile(r'[\s,]')


class TrackedState(NamedTuple):
    """A state together with the maximal color seen along a run segment."""

    state: int
    color: int


def check_alphabet(name: str, symbols: Sequence[str]) -> None:
    if not symbols:
        msg = 'alphabet must not be empty'
        raise InstanceValidationError(msg, location=name)
    seen: set[str] = set()
    for i, sym in enumerate(symbols):
        if not isinstance(sym, str) or not sym or _BAD_SYMBOL.search(sym):
            msg = f'invalid symbol {sym!r}: symbols are non-empty and free of whitespace and commas'
            raise InstanceValidationError(msg, location=f'{name}[{i}]')
        if sym in seen:
            msg = f'duplicate symbol {sym!r}'
            raise InstanceValidationError(msg, location=f'{name}[{i}]')
        seen.add(sym)


@dataclass(frozen=True)
class Dpa:
    """A deterministic parity automaton with a total transition table.

    The transition table is stored flat: the successor of state ``q`` on the
    letter with input index ``a`` and output index ``b`` is
    ``delta[(q * len(sigma_i) + a) * len(sigma_o) + b]``.
    """

    sigma_i: tuple[str, ...]
    sigma_o: tuple[str, ...]
    state_count: int
    initial: int
    delta: tuple[int, ...]
    omega: tuple[int, ...]
    _input_index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)
    _output_index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        check_alphabet('sigma_i', self.sigma_i)
        check_alphabet('sigma_o', self.sigma_o)
        if self.state_count < 1:
            msg = f'state count must be positive, got {self.state_count}'
            raise InstanceValidationError(msg, location='states')
        if not 0 <= self.initial < self.state_count:
            msg = f'initial state {self.initial} out of range'
            raise InstanceValidationError(msg, location='initial')
        if len(self.omega) != self.state_count:
            msg = f'expected {self.state_count} colors, got {len(self.omega)}'
            raise InstanceValidationError(msg, location='colors')
        if any(c < 0 for c in self.omega):
            msg = 'colors must be natural numbers'
            raise InstanceValidationError(msg, location='colors')
        expected = self.state_count * len(self.sigma_i) * len(self.sigma_o)
        if len(self.delta) != expected:
            msg = f'expected {expected} transitions, got {len(self.delta)}'
            raise InstanceValidationError(msg, location='transitions')
        if any(not 0 <= q < self.state_count for q in self.delta):
            msg = 'transition target out of range'
            raise InstanceValidationError(msg, location='transitions')
        object.__setattr__(self, '_input_index', {s: i for i, s in enumerate(self.sigma_i)})
        object.__setattr__(self, '_output_index', {s: i for i, s in enumerate(self.sigma_o)})

    @cached_property
    def colors(self) -> tuple[int, ...]:
        """The color set C, i.e. the image of Ω, in ascending order."""
        return tuple(sorted(set(self.omega)))

    @property
    def min_color(self) -> int:
        return self.colors[0]

    @property
    def max_color(self) -> int:
        return self.colors[-1]

    def successor(self, q: int, a: int, b: int) -> int:
        """δ(q, (a, b)) by dense letter indices."""
        return self.delta[(q * len(self.sigma_i) + a) * len(self.sigma_o) + b]

    def input_index(self, symbol: str) -> int:
        try:
            return self._input_index[symbol]
        except KeyError:
            msg = f'symbol {symbol!r} is not in the input alphabet'
            raise UnknownSymbolError(msg) from None

    def output_index(self, symbol: str) -> int:
        try:
            return self._output_index[symbol]
        except KeyError:
            msg = f'symbol {symbol!r} is not in the output alphabet'
            raise UnknownSymbolError(msg) from None

    def step(self, q: int, letter: Letter) -> int:
        """δ(q, letter) for a letter given by its symbols."""
        a, b = letter
        return self.successor(q, self.input_index(a), self.output_index(b))


@dataclass(frozen=True)
class LassoWord:
    """The ultimately periodic word ``prefix · cycle^ω``."""

    prefix: tuple[Letter, ...]
    cycle: tuple[Letter, ...]

    def __post_init__(self) -> None:
        if not self.cycle:
            msg = 'lasso cycle must not be empty'
            raise ValueError(msg)


def run_prefix(dpa: Dpa, start: int, word: Sequence[Letter]) -> TrackedState:
    """Run ``word`` from ``start`` and report the final state and maximal color.

    The maximal color covers every visited state, ``start`` included, so the
    empty word yields ``(start, Ω(start))``.

    Raises:
        UnknownSymbolError: If a letter uses a symbol outside the alphabets.
    """
    if not 0 <= start < dpa.state_count:
        msg = f'start state {start} out of range'
        raise ValueError(msg)
    q = start
    color = dpa.omega[q]
    for letter in word:
        q = dpa.step(q, letter)
        color = max(color, dpa.omega[q])
    return TrackedState(q, color)


def _segment(dpa: Dpa, q: int, word: Sequence[Letter]) -> tuple[int, int]:
    # max color over the states entered while reading word, start excluded
    best = -1
    for letter in word:
        q = dpa.step(q, letter)
        best = max(best, dpa.omega[q])
    return q, best


def accepts_lasso(dpa: Dpa, lasso: LassoWord) -> bool:
    """Decide whether the run on ``prefix · cycle^ω`` satisfies the parity condition.

    The run is followed cycle by cycle until the state at a cycle boundary
    repeats; the colors seen from the first occurrence on repeat forever.
    """
    q, _ = _segment(dpa, dpa.initial, lasso.prefix)
    first_seen: dict[int, int] = {}
    segment_max: list[int] = []
    while q not in first_seen:
        first_seen[q] = len(segment_max)
        q, best = _segment(dpa, q, lasso.cycle)
        segment_max.append(best)
    return max(segment_max[first_seen[q] :]) % 2 == 0
