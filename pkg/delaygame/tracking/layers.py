"""The layers F_k = { f_w : |w| = k } and their eventual periodicity.

F_{k+1} is a function of F_k alone, so over the finite space of behavior
functions the sequence repeats after a preperiod μ with some period λ, and
any index, however large, folds into the explored prefix.
"""

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any

from delaygame.automaton import Dpa
from delaygame.errors import ResourceLimitError
from delaygame.logging import get_logger

from .behavior import BehaviorFunction, identity_function, step_function
from .table import tracking_table

logger = get_logger(__name__)

Layer = frozenset[BehaviorFunction]


@dataclass(frozen=True)
class LayerSequence:
    """Pairwise distinct layers F_0 … F_{μ+λ-1} with F_{μ+λ} = F_μ.

    ``parents[i]`` maps every function of layer ``i > 0`` to one predecessor
    in layer ``i - 1`` and the input index that leads from it.
    """

    sigma_i: tuple[str, ...]
    layers: tuple[Layer, ...]
    preperiod: int
    period: int
    parents: tuple[Mapping[BehaviorFunction, tuple[BehaviorFunction, int]], ...]

    def __len__(self) -> int:
        return len(self.layers)


def layer_sequence(dpa: Dpa, cap: int) -> LayerSequence:
    """Iterate the layers from {identity} until one repeats.

    Raises:
        ResourceLimitError: More than ``cap`` distinct layers would be needed.
    """
    table = tracking_table(dpa)
    n_in = len(dpa.sigma_i)
    current: Layer = frozenset({identity_function(table)})
    layers: list[Layer] = [current]
    index: dict[Layer, int] = {current: 0}
    parents: list[dict[BehaviorFunction, tuple[BehaviorFunction, int]]] = [{}]

    while True:
        successors: dict[BehaviorFunction, tuple[BehaviorFunction, int]] = {}
        for f in sorted(current):
            for a in range(n_in):
                successors.setdefault(step_function(table, f, a), (f, a))
        following: Layer = frozenset(successors)
        if following in index:
            preperiod = index[following]
            period = len(layers) - preperiod
            break
        if len(layers) >= cap:
            raise ResourceLimitError('layer', cap, reached=len(layers))
        index[following] = len(layers)
        layers.append(following)
        parents.append(successors)
        current = following

    logger.debug(
        'layers_built',
        preperiod=preperiod,
        period=period,
        layer_count=len(layers),
        largest_layer=max(len(layer) for layer in layers),
    )
    return LayerSequence(
        sigma_i=dpa.sigma_i,
        layers=tuple(layers),
        preperiod=preperiod,
        period=period,
        parents=tuple(parents),
    )


def fold_index(ls: LayerSequence, k: int) -> int:
    """The explored index holding F_k."""
    if k < 0:
        msg = f'layer index must be non-negative, got {k}'
        raise ValueError(msg)
    if k < len(ls.layers):
        return k
    return ls.preperiod + (k - ls.preperiod) % ls.period


def layer_at(ls: LayerSequence, k: int) -> Layer:
    """F_k for any k ≥ 0; k may be arbitrarily large."""
    return ls.layers[fold_index(ls, k)]


def witness(ls: LayerSequence, k: int, f: BehaviorFunction) -> tuple[str, ...]:
    """An input block of length exactly ``k`` whose behavior is ``f``.

    Only the explored prefix (``k < μ + λ``) keeps parent pointers.

    Raises:
        ValueError: ``k`` lies beyond the explored prefix.
        KeyError: ``f`` is not in F_k.
    """
    if not 0 <= k < len(ls.layers):
        msg = f'witnesses are kept for k < {len(ls.layers)}, got {k}'
        raise ValueError(msg)
    if f not in ls.layers[k]:
        msg = f'function is not in layer {k}'
        raise KeyError(msg)
    letters: list[int] = []
    for i in range(k, 0, -1):
        f, a = ls.parents[i][f]
        letters.append(a)
    return tuple(ls.sigma_i[a] for a in reversed(letters))


def layer_summary(ls: LayerSequence) -> dict[str, Any]:
    return {
        'preperiod': ls.preperiod,
        'period': ls.period,
        'layer_count': len(ls.layers),
        'layer_sizes': [len(layer) for layer in ls.layers],
    }
