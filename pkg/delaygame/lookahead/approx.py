"""The factor-two approximation of the minimal lookahead.

Player O wins Γ_k ⇒ she wins 𝒢_k ⇒ she wins Γ_{2k−1}. Scanning k upwards
for the first abstract win k* therefore brackets the optimum:
k_opt ≤ 2k* − 1 ≤ 2·k_opt − 1.
"""

import logging
import time
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from multiprocessing.context import BaseContext
from typing import Literal

from delaygame.arena import DEFAULT_VERTEX_BUDGET
from delaygame.automaton import Dpa
from delaygame.errors import ResourceLimitError
from delaygame.logging import configure_logging, get_logger
from delaygame.tracking import LayerSequence, layer_at, layer_sequence

from .bounds import effective_bound, k_max
from .games import DEFAULT_LAYER_CAP, decide_layer
from .reports import LayerStats, LookaheadReport, ReportMeta, ScanStep

logger = get_logger(__name__)

ScanMode = Literal['linear', 'binary']


def _open_pool(parallelism: int, mp_context: BaseContext | None) -> ProcessPoolExecutor:
    # spawned workers start with structlog defaults, which print to stdout
    verbose = logging.getLogger().isEnabledFor(logging.DEBUG)
    return ProcessPoolExecutor(
        max_workers=parallelism,
        mp_context=mp_context,
        initializer=partial(configure_logging, verbose=verbose),
    )


class _Evaluator:
    """Decides 𝒢_k for batches of k, optionally in worker processes."""

    def __init__(self, dpa: Dpa, ls: LayerSequence, vertex_budget: int, pool: ProcessPoolExecutor | None) -> None:
        self.dpa = dpa
        self.ls = ls
        self.vertex_budget = vertex_budget
        self.pool = pool
        self.verdicts: dict[int, bool] = {}
        self.largest_game = 0

    def _record(self, k: int, won: bool, vertices: int) -> None:
        self.verdicts[k] = won
        self.largest_game = max(self.largest_game, vertices)
        logger.debug('scan_step', k=k, winner='O' if won else 'I', vertices=vertices)

    def batch(self, ks: Iterable[int]) -> dict[int, bool]:
        ks = [k for k in ks if k not in self.verdicts]
        if self.pool is None or len(ks) < 2:
            for k in ks:
                self._record(k, *self._decide(k))
        else:
            futures = {
                k: self.pool.submit(decide_layer, self.dpa, layer_at(self.ls, k), self.vertex_budget) for k in ks
            }
            for k, future in futures.items():
                try:
                    self._record(k, *future.result())
                except ResourceLimitError as e:
                    # a sequential scan stops at an earlier win before reaching k
                    if any(self.verdicts.get(j) for j in ks if j < k):
                        break
                    raise e.at_k(k) from e
        return {k: self.verdicts[k] for k in ks if k in self.verdicts}

    def wins(self, k: int) -> bool:
        self.batch([k])
        return self.verdicts[k]

    def _decide(self, k: int) -> tuple[bool, int]:
        try:
            return decide_layer(self.dpa, layer_at(self.ls, k), self.vertex_budget)
        except ResourceLimitError as e:
            raise e.at_k(k) from e


def _linear(evaluator: _Evaluator, bound: int, width: int) -> int | None:
    for start in range(1, bound + 1, width):
        verdicts = evaluator.batch(range(start, min(start + width, bound + 1)))
        winning = [k for k, won in verdicts.items() if won]
        if winning:
            return min(winning)
    return None


def _binary(evaluator: _Evaluator, bound: int) -> int | None:
    # assumes k ↦ (O wins 𝒢_k) is monotone
    if not evaluator.wins(bound):
        return None
    lo, hi = 1, bound
    while lo < hi:
        mid = (lo + hi) // 2
        if evaluator.wins(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def approx_min_lookahead(
    dpa: Dpa,
    *,
    scan: ScanMode = 'linear',
    cap: int | None = None,
    vertex_budget: int = DEFAULT_VERTEX_BUDGET,
    layer_cap: int = DEFAULT_LAYER_CAP,
    parallelism: int = 1,
    mp_context: BaseContext | None = None,
) -> LookaheadReport:
    """Find the least k with an abstract win and report 2k − 1.

    The linear scan is exact about k*. The binary scan relies on the
    abstract games being monotone in k, which is not guaranteed.
    ``mp_context`` selects the start method of the worker processes.

    Raises:
        ResourceLimitError: A budget ran out; ``k`` names the lookahead reached.
    """
    if cap is not None and cap < 1:
        msg = f'cap must be positive, got {cap}'
        raise ValueError(msg)
    started = time.perf_counter()
    ls = layer_sequence(dpa, layer_cap)
    bound = effective_bound(dpa, ls, cap)

    pool = _open_pool(parallelism, mp_context) if parallelism > 1 and scan == 'linear' else None
    try:
        evaluator = _Evaluator(dpa, ls, vertex_budget, pool)
        k_star = _linear(evaluator, bound, max(parallelism, 1)) if scan == 'linear' else _binary(evaluator, bound)
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)

    # later ks of a parallel batch are dropped so the result matches the sequential scan
    evaluated = sorted(k for k in evaluator.verdicts if scan == 'binary' or k_star is None or k <= k_star)
    report = LookaheadReport(
        outcome='no_win' if k_star is None else 'win',
        k_star=k_star,
        reported=None if k_star is None else 2 * k_star - 1,
        scan=scan,
        scanned_ks=[ScanStep(k=k, winner='O' if evaluator.verdicts[k] else 'I') for k in evaluated],
        layer_stats=LayerStats(preperiod=ls.preperiod, period=ls.period),
        effective_bound=bound,
        k_max=k_max(dpa),
        meta=ReportMeta(
            wall_time_s=time.perf_counter() - started,
            largest_game=evaluator.largest_game,
            layer_sizes=[len(layer) for layer in ls.layers],
        ),
    )
    logger.info('approximation_finished', outcome=report.outcome, k_star=k_star, reported=report.reported)
    return report
