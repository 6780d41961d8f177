import time

from delaygame.arena import DEFAULT_VERTEX_BUDGET
from delaygame.automaton import Dpa
from delaygame.logging import get_logger

from .approx import ScanMode, approx_min_lookahead
from .games import DEFAULT_LAYER_CAP, decide_queue
from .reports import ComparisonReport, ExactReport, ReportMeta, ScanStep

logger = get_logger(__name__)


def exact_min_lookahead(
    dpa: Dpa,
    bound: int,
    *,
    vertex_budget: int = DEFAULT_VERTEX_BUDGET,
    check_monotone: bool = False,
) -> ExactReport:
    """Smallest k ≤ ``bound`` for which Player O wins Γ_k.

    Every k is evaluated in order; nothing is skipped on the strength of
    monotonicity. With ``check_monotone`` the scan continues to ``bound``
    after the first win and records any later loss.

    Raises:
        ResourceLimitError: The queue encoding for some k exceeds ``vertex_budget``.
    """
    if bound < 0:
        msg = f'bound must be non-negative, got {bound}'
        raise ValueError(msg)
    started = time.perf_counter()
    per_k: list[ScanStep] = []
    violations: list[int] = []
    k_opt: int | None = None
    largest = 0
    for k in range(bound + 1):
        won, vertices = decide_queue(dpa, k, vertex_budget)
        largest = max(largest, vertices)
        per_k.append(ScanStep(k=k, winner='O' if won else 'I'))
        logger.debug('scan_step', k=k, winner=per_k[-1].winner, vertices=vertices)
        if won and k_opt is None:
            k_opt = k
            if not check_monotone:
                break
        elif not won and k_opt is not None:
            violations.append(k)
            logger.warning('monotonicity_violation', k=k, first_win=k_opt)

    return ExactReport(
        outcome='no_win_up_to' if k_opt is None else 'exact',
        k_opt=k_opt,
        bound=bound,
        per_k=per_k,
        monotone_violations=violations,
        meta=ReportMeta(wall_time_s=time.perf_counter() - started, largest_game=largest),
    )


def compare(
    dpa: Dpa,
    bound: int,
    *,
    scan: ScanMode = 'linear',
    vertex_budget: int = DEFAULT_VERTEX_BUDGET,
    layer_cap: int = DEFAULT_LAYER_CAP,
    parallelism: int = 1,
) -> ComparisonReport:
    """Run both algorithms and check k_opt ≤ reported ≤ 2·k_opt − 1.

    A zero optimum is flagged as ``boundary``: the approximation starts at
    k = 1 and reports 1 there. An approximation without a win against a
    positive optimum counts as a violated sandwich.
    """
    exact = exact_min_lookahead(dpa, bound, vertex_budget=vertex_budget)
    approx = approx_min_lookahead(
        dpa,
        scan=scan,
        vertex_budget=vertex_budget,
        layer_cap=layer_cap,
        parallelism=parallelism,
    )
    k_opt = exact.k_opt
    reported = approx.reported
    holds: bool | None = None
    if k_opt is not None and k_opt >= 1:
        holds = reported is not None and k_opt <= reported <= 2 * k_opt - 1
        if not holds:
            logger.warning('sandwich_violated', k_opt=k_opt, reported=reported)

    return ComparisonReport(
        k_opt=k_opt,
        reported=reported,
        sandwich_holds=holds,
        boundary=k_opt == 0,
        approx_outcome=approx.outcome,
        exact_outcome=exact.outcome,
        meta=ReportMeta(
            wall_time_s=exact.meta.wall_time_s + approx.meta.wall_time_s,
            largest_game=max(exact.meta.largest_game, approx.meta.largest_game),
            layer_sizes=approx.meta.layer_sizes,
        ),
    )
