from .approx import ScanMode, approx_min_lookahead
from .bounds import effective_bound, k_max
from .exact import compare, exact_min_lookahead
from .games import DEFAULT_LAYER_CAP, wins_abstract, wins_exact
from .reports import ComparisonReport, ExactReport, LayerStats, LookaheadReport, ReportMeta, ScanStep

__all__ = [
    'DEFAULT_LAYER_CAP',
    'ComparisonReport',
    'ExactReport',
    'LayerStats',
    'LookaheadReport',
    'ReportMeta',
    'ScanMode',
    'ScanStep',
    'approx_min_lookahead',
    'compare',
    'effective_bound',
    'exact_min_lookahead',
    'k_max',
    'wins_abstract',
    'wins_exact',
]
