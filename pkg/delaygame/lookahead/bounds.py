from delaygame.automaton import Dpa
from delaygame.tracking import LayerSequence


def k_max(dpa: Dpa) -> int:
    """2^(n²·c + 1): lookahead beyond this never helps Player O.

    ``n`` is the number of states and ``c`` the number of distinct colors.
    """
    n = dpa.state_count
    return 2 ** (n * n * len(dpa.colors) + 1)


def effective_bound(dpa: Dpa, ls: LayerSequence, cap: int | None = None) -> int:
    """The largest k a scan has to look at.

    Every layer F_k with k ≥ 1 already occurs among F_1 … F_{μ+λ}, so the
    abstract game cannot change beyond that index.
    """
    bound = min(k_max(dpa), len(ls))
    if cap is not None:
        bound = min(bound, cap)
    return bound
