"""Instance generators: seeded random automata and the prediction family."""

import numpy as np

from .model import Dpa

_SEED_MASK = (1 << 64) - 1


def _symbols(count: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(count))


def random_dpa(
    n: int,
    colors: int,
    in_size: int,
    out_size: int,
    seed: int,
) -> Dpa:
    """Draw an automaton uniformly: every transition target and every state color.

    The result is a pure function of the arguments. Symbols are the decimal
    strings ``'0'``, ``'1'``, ...; the initial state is 0.
    """
    if min(n, colors, in_size, out_size) < 1:
        msg = 'all sizes must be positive'
        raise ValueError(msg)
    rng = np.random.default_rng(seed & _SEED_MASK)
    delta = rng.integers(0, n, size=n * in_size * out_size)
    omega = rng.integers(0, colors, size=n)
    return Dpa(
        sigma_i=_symbols(in_size),
        sigma_o=_symbols(out_size),
        state_count=n,
        initial=0,
        delta=tuple(int(q) for q in delta.tolist()),
        omega=tuple(int(c) for c in omega.tolist()),
    )


def _queue_index(queue: tuple[int, ...]) -> int:
    # queues are numbered by length, then by binary value
    value = 0
    for bit in queue:
        value = value * 2 + bit
    return (1 << len(queue)) - 1 + value


def prediction_family(d: int) -> Dpa:
    """Safety automaton for ``b_i = a_{i+d}`` over binary alphabets.

    States remember the last up to ``d`` output letters. Once the queue is
    full, reading ``(a, b)`` checks ``a`` against the oldest stored letter,
    drops it and stores ``b``; a mismatch moves to an absorbing bad state,
    the only state with color 1. Exactly ``d`` letters of lookahead are needed.
    """
    if d < 1:
        msg = f'd must be positive, got {d}'
        raise ValueError(msg)
    tracking = (1 << (d + 1)) - 1
    bad = tracking
    delta = [0] * ((tracking + 1) * 4)

    queues: list[tuple[int, ...]] = [()]
    for length in range(1, d + 1):
        queues.extend(tuple((v >> (length - 1 - j)) & 1 for j in range(length)) for v in range(1 << length))

    for queue in queues:
        q = _queue_index(queue)
        for a in (0, 1):
            for b in (0, 1):
                if len(queue) < d:
                    target = _queue_index((*queue, b))
                elif queue[0] == a:
                    target = _queue_index((*queue[1:], b))
                else:
                    target = bad
                delta[(q * 2 + a) * 2 + b] = target
    for slot in range(4):
        delta[bad * 4 + slot] = bad

    return Dpa(
        sigma_i=('0', '1'),
        sigma_o=('0', '1'),
        state_count=tracking + 1,
        initial=0,
        delta=tuple(delta),
        omega=(0,) * tracking + (1,),
    )
