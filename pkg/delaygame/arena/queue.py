"""The delay game Γ_k encoded as a parity game over pending-input queues.

A base position ``(q, w)`` pairs the automaton state with the input letters
Player I has announced but Player O has not answered yet. While ``|w| ≤ k``
Player I appends a letter; at ``|w| = k + 1`` Player O answers the front
letter ``a`` with some ``b`` and the automaton moves to ``q' = δ(q, (a, b))``.
That move enters a post-transition copy of ``(q', w[1:])`` which carries
Ω(q'); every other vertex carries the neutral color min C.

Vertices are numbered so that the initial position ``(q_ι, ε)`` is vertex 0:
states are laid out starting from q_ι, each followed by its queues ordered
by length and then lexicographically.
"""

from delaygame.automaton import Dpa
from delaygame.errors import ResourceLimitError
from delaygame.logging import get_logger

from .abstract import DEFAULT_VERTEX_BUDGET
from .game import GameBuilder, ParityGame, Player

logger = get_logger(__name__)


def queue_game_size(dpa: Dpa, k: int, *, limit: int | None = None) -> tuple[int, int]:
    """Number of base positions and of post-transition copies.

    Stops counting early once the total exceeds ``limit``.
    """
    n_q = dpa.state_count
    n_in = len(dpa.sigma_i)
    words = 0
    power = 1
    full = 1
    for length in range(k + 2):
        words += power
        if limit is not None and n_q * words > limit:
            return n_q * words, 0
        if length == k:
            full = power
        power *= n_in
    return n_q * words, n_q * full


def _word_label(dpa: Dpa, length: int, code: int) -> str:
    n_in = len(dpa.sigma_i)
    letters = []
    for _ in range(length):
        code, a = divmod(code, n_in)
        letters.append(dpa.sigma_i[a])
    return '.'.join(reversed(letters))


def build_queue_game(
    dpa: Dpa,
    k: int,
    *,
    vertex_budget: int = DEFAULT_VERTEX_BUDGET,
) -> ParityGame:
    """Build the queue encoding of Γ_k.

    Raises:
        ResourceLimitError: The encoding needs more than ``vertex_budget`` vertices.
    """
    if k < 0:
        msg = f'lookahead must be non-negative, got {k}'
        raise ValueError(msg)
    base_count, post_count = queue_game_size(dpa, k, limit=vertex_budget)
    if base_count + post_count > vertex_budget:
        raise ResourceLimitError('vertex', vertex_budget, reached=base_count + post_count, k=k)

    n_q = dpa.state_count
    n_in = len(dpa.sigma_i)
    n_out = len(dpa.sigma_o)
    offsets = [0]
    for length in range(k + 2):
        offsets.append(offsets[-1] + n_in**length)
    words = offsets[-1]
    full = n_in**k  # queues of length k
    rank = [(q - dpa.initial) % n_q for q in range(n_q)]
    neutral = dpa.min_color

    def base(q: int, length: int, code: int) -> int:
        return rank[q] * words + offsets[length] + code

    def post(q: int, code: int) -> int:
        return base_count + rank[q] * full + code

    builder = GameBuilder(vertex_budget)
    for r in range(n_q):
        q = (r + dpa.initial) % n_q
        for length in range(k + 2):
            owner = Player.O if length == k + 1 else Player.I
            for code in range(n_in**length):
                builder.add(owner, neutral, f'q{q}|{_word_label(dpa, length, code)}')
    for r in range(n_q):
        q = (r + dpa.initial) % n_q
        for code in range(full):
            builder.add(Player.I, dpa.omega[q], f'q{q}|{_word_label(dpa, k, code)}*')

    for q in range(n_q):
        for length in range(k + 1):
            for code in range(n_in**length):
                builder.connect(base(q, length, code), [base(q, length + 1, code * n_in + a) for a in range(n_in)])
        for code in range(n_in ** (k + 1)):
            a, rest = divmod(code, full)
            builder.connect(base(q, k + 1, code), [post(dpa.successor(q, a, b), rest) for b in range(n_out)])
        for code in range(full):
            builder.connect(post(q, code), [base(q, k + 1, code * n_in + a) for a in range(n_in)])

    game = builder.build(initial=base(dpa.initial, 0, 0))
    logger.debug('game_built', kind='queue', k=k, vertices=game.vertex_count, edges=game.edge_count)
    return game
