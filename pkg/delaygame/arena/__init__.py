from .abstract import DEFAULT_VERTEX_BUDGET, build_abstract_game
from .game import GameBuilder, ParityGame, Player, game_stats
from .pgsolver import export_pg, import_pg
from .queue import build_queue_game, queue_game_size

__all__ = [
    'DEFAULT_VERTEX_BUDGET',
    'GameBuilder',
    'ParityGame',
    'Player',
    'build_abstract_game',
    'build_queue_game',
    'export_pg',
    'game_stats',
    'import_pg',
    'queue_game_size',
]
