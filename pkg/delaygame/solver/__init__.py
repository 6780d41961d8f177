from .attractor import attractor
from .oracle import DEFAULT_ENUMERATION_GUARD, brute_force_solve, verify_solution
from .solution import Solution, dual_game, winner
from .zielonka import solve_parity

__all__ = [
    'DEFAULT_ENUMERATION_GUARD',
    'Solution',
    'attractor',
    'brute_force_solve',
    'dual_game',
    'solve_parity',
    'verify_solution',
    'winner',
]
