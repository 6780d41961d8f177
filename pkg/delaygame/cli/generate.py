import argparse
import sys

from delaygame.automaton import prediction_family, random_dpa, serialize_dpa
from delaygame.config import DelayGameConfig

from ._utils import positive_int


def add_gen_subparser(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    """Add the 'gen' command with one nested subcommand per generator."""
    gen_parser = subparsers.add_parser('gen', parents=parents, help='Print a generated instance as JSON')
    generators = gen_parser.add_subparsers(dest='generator', required=True, help='Instance generators')

    rand = generators.add_parser('random', help='Seeded random automaton')
    rand.add_argument('--states', type=positive_int, required=True, help='Number of states')
    rand.add_argument('--colors', type=positive_int, required=True, help='Colors are drawn from 0..C-1')
    rand.add_argument('--in', dest='in_size', type=positive_int, default=2, help='Input alphabet size')
    rand.add_argument('--out', dest='out_size', type=positive_int, default=2, help='Output alphabet size')
    rand.add_argument('--seed', type=int, required=True, help='Random seed')

    pred = generators.add_parser('prediction', help='Predict the input d letters ahead')
    pred.add_argument('--d', type=positive_int, required=True, help='Required lookahead')


def handle_gen_command(_config: DelayGameConfig, args: argparse.Namespace) -> int:
    """Write the instance to stdout; the output is an instance file, not a report."""
    if args.generator == 'random':
        dpa = random_dpa(args.states, args.colors, args.in_size, args.out_size, args.seed)
    else:
        dpa = prediction_family(args.d)
    sys.stdout.write(serialize_dpa(dpa))
    return 0
