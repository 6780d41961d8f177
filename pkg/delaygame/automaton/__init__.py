from .codec import load_dpa, parse_dpa, reference_instance, serialize_dpa
from .generators import prediction_family, random_dpa
from .model import Dpa, LassoWord, Letter, TrackedState, accepts_lasso, run_prefix

__all__ = [
    'Dpa',
    'LassoWord',
    'Letter',
    'TrackedState',
    'accepts_lasso',
    'load_dpa',
    'parse_dpa',
    'prediction_family',
    'random_dpa',
    'reference_instance',
    'run_prefix',
    'serialize_dpa',
]
