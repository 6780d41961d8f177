from .behavior import BehaviorFunction, behavior_identity, behavior_step, behavior_values
from .layers import Layer, LayerSequence, fold_index, layer_at, layer_sequence, layer_summary, witness
from .table import TrackedSet, TrackingTable, delta_p, delta_t, tracking_table

__all__ = [
    'BehaviorFunction',
    'Layer',
    'LayerSequence',
    'TrackedSet',
    'TrackingTable',
    'behavior_identity',
    'behavior_step',
    'behavior_values',
    'delta_p',
    'delta_t',
    'fold_index',
    'layer_at',
    'layer_sequence',
    'layer_summary',
    'tracking_table',
    'witness',
]
