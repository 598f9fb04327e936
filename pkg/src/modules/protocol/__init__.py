# -*- coding: utf-8 -*-
"""B92NetSim Protocol Module"""

from .b92 import (
    Outcome, OUTCOME_ORDER, ReceiverSetup, SiftedKey,
    conclusive_port_probability, outcome_probabilities, measure_pulse,
    sift, sift_indices, measure_qber,
)

__all__ = [
    'Outcome', 'OUTCOME_ORDER', 'ReceiverSetup', 'SiftedKey',
    'conclusive_port_probability', 'outcome_probabilities', 'measure_pulse',
    'sift', 'sift_indices', 'measure_qber',
]
