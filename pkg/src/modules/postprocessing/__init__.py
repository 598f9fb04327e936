# -*- coding: utf-8 -*-
"""B92NetSim Postprocessing Module"""

from .entropy import binary_entropy
from .cascade import ReconciliationResult, CascadeReconciler, reconcile, key_digest
from .privacy import privacy_amplify, generate_seed
from .key_rate import KeyRateInputs, net_bit_rate, secret_fraction, final_key_length
from .key_files import write_key_file, read_key_file
from .distill import PostprocessingSettings, DistillationResult, distill_key

__all__ = [
    'binary_entropy',
    'ReconciliationResult', 'CascadeReconciler', 'reconcile', 'key_digest',
    'privacy_amplify', 'generate_seed',
    'KeyRateInputs', 'net_bit_rate', 'secret_fraction', 'final_key_length',
    'write_key_file', 'read_key_file',
    'PostprocessingSettings', 'DistillationResult', 'distill_key',
]
