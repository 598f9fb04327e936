# -*- coding: utf-8 -*-
"""B92NetSim Detection Module"""

from .detector import (
    DetectorModel, DetectionRecord, DetectionRecords,
    jitter_at_rate, shift_at_rate, timing_sigma, registered_slot,
    register_offsets, slot_allocation_probabilities, misallocation_probability,
    dark_clicks, apply_dead_time, dead_time_factor,
    FWHM_PER_SIGMA, DEFAULT_JITTER_TABLES, DEFAULT_SHIFT_TABLES,
)

__all__ = [
    'DetectorModel', 'DetectionRecord', 'DetectionRecords',
    'jitter_at_rate', 'shift_at_rate', 'timing_sigma', 'registered_slot',
    'register_offsets', 'slot_allocation_probabilities', 'misallocation_probability',
    'dark_clicks', 'apply_dead_time', 'dead_time_factor',
    'FWHM_PER_SIGMA', 'DEFAULT_JITTER_TABLES', 'DEFAULT_SHIFT_TABLES',
]
