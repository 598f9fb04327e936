# -*- coding: utf-8 -*-
"""B92NetSim Optics Module"""

from .polarization import (
    PolarizationState, StatePair, apply_pdl, eve_information_bound,
    normalize_angle, projection_probability,
    STATE0_ANGLE, STATE1_ANGLE, ANALYZER0_ANGLE, ANALYZER1_ANGLE,
)

__all__ = [
    'PolarizationState', 'StatePair', 'apply_pdl', 'eve_information_bound',
    'normalize_angle', 'projection_probability',
    'STATE0_ANGLE', 'STATE1_ANGLE', 'ANALYZER0_ANGLE', 'ANALYZER1_ANGLE',
]
