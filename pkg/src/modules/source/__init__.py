# -*- coding: utf-8 -*-
"""B92NetSim Source Module"""

from .photon_source import (
    SourceConfig, EmittedPulse, EmittedPulses,
    generate_bitstream, sample_photon_number, multi_photon_probability,
    effective_pulse_fwhm, emit_pulses,
)

__all__ = [
    'SourceConfig', 'EmittedPulse', 'EmittedPulses',
    'generate_bitstream', 'sample_photon_number', 'multi_photon_probability',
    'effective_pulse_fwhm', 'emit_pulses',
]
