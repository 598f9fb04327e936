# -*- coding: utf-8 -*-
"""B92NetSim Command Line"""

from .commands import main, build_parser
from .presets import PRESETS, ExperimentPreset, PresetResult, SweepSpec, run_preset, get_preset
from .csv_output import CSV_COLUMNS, render_csv, write_csv, write_manifest

__all__ = [
    'main', 'build_parser',
    'PRESETS', 'ExperimentPreset', 'PresetResult', 'SweepSpec', 'run_preset', 'get_preset',
    'CSV_COLUMNS', 'render_csv', 'write_csv', 'write_manifest',
]
