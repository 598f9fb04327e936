# -*- coding: utf-8 -*-
"""
B92NetSim Core Module
Fehlertypen, Konfigurations-Loader und Event-Bus
"""

from .errors import QkdSimError, ConfigError, SimulationError
from .config import read_config_file, merge_section, config_to_dict, dump_config, get_value, with_value
from .event_bus import EventBus, EventType, Event, get_event_bus

__all__ = [
    'QkdSimError', 'ConfigError', 'SimulationError',
    'read_config_file', 'merge_section', 'config_to_dict', 'dump_config', 'get_value', 'with_value',
    'EventBus', 'EventType', 'Event', 'get_event_bus',
]
