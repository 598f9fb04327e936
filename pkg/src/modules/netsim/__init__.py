# -*- coding: utf-8 -*-
"""B92NetSim Network Simulation Module"""

from .scenario import (
    ScenarioConfig, DetectorPair, NetworkPort, NetworkTopology,
    parse_config, scenario_from_dict,
)
from .metrics import LinkMetrics, CountBreakdown, SECURITY_THRESHOLD
from .operating_point import OperatingPoint, ChannelPoint, compute_operating_point
from .analytic import AnalyticModel
from .monte_carlo import MonteCarloChain, MonteCarloResult
from .engine import (
    SimulationEngine, PortMetrics, SweepPoint, KeyGenerationResult,
    run_link, run_network, sweep, simulate_keys, get_engine,
    seed_sequence_for, apply_sweep_value,
)

__all__ = [
    'ScenarioConfig', 'DetectorPair', 'NetworkPort', 'NetworkTopology',
    'parse_config', 'scenario_from_dict',
    'LinkMetrics', 'CountBreakdown', 'SECURITY_THRESHOLD',
    'OperatingPoint', 'ChannelPoint', 'compute_operating_point',
    'AnalyticModel', 'MonteCarloChain', 'MonteCarloResult',
    'SimulationEngine', 'PortMetrics', 'SweepPoint', 'KeyGenerationResult',
    'run_link', 'run_network', 'sweep', 'simulate_keys', 'get_engine',
    'seed_sequence_for', 'apply_sweep_value',
]
