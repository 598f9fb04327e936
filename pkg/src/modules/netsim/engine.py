# -*- coding: utf-8 -*-
"""
B92NetSim - Simulations-Engine
Punkt-zu-Punkt-Links, 1xN-Netze, Parameter-Sweeps und Schlüsselerzeugung
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, List, Optional, Sequence

import numpy as np

from core.config import with_value
from core.errors import SimulationError
from core.event_bus import EventType, get_event_bus
from modules.channel.link_budget import LinkPath
from modules.netsim.analytic import AnalyticModel
from modules.netsim.metrics import LinkMetrics
from modules.netsim.monte_carlo import MonteCarloChain, MonteCarloResult
from modules.netsim.operating_point import compute_operating_point
from modules.netsim.scenario import (
    NetworkPort, NetworkTopology, ScenarioConfig, validate_ports,
)
from modules.postprocessing.distill import DistillationResult, distill_key

logger = logging.getLogger(__name__)

# Sweep-Parameter mit Kurznamen
SWEEP_PARAMETERS = {
    "clock_hz": "source.clock_hz",
    "fiber_length_km": "path.fiber_length_km",
    "attenuation_equivalent_db": None,
}


@dataclass
class PortMetrics:
    """Ergebnis eines Netz-Ports"""
    port_id: int
    drop_length_km: float
    pdl_db: float
    metrics: LinkMetrics


@dataclass
class SweepPoint:
    """Ein Punkt eines Parameter-Sweeps"""
    value: float
    metrics: LinkMetrics


@dataclass
class KeyGenerationResult:
    """Sifting-Lauf plus Destillation"""
    metrics: LinkMetrics
    distillation: DistillationResult

    @property
    def success(self) -> bool:
        return self.distillation.success


def seed_sequence_for(seed: int, port_id: Optional[int] = None,
                      stream: Optional[int] = None) -> np.random.SeedSequence:
    """
    Deterministischer Teilstrom

    Ports erhalten spawn_key (port_id,), Nebenströme (port_id, stream).
    """
    key = ()
    if port_id is not None:
        key = (port_id,) if stream is None else (port_id, stream)
    return np.random.SeedSequence(seed, spawn_key=key)


def apply_sweep_value(config: ScenarioConfig, parameter: str, value: float) -> ScenarioConfig:
    """
    Setzt einen Sweep-Wert

    attenuation_equivalent_db ersetzt die Faser durch einen konzentrierten
    Dämpfer gleicher Dämpfung (ohne Dispersion). Andere Parameter dürfen
    auch als Punktpfad angegeben werden.
    """
    if parameter == "attenuation_equivalent_db":
        path = replace(config.path, fiber_length_km=0.0, attenuator_db=float(value))
        return replace(config, path=path)
    key = SWEEP_PARAMETERS.get(parameter)
    if key is None:
        if "." not in parameter:
            raise ValueError(f"Unbekannter Sweep-Parameter: {parameter}")
        key = parameter
    return with_value(config, key, value)


class SimulationEngine:
    """
    Führt Läufe aus und meldet den Fortschritt über den Event-Bus

    Sweeps und Netz-Ports sind unabhängig und können parallel laufen;
    die Ergebnisse werden immer in Eingabereihenfolge geliefert.
    """

    def __init__(self, max_workers: int = 1, event_bus=None):
        if max_workers < 1:
            raise ValueError(f"max_workers muss >= 1 sein: {max_workers}")
        self.max_workers = max_workers
        self._event_bus = event_bus

    @property
    def event_bus(self):
        if self._event_bus is None:
            self._event_bus = get_event_bus()
        return self._event_bus

    def _map(self, function: Callable, items: Sequence) -> List:
        if self.max_workers == 1 or len(items) <= 1:
            return [function(item) for item in items]
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            return list(executor.map(function, items))

    def _simulate(self, config: ScenarioConfig, route: Optional[Sequence[LinkPath]],
                  seed_sequence: Optional[np.random.SeedSequence],
                  force_monte_carlo: bool = False):
        if config.total_slots == 0:
            raise SimulationError("Lauf ohne Zeitschlitze (slot_count = 0)")

        point = compute_operating_point(config, route)
        if config.mode == "analytic" and not force_monte_carlo:
            return AnalyticModel(config, point).compute()

        sequence = seed_sequence if seed_sequence is not None \
            else seed_sequence_for(config.seed)
        return MonteCarloChain(config, point, sequence).run()

    def run_link(self, config: ScenarioConfig,
                 route: Optional[Sequence[LinkPath]] = None,
                 seed_sequence: Optional[np.random.SeedSequence] = None) -> LinkMetrics:
        """
        Simuliert einen Link

        Args:
            config: Szenario (Modus analytic oder monte_carlo)
            route: Optionale Teilstrecken statt config.path
            seed_sequence: Optionaler Zufallsstrom statt config.seed

        Returns:
            LinkMetrics

        Raises:
            SimulationError: Keine Zeitschlitze
        """
        result = self._simulate(config, route, seed_sequence)
        metrics = result.metrics if isinstance(result, MonteCarloResult) else result
        logger.info("Link (%s): QBER %.4f, gesiftet %.4g bit/s, NBR %.4g bit/s",
                    config.mode, metrics.qber, metrics.sifted_rate_hz, metrics.nbr_hz)
        return metrics

    def _port_route(self, topology: NetworkTopology, port: NetworkPort,
                    seed: int) -> tuple:
        pdl_db = port.pdl_db
        if topology.randomize_pdl:
            rng = np.random.default_rng(seed_sequence_for(seed, port.port_id, stream=1))
            pdl_db = float(rng.uniform(0.0, topology.max_pdl_db))
        route = [topology.upstream, port.splitter_segment(pdl_db), port.drop]
        return route, pdl_db

    def run_network(self, topology: NetworkTopology,
                    base_config: ScenarioConfig) -> List[PortMetrics]:
        """
        Simuliert alle aktiven Ports eines 1xN-Netzes

        Jeder Port ist ein eigener Link (Zubringer + Splitter + Drop) mit
        einem aus (seed, port_id) abgeleiteten Zufallsstrom.

        Raises:
            ConfigError: Doppelte oder ungültige Port-Nummern
        """
        validate_ports(topology.ports, topology.port_count)
        self.event_bus.emit(EventType.RUN_STARTED, {
            'kind': 'network', 'ports': len(topology.ports)}, source='engine')

        def run_port(port: NetworkPort) -> PortMetrics:
            route, pdl_db = self._port_route(topology, port, base_config.seed)
            metrics = self.run_link(base_config, route,
                                    seed_sequence_for(base_config.seed, port.port_id))
            return PortMetrics(port.port_id, port.drop.fiber_length_km, pdl_db, metrics)

        results = self._map(run_port, topology.ports)
        for result in results:
            self.event_bus.emit(EventType.PORT_COMPLETED, {
                'port_id': result.port_id, 'qber': result.metrics.qber,
                'nbr_hz': result.metrics.nbr_hz}, source='engine')

        self.event_bus.emit(EventType.RUN_COMPLETED, {
            'kind': 'network', 'ports': len(results)}, source='engine')
        return results

    def sweep(self, parameter: str, values: Sequence[float],
              base_config: ScenarioConfig) -> List[SweepPoint]:
        """
        Ein Lauf pro Wert, alle mit dem Seed der Basiskonfiguration

        Raises:
            ValueError: Leere Werteliste oder unbekannter Parameter
        """
        values = list(values)
        if not values:
            raise ValueError("Sweep ohne Werte")

        configs = [apply_sweep_value(base_config, parameter, value) for value in values]
        self.event_bus.emit(EventType.RUN_STARTED, {
            'kind': 'sweep', 'parameter': parameter, 'points': len(values)}, source='engine')

        results = self._map(self.run_link, configs)
        points = []
        for index, (value, metrics) in enumerate(zip(values, results)):
            points.append(SweepPoint(float(value), metrics))
            self.event_bus.emit_sweep_progress(index + 1, len(values), value, source='engine')

        self.event_bus.emit(EventType.RUN_COMPLETED, {
            'kind': 'sweep', 'parameter': parameter, 'points': len(points)}, source='engine')
        return points

    def simulate_keys(self, config: ScenarioConfig) -> MonteCarloResult:
        """Monte-Carlo-Lauf (unabhängig vom Modus) mit gesifteten Schlüsseln."""
        return self._simulate(config, None, None, force_monte_carlo=True)

    def generate_keys(self, config: ScenarioConfig) -> KeyGenerationResult:
        """
        Sifting plus Destillation zu einem gemeinsamen Endschlüssel

        Raises:
            SimulationError: Keine Zeitschlitze
        """
        result = self.simulate_keys(config)
        distillation = distill_key(result.alice_key, result.bob_key,
                                   result.metrics.eve_fraction,
                                   config.postprocessing, result.rng)
        if distillation.converged and not np.array_equal(distillation.alice_key,
                                                         distillation.bob_key):
            raise SimulationError("Endschlüssel von Alice und Bob verschieden")
        return KeyGenerationResult(result.metrics, distillation)


# Standard-Engine für die Modulfunktionen
_default_engine: Optional[SimulationEngine] = None


def get_engine() -> SimulationEngine:
    """Gibt die globale Engine-Instanz zurück."""
    global _default_engine
    if _default_engine is None:
        _default_engine = SimulationEngine()
    return _default_engine


def run_link(config: ScenarioConfig, route: Optional[Sequence[LinkPath]] = None,
             seed_sequence: Optional[np.random.SeedSequence] = None) -> LinkMetrics:
    return get_engine().run_link(config, route, seed_sequence)


def run_network(topology: NetworkTopology, base_config: ScenarioConfig) -> List[PortMetrics]:
    return get_engine().run_network(topology, base_config)


def sweep(parameter: str, values: Sequence[float],
          base_config: ScenarioConfig) -> List[SweepPoint]:
    return get_engine().sweep(parameter, values, base_config)


def simulate_keys(config: ScenarioConfig) -> MonteCarloResult:
    return get_engine().simulate_keys(config)
