# -*- coding: utf-8 -*-
"""
B92NetSim - Szenario-Konfiguration
Alle Abschnitte eines Laufs als Dataclasses, kombiniert in ScenarioConfig
"""

import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from core.config import ITEM_TYPE, merge_section, read_config_file
from core.errors import ConfigError
from modules.channel.link_budget import LinkPath
from modules.detection.detector import DetectorModel
from modules.postprocessing.distill import PostprocessingSettings
from modules.protocol.b92 import ReceiverSetup
from modules.source.photon_source import SourceConfig

logger = logging.getLogger(__name__)

MODES = ("analytic", "monte_carlo")

# Drop-Längen der vier gemessenen Ports (km)
DEFAULT_PORT_LENGTHS_KM = (0.0, 2.0, 3.8, 6.4)


@dataclass
class DetectorPair:
    """Die beiden Zählmodule hinter den eindeutigen Ausgängen"""
    channel0: DetectorModel = field(default_factory=DetectorModel)
    channel1: DetectorModel = field(default_factory=DetectorModel)

    def __getitem__(self, channel: int) -> DetectorModel:
        if channel == 0:
            return self.channel0
        if channel == 1:
            return self.channel1
        raise IndexError(f"Kanal muss 0 oder 1 sein: {channel}")

    def with_variant(self, variant: str) -> "DetectorPair":
        """Beide Detektoren auf die Standardtabellen einer Variante umstellen."""
        return DetectorPair(
            replace(self.channel0, variant=variant, jitter_table=None, shift_table=None),
            replace(self.channel1, variant=variant, jitter_table=None, shift_table=None),
        )


def _drop_path() -> LinkPath:
    return LinkPath(receiver_excess_loss_db=3.0)


@dataclass
class NetworkPort:
    """
    Ein aktiver Splitter-Ausgang

    Attributes:
        port_id: Nummer des Ausgangs (0 .. port_count-1)
        drop: Faser vom Splitter zum Empfänger (inkl. Empfängerverlust)
        splitter_loss_db: Einfügedämpfung des Splitters für diesen Port
        pdl_db: PDL des Splitter-Pfads
        pdl_axis: Verlustarme Achse dieser PDL (Radiant)
    """
    port_id: int = 0
    drop: LinkPath = field(default_factory=_drop_path)
    splitter_loss_db: float = 18.7
    pdl_db: float = 0.0
    pdl_axis: float = 0.0

    def __post_init__(self):
        if isinstance(self.port_id, bool) or not isinstance(self.port_id, int) or self.port_id < 0:
            raise ConfigError("port_id muss eine ganze Zahl >= 0 sein", field_path="port_id")
        if self.splitter_loss_db < 0:
            raise ConfigError("splitter_loss_db darf nicht negativ sein",
                              field_path="splitter_loss_db")
        if self.pdl_db < 0:
            raise ConfigError("pdl_db darf nicht negativ sein", field_path="pdl_db")

    def splitter_segment(self, pdl_db: Optional[float] = None) -> LinkPath:
        """Splitter als konzentriertes Element ohne Faser."""
        return LinkPath(
            splitter_loss_db=self.splitter_loss_db,
            pdl_db=self.pdl_db if pdl_db is None else pdl_db,
            pdl_axis=self.pdl_axis,
        )


def _default_ports() -> List[NetworkPort]:
    return [
        NetworkPort(port_id=index, drop=LinkPath(fiber_length_km=length,
                                                 receiver_excess_loss_db=3.0))
        for index, length in enumerate(DEFAULT_PORT_LENGTHS_KM)
    ]


@dataclass
class NetworkTopology:
    """
    1xN-Netz: ein Sender, gemeinsamer Zubringer, passiver Splitter

    Attributes:
        port_count: Anzahl Splitter-Ausgänge
        upstream: Gemeinsame Strecke vor dem Splitter
        ports: Aktive Ports
        randomize_pdl: PDL je Port gleichverteilt in [0, max_pdl_db] ziehen
        max_pdl_db: Obergrenze für randomize_pdl
    """
    port_count: int = 32
    upstream: LinkPath = field(default_factory=LinkPath)
    ports: List[NetworkPort] = field(default_factory=_default_ports,
                                     metadata={ITEM_TYPE: NetworkPort})
    randomize_pdl: bool = False
    max_pdl_db: float = 1.1

    def __post_init__(self):
        if isinstance(self.port_count, bool) or not isinstance(self.port_count, int) \
                or self.port_count < 1:
            raise ConfigError("port_count muss >= 1 sein", field_path="port_count")
        if self.max_pdl_db < 0:
            raise ConfigError("max_pdl_db darf nicht negativ sein", field_path="max_pdl_db")
        validate_ports(self.ports, self.port_count)


def validate_ports(ports: List[NetworkPort], port_count: int):
    """Prüft Anzahl, Eindeutigkeit und Bereich der Port-Nummern."""
    if not 1 <= len(ports) <= port_count:
        raise ConfigError(f"1 bis {port_count} aktive Ports erforderlich, {len(ports)} angegeben",
                          field_path="ports")
    seen = set()
    for index, port in enumerate(ports):
        if port.port_id in seen:
            raise ConfigError(f"Doppelte Port-Nummer: {port.port_id}",
                              field_path=f"ports.{index}.port_id")
        if port.port_id >= port_count:
            raise ConfigError(f"Port-Nummer außerhalb 0..{port_count - 1}",
                              field_path=f"ports.{index}.port_id")
        seen.add(port.port_id)


def _p2p_path() -> LinkPath:
    return LinkPath(fiber_length_km=4.2, receiver_excess_loss_db=3.0)


@dataclass
class ScenarioConfig:
    """
    Vollständige Beschreibung eines Simulationslaufs

    Die Taktrate steht einmalig in source.clock_hz. Die Laufdauer wird
    über duration_s oder slot_count angegeben; ein gesetzter slot_count hat
    Vorrang.
    """
    source: SourceConfig = field(default_factory=SourceConfig)
    path: LinkPath = field(default_factory=_p2p_path)
    detectors: DetectorPair = field(default_factory=DetectorPair)
    receiver: ReceiverSetup = field(default_factory=ReceiverSetup)
    postprocessing: PostprocessingSettings = field(default_factory=PostprocessingSettings)
    network: NetworkTopology = field(default_factory=NetworkTopology)
    duration_s: Optional[float] = 0.01
    slot_count: Optional[int] = None
    seed: int = 0
    mode: str = "analytic"
    window_fraction: float = 1.0
    sample_fraction: float = 1.0
    eve_fraction: Optional[float] = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigError(f"Unbekannter Modus: {self.mode}", field_path="mode")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) \
                or not 0 <= self.seed < 2 ** 64:
            raise ConfigError("seed muss eine ganze Zahl in [0, 2^64) sein", field_path="seed")
        if not 0.0 < self.window_fraction <= 1.0:
            raise ConfigError("window_fraction muss in (0, 1] liegen",
                              field_path="window_fraction")
        if not 0.0 < self.sample_fraction <= 1.0:
            raise ConfigError("sample_fraction muss in (0, 1] liegen",
                              field_path="sample_fraction")
        if self.eve_fraction is not None and not 0.0 <= self.eve_fraction <= 1.0:
            raise ConfigError("eve_fraction muss in [0, 1] liegen", field_path="eve_fraction")

        if self.slot_count is None and self.duration_s is None:
            raise ConfigError("duration_s oder slot_count angeben", field_path="duration_s")
        if self.slot_count is not None:
            if isinstance(self.slot_count, bool) or not isinstance(self.slot_count, int) \
                    or self.slot_count < 0:
                raise ConfigError("slot_count muss eine ganze Zahl >= 0 sein",
                                  field_path="slot_count")
        if self.duration_s is not None and self.duration_s < 0:
            raise ConfigError("duration_s darf nicht negativ sein", field_path="duration_s")

    @property
    def clock_hz(self) -> float:
        return self.source.clock_hz

    @property
    def slot_duration_s(self) -> float:
        return 1.0 / self.source.clock_hz

    @property
    def total_slots(self) -> int:
        """Anzahl Zeitschlitze (slot_count oder clock_hz * duration_s)."""
        if self.slot_count is not None:
            return self.slot_count
        return int(round(self.source.clock_hz * self.duration_s))

    @property
    def run_duration_s(self) -> float:
        return self.total_slots / self.source.clock_hz


def scenario_from_dict(data: Dict[str, Any],
                       base: Optional[ScenarioConfig] = None) -> ScenarioConfig:
    """Überträgt ein (Teil-)Dict auf eine Basiskonfiguration."""
    return merge_section(base if base is not None else ScenarioConfig(), data)


def parse_config(path: Union[str, Path]) -> ScenarioConfig:
    """
    Liest eine Szenario-Datei (JSON)

    Fehlende Felder erhalten Standardwerte, unbekannte Schlüssel sind ein
    Fehler.

    Raises:
        ConfigError: Datei fehlt, Syntaxfehler (mit Zeile), unbekannter
            Schlüssel oder verletzte Invariante (mit Feldpfad)
    """
    data = read_config_file(path)
    config = scenario_from_dict(data)
    logger.info("Konfiguration geladen: %s (Modus %s, %d Schlitze)",
                path, config.mode, config.total_slots)
    return config
