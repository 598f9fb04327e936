# -*- coding: utf-8 -*-
"""
B92NetSim - Photonenquelle
Abgeschwächte gepulste Quelle: Bitstrom, Poisson-Photonenzahl, Pulsbreite
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from core.errors import ConfigError
from modules.optics.polarization import PolarizationState, StatePair

logger = logging.getLogger(__name__)


@dataclass
class SourceConfig:
    """
    Quellenparameter

    Attributes:
        mu: Mittlere Photonenzahl pro Puls
        pulse_fwhm: Optische Pulsbreite (FWHM) in Sekunden
        clock_hz: Taktrate
        wavelength_nm: Wellenlänge
        linewidth_nm: Spektrale Linienbreite (für Dispersion)
        patterning_s_per_ghz: Zusätzliche Pulsverbreiterung pro GHz Takt
    """
    mu: float = 0.1
    pulse_fwhm: float = 100e-12
    clock_hz: float = 1e9
    wavelength_nm: float = 850.0
    linewidth_nm: float = 0.15
    patterning_s_per_ghz: float = 0.0

    def __post_init__(self):
        if not self.mu > 0:
            raise ConfigError("mu muss > 0 sein", field_path="mu")
        if self.pulse_fwhm < 0:
            raise ConfigError("pulse_fwhm darf nicht negativ sein", field_path="pulse_fwhm")
        if not self.clock_hz > 0:
            raise ConfigError("clock_hz muss > 0 sein", field_path="clock_hz")
        if not self.wavelength_nm > 0:
            raise ConfigError("wavelength_nm muss > 0 sein", field_path="wavelength_nm")
        if self.linewidth_nm < 0:
            raise ConfigError("linewidth_nm darf nicht negativ sein", field_path="linewidth_nm")
        if self.patterning_s_per_ghz < 0:
            raise ConfigError("patterning_s_per_ghz darf nicht negativ sein",
                              field_path="patterning_s_per_ghz")

    @property
    def slot_duration_s(self) -> float:
        return 1.0 / self.clock_hz


@dataclass(frozen=True)
class EmittedPulse:
    """Ein einzelner gesendeter Puls"""
    slot: int
    bit: int
    photon_count: int
    state: PolarizationState


class EmittedPulses:
    """
    Gesendete Pulse eines Laufs (spaltenweise)

    Indexzugriff liefert einzelne EmittedPulse-Objekte.
    """

    def __init__(self, bits: np.ndarray, photon_counts: np.ndarray,
                 pair: StatePair):
        if len(bits) != len(photon_counts):
            raise ValueError("bits und photon_counts müssen gleich lang sein")
        self.bits = bits
        self.photon_counts = photon_counts
        self.pair = pair

    @property
    def slots(self) -> np.ndarray:
        return np.arange(len(self.bits), dtype=np.int64)

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, slot: int) -> EmittedPulse:
        bit = int(self.bits[slot])
        return EmittedPulse(
            slot=int(slot) if slot >= 0 else len(self) + int(slot),
            bit=bit,
            photon_count=int(self.photon_counts[slot]),
            state=self.pair[bit],
        )

    def __iter__(self) -> Iterator[EmittedPulse]:
        for slot in range(len(self)):
            yield self[slot]

    @property
    def mean_photon_number(self) -> float:
        if len(self) == 0:
            return 0.0
        return float(self.photon_counts.mean())


def generate_bitstream(length: int, rng: np.random.Generator) -> np.ndarray:
    """
    Gleichverteilte Zufallsbits

    Returns:
        uint8-Array der Länge length mit Werten 0/1
    """
    if length < 0:
        raise ValueError(f"Länge darf nicht negativ sein: {length}")
    return rng.integers(0, 2, size=length, dtype=np.uint8)


def sample_photon_number(mu: float, rng: np.random.Generator,
                         size: Optional[int] = None):
    """
    Poisson-verteilte Photonenzahl eines abgeschwächten Pulses

    Args:
        mu: Mittlere Photonenzahl (> 0)
        rng: Zufallsgenerator
        size: Optional Anzahl Pulse (Array-Ergebnis)
    """
    if not mu > 0:
        raise ValueError(f"mu muss > 0 sein: {mu}")
    if size is None:
        return int(rng.poisson(mu))
    return rng.poisson(mu, size=size)


def multi_photon_probability(mu: float) -> float:
    """P(n >= 2) = 1 - e^-mu (1 + mu)"""
    if not mu > 0:
        raise ValueError(f"mu muss > 0 sein: {mu}")
    return -math.expm1(-mu) - mu * math.exp(-mu)


def effective_pulse_fwhm(config: SourceConfig) -> float:
    """Pulsbreite inklusive taktabhängiger Verbreiterung (Patterning)."""
    return config.pulse_fwhm + config.patterning_s_per_ghz * config.clock_hz / 1e9


def emit_pulses(config: SourceConfig, pair: StatePair, slot_count: int,
                rng: np.random.Generator) -> EmittedPulses:
    """
    Erzeugt Bits und Photonenzahlen für slot_count Zeitschlitze

    Reihenfolge der Zufallsziehungen: erst alle Bits, dann alle
    Photonenzahlen.
    """
    bits = generate_bitstream(slot_count, rng)
    counts = sample_photon_number(config.mu, rng, size=slot_count)
    logger.debug("Quelle: %d Pulse, mu=%.3f", slot_count, config.mu)
    return EmittedPulses(bits, counts, pair)
