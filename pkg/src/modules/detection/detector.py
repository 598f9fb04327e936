# -*- coding: utf-8 -*-
"""
B92NetSim - Detektormodell
SPAD-Klicks: Effizienz, Dunkelzählrate, Totzeit, ratenabhängiger Jitter
und Peak-Verschiebung (Standard- vs. modifizierte Ausgangsschaltung),
Zuordnung der Klicks zu Taktschlitzen.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np
from scipy.special import ndtr

from core.errors import ConfigError

logger = logging.getLogger(__name__)

# FWHM -> sigma einer Gaußverteilung: 2*sqrt(2*ln 2)
FWHM_PER_SIGMA = 2.0 * math.sqrt(2.0 * math.log(2.0))

VARIANTS = ("standard", "enhanced")

# (Zählrate in counts/s, FWHM in s)
DEFAULT_JITTER_TABLES = {
    "standard": ((1e4, 570e-12), (2e6, 950e-12)),
    "enhanced": ((1e4, 370e-12), (2e6, 450e-12)),
}

# (Zählrate in counts/s, Peak-Verschiebung in s)
DEFAULT_SHIFT_TABLES = {
    "standard": ((1e4, 0.0), (2e6, 300e-12)),
    "enhanced": ((1e4, 0.0), (2e6, 50e-12)),
}

# Nachbarschlitze, die im analytischen Modell berücksichtigt werden
_NEIGHBOUR_REACH = 4

Table = Tuple[Tuple[float, float], ...]


def _normalize_table(table, name: str, positive: bool) -> Table:
    try:
        rows = tuple((float(rate), float(value)) for rate, value in table)
    except (TypeError, ValueError):
        raise ConfigError("Tabelle aus (Rate, Wert)-Paaren erwartet", field_path=name)
    if not rows:
        raise ConfigError("Tabelle darf nicht leer sein", field_path=name)
    rates = [rate for rate, _ in rows]
    if any(rate < 0 for rate in rates):
        raise ConfigError("Raten dürfen nicht negativ sein", field_path=name)
    if any(b <= a for a, b in zip(rates, rates[1:])):
        raise ConfigError("Tabelle muss streng nach Rate sortiert sein", field_path=name)
    if positive and any(value <= 0 for _, value in rows):
        raise ConfigError("FWHM-Werte müssen > 0 sein", field_path=name)
    return rows


@dataclass
class DetectorModel:
    """
    Ein SPAD-Zählmodul

    Attributes:
        variant: "standard" oder "enhanced" (modifizierte Ausgangsschaltung)
        efficiency: Detektionseffizienz [0, 1]; 0 deaktiviert den Detektor
        dark_rate_hz: Dunkelzählrate
        dead_time_s: Totzeit (nicht paralysierbar)
        jitter_table: (Rate, FWHM)-Paare; None = Standardtabelle der Variante
        shift_table: (Rate, Verschiebung)-Paare; None = Standardtabelle der Variante
    """
    variant: str = "enhanced"
    efficiency: float = 0.5
    dark_rate_hz: float = 250.0
    dead_time_s: float = 50e-9
    jitter_table: Optional[Table] = None
    shift_table: Optional[Table] = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ConfigError(f"Unbekannte Variante: {self.variant}", field_path="variant")
        if not 0.0 <= self.efficiency <= 1.0:
            raise ConfigError("efficiency muss in [0, 1] liegen", field_path="efficiency")
        if self.dark_rate_hz < 0:
            raise ConfigError("dark_rate_hz darf nicht negativ sein", field_path="dark_rate_hz")
        if self.dead_time_s < 0:
            raise ConfigError("dead_time_s darf nicht negativ sein", field_path="dead_time_s")
        if self.jitter_table is not None:
            self.jitter_table = _normalize_table(self.jitter_table, "jitter_table", True)
        if self.shift_table is not None:
            self.shift_table = _normalize_table(self.shift_table, "shift_table", False)

    @classmethod
    def for_variant(cls, variant: str, **kwargs) -> "DetectorModel":
        """Detektor mit den Standardtabellen der Variante."""
        return cls(variant=variant, **kwargs)

    @property
    def enabled(self) -> bool:
        return self.efficiency > 0

    @property
    def effective_jitter_table(self) -> Table:
        return self.jitter_table or DEFAULT_JITTER_TABLES[self.variant]

    @property
    def effective_shift_table(self) -> Table:
        return self.shift_table or DEFAULT_SHIFT_TABLES[self.variant]


def _interpolate(table: Sequence[Tuple[float, float]], rate: float) -> float:
    if rate < 0:
        raise ValueError(f"Zählrate darf nicht negativ sein: {rate}")
    if not table:
        raise ValueError("Leere Tabelle")
    rates = [row[0] for row in table]
    values = [row[1] for row in table]
    return float(np.interp(rate, rates, values))


def jitter_at_rate(model: DetectorModel, incident_rate_hz: float) -> float:
    """
    Timing-Jitter (FWHM) bei gegebener Zählrate

    Stückweise lineare Interpolation, außerhalb der Tabelle auf die
    Randwerte begrenzt.
    """
    return _interpolate(model.effective_jitter_table, incident_rate_hz)


def shift_at_rate(model: DetectorModel, incident_rate_hz: float) -> float:
    """Systematische Peak-Verschiebung bei gegebener Zählrate."""
    return _interpolate(model.effective_shift_table, incident_rate_hz)


def timing_sigma(detector_fwhm_s: float, *extra_sigmas_s: float) -> float:
    """Gesamt-sigma: Detektor-FWHM umgerechnet, weitere Beiträge quadratisch addiert."""
    total = (detector_fwhm_s / FWHM_PER_SIGMA) ** 2
    for sigma in extra_sigmas_s:
        total += sigma ** 2
    return math.sqrt(total)


def registered_slot(true_time_offset_s: float, true_slot: int,
                    slot_duration_s: float) -> Tuple[int, float]:
    """
    Quantisiert einen Klickzeitpunkt auf den nächstgelegenen Schlitz

    Args:
        true_time_offset_s: Abweichung vom Zentrum des Ursprungsschlitzes
            (Jitter + Verschiebung, bereits gezogen)
        true_slot: Schlitz des auslösenden Pulses
        slot_duration_s: Schlitzdauer (1/Takt)

    Returns:
        (registrierter Schlitz, Restabweichung vom Zentrum dieses Schlitzes)
    """
    if not slot_duration_s > 0:
        raise ValueError(f"slot_duration_s muss > 0 sein: {slot_duration_s}")
    steps = math.floor(true_time_offset_s / slot_duration_s + 0.5)
    return true_slot + steps, true_time_offset_s - steps * slot_duration_s


def register_offsets(offsets_s: np.ndarray, true_slots: np.ndarray,
                     slot_duration_s: float) -> Tuple[np.ndarray, np.ndarray]:
    """Vektorisierte Variante von registered_slot."""
    steps = np.floor(offsets_s / slot_duration_s + 0.5).astype(np.int64)
    return true_slots + steps, offsets_s - steps * slot_duration_s


def slot_allocation_probabilities(sigma_s: float, shift_s: float,
                                  slot_duration_s: float,
                                  window_fraction: float = 1.0) -> Tuple[float, float]:
    """
    Geschlossene Form zu registered_slot

    Returns:
        (p_own, p_neighbour): Wahrscheinlichkeit, im eigenen bzw. in einem
        fremden Schlitz innerhalb des Akzeptanzfensters registriert zu werden.
        Der Rest fällt außerhalb des Fensters.
    """
    if not slot_duration_s > 0:
        raise ValueError(f"slot_duration_s muss > 0 sein: {slot_duration_s}")
    if not 0 < window_fraction <= 1:
        raise ValueError(f"window_fraction muss in (0, 1] liegen: {window_fraction}")

    half = 0.5 * window_fraction * slot_duration_s
    if sigma_s <= 0:
        slot, residual = registered_slot(shift_s, 0, slot_duration_s)
        inside = 1.0 if abs(residual) <= half else 0.0
        return (inside, 0.0) if slot == 0 else (0.0, inside)

    centers = np.arange(-_NEIGHBOUR_REACH, _NEIGHBOUR_REACH + 1) * slot_duration_s
    probs = (ndtr((centers + half - shift_s) / sigma_s)
             - ndtr((centers - half - shift_s) / sigma_s))
    own = float(probs[_NEIGHBOUR_REACH])
    return own, float(probs.sum() - own)


def misallocation_probability(fwhm_s: float, slot_duration_s: float,
                              shift_s: float = 0.0) -> float:
    """Wahrscheinlichkeit, dass ein Klick nicht im eigenen Schlitz landet (volles Fenster)."""
    own, _ = slot_allocation_probabilities(fwhm_s / FWHM_PER_SIGMA, shift_s,
                                           slot_duration_s)
    return 1.0 - own


@dataclass(frozen=True)
class DetectionRecord:
    """Ein registrierter Klick"""
    slot: int
    true_slot: int
    channel: int
    offset_s: float
    time_s: float = 0.0

    @property
    def is_dark(self) -> bool:
        return self.true_slot == -1


class DetectionRecords:
    """
    Spaltenweise Klickliste

    Attributes:
        slot: Registrierter Schlitz
        true_slot: Ursprungsschlitz, -1 für Dunkelklicks
        channel: Detektor / Kanal 0 oder 1
        offset_s: Abweichung vom Zentrum des registrierten Schlitzes
        time_s: Absoluter Zeitpunkt (für die Totzeit)
    """

    def __init__(self, slot=None, true_slot=None, channel=None,
                 offset_s=None, time_s=None):
        self.slot = np.asarray(slot if slot is not None else [], dtype=np.int64)
        self.true_slot = np.asarray(true_slot if true_slot is not None else [], dtype=np.int64)
        self.channel = np.asarray(channel if channel is not None else [], dtype=np.uint8)
        self.offset_s = np.asarray(offset_s if offset_s is not None else [], dtype=np.float64)
        self.time_s = np.asarray(time_s if time_s is not None else [], dtype=np.float64)

        lengths = {len(self.slot), len(self.true_slot), len(self.channel),
                   len(self.offset_s), len(self.time_s)}
        if len(lengths) != 1:
            raise ValueError("Alle Spalten müssen gleich lang sein")

    @classmethod
    def empty(cls) -> "DetectionRecords":
        return cls()

    @classmethod
    def from_records(cls, records: Sequence[DetectionRecord]) -> "DetectionRecords":
        return cls(
            slot=[r.slot for r in records],
            true_slot=[r.true_slot for r in records],
            channel=[r.channel for r in records],
            offset_s=[r.offset_s for r in records],
            time_s=[r.time_s for r in records],
        )

    @classmethod
    def concatenate(cls, *parts: "DetectionRecords") -> "DetectionRecords":
        if not parts:
            return cls.empty()
        return cls(
            slot=np.concatenate([p.slot for p in parts]),
            true_slot=np.concatenate([p.true_slot for p in parts]),
            channel=np.concatenate([p.channel for p in parts]),
            offset_s=np.concatenate([p.offset_s for p in parts]),
            time_s=np.concatenate([p.time_s for p in parts]),
        )

    def select(self, mask) -> "DetectionRecords":
        return DetectionRecords(self.slot[mask], self.true_slot[mask],
                                self.channel[mask], self.offset_s[mask],
                                self.time_s[mask])

    def sorted_by_time(self) -> "DetectionRecords":
        return self.select(np.argsort(self.time_s, kind='stable'))

    def __len__(self) -> int:
        return len(self.slot)

    def __getitem__(self, index: int) -> DetectionRecord:
        return DetectionRecord(
            slot=int(self.slot[index]),
            true_slot=int(self.true_slot[index]),
            channel=int(self.channel[index]),
            offset_s=float(self.offset_s[index]),
            time_s=float(self.time_s[index]),
        )

    def __iter__(self) -> Iterator[DetectionRecord]:
        for index in range(len(self)):
            yield self[index]


def dark_clicks(dark_rate_hz: float, duration_s: float, rng: np.random.Generator,
                slot_duration_s: float = 1e-9,
                channel: Optional[int] = None) -> DetectionRecords:
    """
    Dunkelklicks als Poisson-Prozess

    Zeitpunkte gleichverteilt über die Dauer, Kanal gleichverteilt (oder fest
    vorgegeben), true_slot = -1. Zeit 0 ist der Beginn von Schlitz 0, also
    eine halbe Schlitzdauer vor dessen Zentrum.

    Returns:
        Nach Zeit sortierte DetectionRecords
    """
    if dark_rate_hz < 0:
        raise ValueError(f"dark_rate_hz darf nicht negativ sein: {dark_rate_hz}")
    if duration_s < 0:
        raise ValueError(f"duration_s darf nicht negativ sein: {duration_s}")

    count = int(rng.poisson(dark_rate_hz * duration_s)) if dark_rate_hz > 0 else 0
    if count == 0:
        return DetectionRecords.empty()

    times = np.sort(rng.uniform(0.0, duration_s, size=count))
    if channel is None:
        channels = rng.integers(0, 2, size=count, dtype=np.uint8)
    else:
        channels = np.full(count, channel, dtype=np.uint8)

    slots = np.floor(times / slot_duration_s).astype(np.int64)
    offsets = times - (slots + 0.5) * slot_duration_s
    return DetectionRecords(
        slot=slots,
        true_slot=np.full(count, -1, dtype=np.int64),
        channel=channels,
        offset_s=offsets,
        time_s=times - 0.5 * slot_duration_s,
    )


def apply_dead_time(records: DetectionRecords, dead_time_s: float) -> DetectionRecords:
    """
    Nicht paralysierbare Totzeit je Detektor

    Ein Klick innerhalb von dead_time_s nach einem akzeptierten Klick
    desselben Kanals wird verworfen.

    Raises:
        ValueError: Eingabe nicht nach Zeit sortiert
    """
    if dead_time_s < 0:
        raise ValueError(f"dead_time_s darf nicht negativ sein: {dead_time_s}")
    if len(records) > 1 and np.any(np.diff(records.time_s) < 0):
        raise ValueError("Klicks müssen nach Zeit sortiert sein")
    if dead_time_s == 0 or len(records) == 0:
        return records

    keep = np.ones(len(records), dtype=bool)
    last_accepted = {}
    for index, (time, channel) in enumerate(zip(records.time_s.tolist(),
                                                records.channel.tolist())):
        previous = last_accepted.get(channel)
        if previous is not None and time - previous < dead_time_s:
            keep[index] = False
        else:
            last_accepted[channel] = time

    dropped = len(records) - int(keep.sum())
    if dropped:
        logger.debug("Totzeit: %d von %d Klicks verworfen", dropped, len(records))
    return records.select(keep)


def dead_time_factor(detected_rate_hz: float, dead_time_s: float) -> float:
    """Anteil überlebender Klicks bei Poisson-Ankünften: 1 / (1 + R*tau)."""
    return 1.0 / (1.0 + detected_rate_hz * dead_time_s)
