# -*- coding: utf-8 -*-
"""
B92NetSim - B92-Protokoll
Passiver 50:50-Empfänger mit zwei Analysatoren, eindeutige und mehrdeutige
Ergebnisse, Sifting gegen Alices Aufzeichnung und QBER-Schätzung.

Kanal 1 hat den Analysator senkrecht zu Zustand 0 und klickt daher nur bei
gesendetem Bit 1 (und umgekehrt).
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple

import numpy as np

from core.errors import ConfigError
from modules.detection.detector import DetectionRecords
from modules.optics.polarization import (
    ANALYZER0_ANGLE, ANALYZER1_ANGLE, PolarizationState,
)

logger = logging.getLogger(__name__)


class Outcome(Enum):
    """Messergebnis eines Photons"""
    CONCLUSIVE_0 = "conclusive_0"
    CONCLUSIVE_1 = "conclusive_1"
    AMBIGUOUS = "ambiguous"
    NO_CLICK = "no_click"


# Reihenfolge der Spalten in outcome_probabilities
OUTCOME_ORDER = (Outcome.CONCLUSIVE_0, Outcome.CONCLUSIVE_1,
                 Outcome.AMBIGUOUS, Outcome.NO_CLICK)


@dataclass
class ReceiverSetup:
    """
    Bobs passiver Empfänger

    Attributes:
        analyzer1_angle: Analysator des Kanals 1 (Radiant)
        analyzer0_angle: Analysator des Kanals 0 (Radiant)
        splitting_ratio: Anteil in den Zweig von Kanal 1
        extinction_ratio_db: Auslöschungsverhältnis der PBS (inf = ideal)
    """
    analyzer1_angle: float = ANALYZER1_ANGLE
    analyzer0_angle: float = ANALYZER0_ANGLE
    splitting_ratio: float = 0.5
    extinction_ratio_db: float = 25.0

    def __post_init__(self):
        if not 0.0 <= self.splitting_ratio <= 1.0:
            raise ConfigError("splitting_ratio muss in [0, 1] liegen",
                              field_path="splitting_ratio")
        if self.extinction_ratio_db < 0:
            raise ConfigError("extinction_ratio_db darf nicht negativ sein",
                              field_path="extinction_ratio_db")

    @classmethod
    def ideal(cls) -> "ReceiverSetup":
        return cls(extinction_ratio_db=math.inf)

    @property
    def leakage(self) -> float:
        """Durchgelassener Anteil der gesperrten Polarisation."""
        if math.isinf(self.extinction_ratio_db):
            return 0.0
        return 10 ** (-self.extinction_ratio_db / 10)

    def arm_weight(self, channel: int) -> float:
        return self.splitting_ratio if channel == 1 else 1.0 - self.splitting_ratio

    def analyzer(self, channel: int) -> float:
        return self.analyzer1_angle if channel == 1 else self.analyzer0_angle


def conclusive_port_probability(state: PolarizationState, analyzer_angle: float,
                                leakage: float) -> float:
    """Transmission in den eindeutigen Ausgang inklusive PBS-Leckage."""
    delta = state.angle - analyzer_angle
    return ((1.0 - leakage) * math.cos(delta) ** 2
            + leakage * math.sin(delta) ** 2) * state.intensity


def outcome_probabilities(state: PolarizationState, setup: ReceiverSetup) -> np.ndarray:
    """
    Exakte Wahrscheinlichkeiten der vier Ergebnisse für ein Photon

    Returns:
        Array [conclusive_0, conclusive_1, ambiguous, no_click]; no_click ist
        der durch PDL verlorene Anteil (1 - Intensität).
    """
    leakage = setup.leakage
    p1 = setup.arm_weight(1) * conclusive_port_probability(
        state, setup.analyzer1_angle, leakage)
    p0 = setup.arm_weight(0) * conclusive_port_probability(
        state, setup.analyzer0_angle, leakage)
    ambiguous = max(state.intensity - p0 - p1, 0.0)
    return np.array([p0, p1, ambiguous, 1.0 - state.intensity])


def measure_pulse(state: PolarizationState, setup: ReceiverSetup,
                  rng: np.random.Generator) -> Outcome:
    """Zieht das Messergebnis eines einzelnen Photons."""
    probs = outcome_probabilities(state, setup)
    index = int(rng.choice(len(OUTCOME_ORDER), p=probs / probs.sum()))
    return OUTCOME_ORDER[index]


@dataclass
class SiftedKey:
    """
    Gesifteter Schlüssel einer Partei

    Attributes:
        bits: uint8-Array 0/1
        source_slots: Schlitz je Bit, streng aufsteigend
        owner: "alice" oder "bob"
    """
    bits: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.uint8))
    source_slots: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int64))
    owner: str = "alice"

    def __post_init__(self):
        self.bits = np.asarray(self.bits, dtype=np.uint8)
        self.source_slots = np.asarray(self.source_slots, dtype=np.int64)
        if len(self.bits) != len(self.source_slots):
            raise ValueError("bits und source_slots müssen gleich lang sein")
        if self.owner not in ("alice", "bob"):
            raise ValueError(f"Unbekannter Besitzer: {self.owner}")
        if len(self.source_slots) > 1 and np.any(np.diff(self.source_slots) <= 0):
            raise ValueError("source_slots müssen streng aufsteigend sein")

    def __len__(self) -> int:
        return len(self.bits)

    def subset(self, mask) -> "SiftedKey":
        return SiftedKey(self.bits[mask], self.source_slots[mask], self.owner)


def sift_indices(records: DetectionRecords, slot_count: int) -> np.ndarray:
    """
    Indizes der Klicks, die das Sifting überleben

    Ein Schlitz zählt nur mit genau einem eindeutigen Klick; Schlitze mit
    mehreren Klicks werden verworfen. Ergebnis aufsteigend nach Schlitz.
    """
    if len(records) == 0:
        return np.zeros(0, dtype=np.int64)

    in_range = np.flatnonzero((records.slot >= 0) & (records.slot < slot_count))
    slots = records.slot[in_range]
    unique_slots, first, counts = np.unique(slots, return_index=True,
                                            return_counts=True)
    single = counts == 1
    return in_range[first[single]]


def sift(alice_bits: np.ndarray, bob_records: DetectionRecords) -> Tuple[SiftedKey, SiftedKey]:
    """
    Sifting: Bob veröffentlicht die Schlitze seiner eindeutigen Klicks

    Args:
        alice_bits: Alices gesendete Bits je Schlitz
        bob_records: Akzeptierte eindeutige Klicks

    Returns:
        (alice_key, bob_key)
    """
    alice_bits = np.asarray(alice_bits, dtype=np.uint8)
    kept = sift_indices(bob_records, len(alice_bits))
    slots = bob_records.slot[kept]

    alice_key = SiftedKey(alice_bits[slots], slots, "alice")
    bob_key = SiftedKey(bob_records.channel[kept], slots, "bob")
    logger.debug("Sifting: %d Klicks -> %d Bits", len(bob_records), len(slots))
    return alice_key, bob_key


def measure_qber(alice_key: SiftedKey, bob_key: SiftedKey, sample_fraction: float,
                 rng: np.random.Generator) -> Tuple[float, SiftedKey, SiftedKey]:
    """
    Schätzt die QBER an einer Stichprobe und verwirft die Stichprobe

    Args:
        alice_key, bob_key: Gesiftete Schlüssel gleicher Länge
        sample_fraction: Anteil der verglichenen Positionen (0, 1]
        rng: Zufallsgenerator für die Stichprobe

    Returns:
        (qber_estimate, remaining_alice, remaining_bob)
    """
    if len(alice_key) != len(bob_key):
        raise ValueError(
            f"Schlüssellängen verschieden: {len(alice_key)} != {len(bob_key)}"
        )
    if not 0.0 < sample_fraction <= 1.0:
        raise ValueError(f"sample_fraction muss in (0, 1] liegen: {sample_fraction}")

    length = len(alice_key)
    if length == 0:
        return 0.0, alice_key, bob_key

    sample_size = max(1, int(round(length * sample_fraction)))
    mask = np.zeros(length, dtype=bool)
    if sample_size >= length:
        mask[:] = True
    else:
        mask[rng.choice(length, size=sample_size, replace=False)] = True

    mismatches = int(np.count_nonzero(alice_key.bits[mask] != bob_key.bits[mask]))
    estimate = mismatches / sample_size
    return estimate, alice_key.subset(~mask), bob_key.subset(~mask)
