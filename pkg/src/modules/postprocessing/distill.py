# -*- coding: utf-8 -*-
"""
B92NetSim - Schlüsseldestillation
QBER-Stichprobe -> Cascade -> Toeplitz-Hashing
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List

import numpy as np

from core.errors import ConfigError, SimulationError
from modules.postprocessing.cascade import (
    DEFAULT_BLOCK_CONSTANT, DEFAULT_PASSES, reconcile,
)
from modules.postprocessing.key_rate import final_key_length
from modules.postprocessing.privacy import generate_seed, privacy_amplify
from modules.protocol.b92 import SiftedKey, measure_qber

logger = logging.getLogger(__name__)

# Untergrenze für den Cascade-Hinweis bei fehlerfreier Stichprobe
MIN_QBER_HINT = 0.005


@dataclass
class PostprocessingSettings:
    """
    Einstellungen der klassischen Nachbearbeitung

    Attributes:
        reconciliation_efficiency: f im Netto-Bitraten-Modell
        pa_margin: Sicherheitsabschlag pro Bit im Netto-Bitraten-Modell
        cascade_passes: Cascade-Durchläufe
        cascade_block_constant: Erste Blockgröße = Konstante / QBER
        key_sample_fraction: Geopferter Anteil für die QBER-Schätzung
        margin_bits: Fester Abschlag bei der Endschlüssellänge
    """
    reconciliation_efficiency: float = 1.2
    pa_margin: float = 0.0
    cascade_passes: int = DEFAULT_PASSES
    cascade_block_constant: float = DEFAULT_BLOCK_CONSTANT
    key_sample_fraction: float = 0.1
    margin_bits: int = 0

    def __post_init__(self):
        if self.reconciliation_efficiency < 1.0:
            raise ConfigError("reconciliation_efficiency muss >= 1 sein",
                              field_path="reconciliation_efficiency")
        if self.pa_margin < 0:
            raise ConfigError("pa_margin darf nicht negativ sein", field_path="pa_margin")
        if self.cascade_passes < 1:
            raise ConfigError("cascade_passes muss >= 1 sein", field_path="cascade_passes")
        if not self.cascade_block_constant > 0:
            raise ConfigError("cascade_block_constant muss > 0 sein",
                              field_path="cascade_block_constant")
        if not 0.0 < self.key_sample_fraction < 1.0:
            raise ConfigError("key_sample_fraction muss in (0, 1) liegen",
                              field_path="key_sample_fraction")
        if self.margin_bits < 0:
            raise ConfigError("margin_bits darf nicht negativ sein", field_path="margin_bits")


@dataclass
class DistillationResult:
    """Ergebnis der Destillation (Alice und Bob halten nach Erfolg denselben Schlüssel)"""
    alice_key: np.ndarray
    bob_key: np.ndarray
    qber_estimate: float
    sifted_length: int
    reconciled_length: int
    bits_leaked: int
    compression: int
    converged: bool
    errors: List[str] = field(default_factory=list)

    @property
    def final_length(self) -> int:
        return len(self.alice_key)

    @property
    def success(self) -> bool:
        return self.converged and not self.errors


def distill_key(alice_key: SiftedKey, bob_key: SiftedKey, eve_fraction: float,
                settings: PostprocessingSettings,
                rng: np.random.Generator) -> DistillationResult:
    """
    Führt die klassische Nachbearbeitung für einen Schlüsselblock aus

    Args:
        alice_key, bob_key: Gesiftete Schlüssel
        eve_fraction: Eves Informationsanteil pro Bit
        settings: Nachbearbeitungs-Einstellungen
        rng: Zufallsgenerator (Stichprobe, Permutationen, Hash-Seed)

    Returns:
        DistillationResult

    Raises:
        SimulationError: Bilanz aus Leckage und Kompression verletzt
    """
    sifted_length = len(alice_key)
    qber, alice_rest, bob_rest = measure_qber(
        alice_key, bob_key, settings.key_sample_fraction, rng)

    errors: List[str] = []
    if qber >= 0.5:
        errors.append(f"QBER zu hoch für Fehlerkorrektur: {qber:.3f}")
        empty = np.zeros(0, dtype=np.uint8)
        return DistillationResult(empty, empty, qber, sifted_length, len(alice_rest),
                                  0, 0, False, errors)

    hint = min(max(qber, MIN_QBER_HINT), 0.49)
    result = reconcile(alice_rest.bits, bob_rest.bits, hint, rng,
                       passes=settings.cascade_passes,
                       block_constant=settings.cascade_block_constant)
    if not result.converged:
        errors.append("Fehlerkorrektur nicht konvergiert")

    reconciled_length = len(result.corrected_key)
    output_length = final_key_length(reconciled_length, result.bits_leaked,
                                     eve_fraction, settings.margin_bits)
    compression = math.ceil(eve_fraction * reconciled_length) + settings.margin_bits

    # Bilanz: Endlänge <= gesiftet - offengelegt - Kompression
    if output_length > max(0, sifted_length - result.bits_leaked - compression):
        raise SimulationError(
            f"Schlüsselbilanz verletzt: {output_length} > {sifted_length} - "
            f"{result.bits_leaked} - {compression}"
        )

    seed = generate_seed(reconciled_length, output_length, rng)
    alice_final = privacy_amplify(alice_rest.bits, output_length, seed)
    bob_final = privacy_amplify(result.corrected_key, output_length, seed)

    logger.info("Destillation: %d gesiftet -> %d korrigiert -> %d final (QBER %.4f)",
                sifted_length, reconciled_length, output_length, qber)
    return DistillationResult(
        alice_key=alice_final,
        bob_key=bob_final,
        qber_estimate=qber,
        sifted_length=sifted_length,
        reconciled_length=reconciled_length,
        bits_leaked=result.bits_leaked,
        compression=compression,
        converged=result.converged,
        errors=errors,
    )
