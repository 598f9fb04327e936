# -*- coding: utf-8 -*-
"""
B92NetSim - Netto-Bitrate
Asymptotische sichere Schlüsselrate nach Fehlerkorrektur und
Privacy Amplification.
"""

import math
from dataclasses import dataclass

from modules.postprocessing.entropy import binary_entropy


@dataclass
class KeyRateInputs:
    """
    Attributes:
        sifted_rate_hz: Gesiftete Rate
        qber: Fehlerrate [0, 0.5]
        eve_fraction: Eves Informationsanteil pro Bit [0, 1]
        reconciliation_efficiency: f >= 1 (Cascade-Overhead)
        pa_margin: Zusätzlicher Sicherheitsabschlag pro Bit
    """
    sifted_rate_hz: float
    qber: float
    eve_fraction: float
    reconciliation_efficiency: float = 1.2
    pa_margin: float = 0.0

    def __post_init__(self):
        if self.sifted_rate_hz < 0:
            raise ValueError(f"sifted_rate_hz darf nicht negativ sein: {self.sifted_rate_hz}")
        if not 0.0 <= self.qber <= 0.5:
            raise ValueError(f"qber muss in [0, 0.5] liegen: {self.qber}")
        if not 0.0 <= self.eve_fraction <= 1.0:
            raise ValueError(f"eve_fraction muss in [0, 1] liegen: {self.eve_fraction}")
        if self.reconciliation_efficiency < 1.0:
            raise ValueError(
                f"reconciliation_efficiency muss >= 1 sein: {self.reconciliation_efficiency}"
            )
        if self.pa_margin < 0:
            raise ValueError(f"pa_margin darf nicht negativ sein: {self.pa_margin}")


def secret_fraction(inputs: KeyRateInputs) -> float:
    """Anteil sicherer Bits pro gesiftetem Bit (vor Begrenzung auf >= 0)."""
    return (1.0 - inputs.reconciliation_efficiency * binary_entropy(inputs.qber)
            - inputs.eve_fraction - inputs.pa_margin)


def net_bit_rate(inputs: KeyRateInputs) -> float:
    """R_net = sifted_rate * max(0, 1 - f*H2(qber) - eve_fraction - margin)"""
    return inputs.sifted_rate_hz * max(0.0, secret_fraction(inputs))


def final_key_length(sifted_length: int, bits_leaked: int, eve_fraction: float,
                     margin_bits: int = 0) -> int:
    """
    Länge des Endschlüssels für einen endlichen Block

    Abgezogen werden die offengelegten Paritäten, Eves Anteil und ein
    fester Sicherheitsabschlag.
    """
    if sifted_length < 0 or bits_leaked < 0 or margin_bits < 0:
        raise ValueError("Längen dürfen nicht negativ sein")
    if not 0.0 <= eve_fraction <= 1.0:
        raise ValueError(f"eve_fraction muss in [0, 1] liegen: {eve_fraction}")
    compression = math.ceil(eve_fraction * sifted_length)
    return max(0, sifted_length - bits_leaked - compression - margin_bits)
