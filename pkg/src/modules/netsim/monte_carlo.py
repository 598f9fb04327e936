# -*- coding: utf-8 -*-
"""
B92NetSim - Monte-Carlo-Kette
Quelle -> Kanal -> Empfänger -> Detektoren -> Sifting, Schlitz für Schlitz
"""

import logging
from dataclasses import dataclass

import numpy as np

from modules.detection.detector import (
    DetectionRecords, apply_dead_time, dark_clicks, register_offsets,
)
from modules.netsim.metrics import CountBreakdown, LinkMetrics
from modules.netsim.operating_point import OperatingPoint
from modules.netsim.scenario import ScenarioConfig
from modules.optics.polarization import StatePair
from modules.postprocessing.key_rate import KeyRateInputs, net_bit_rate
from modules.protocol.b92 import SiftedKey, measure_qber, sift_indices
from modules.source.photon_source import emit_pulses

logger = logging.getLogger(__name__)

# Spalten der Multinomialziehung je Photon
_DETECTED_COLUMN = (0, 2)
_AMBIGUOUS_COLUMN = 4


@dataclass
class MonteCarloResult:
    """Metriken plus die gesifteten Schlüssel beider Seiten"""
    metrics: LinkMetrics
    alice_key: SiftedKey
    bob_key: SiftedKey
    rng: np.random.Generator


class MonteCarloChain:
    """
    Stochastische Simulation eines Links

    Reihenfolge der Zufallsziehungen (für Reproduzierbarkeit fest):
    Bits, Photonenzahlen, Photonenschicksale je Bitwert, dann je Kanal
    Jitter und Dunkelklicks, zuletzt die QBER-Stichprobe.
    """

    def __init__(self, config: ScenarioConfig, point: OperatingPoint,
                 seed_sequence: np.random.SeedSequence):
        self.config = config
        self.point = point
        self.rng = np.random.default_rng(seed_sequence)

    def _fired_slots(self, bits: np.ndarray, photons: np.ndarray):
        """Welche Detektoren in welchem Schlitz ein Signal sehen."""
        slot_count = len(bits)
        fired = np.zeros((2, slot_count), dtype=bool)
        ambiguous = 0

        for bit in (0, 1):
            selected = np.flatnonzero((bits == bit) & (photons > 0))
            if len(selected) == 0:
                continue
            fates = self.rng.multinomial(photons[selected], self.point.photon_outcomes[bit])
            for channel in (0, 1):
                fired[channel, selected] = fates[:, _DETECTED_COLUMN[channel]] > 0
            ambiguous += int(fates[:, _AMBIGUOUS_COLUMN].sum())

        return fired, ambiguous

    def _channel_clicks(self, channel: int, true_slots: np.ndarray,
                        slot_count: int) -> DetectionRecords:
        """Signal- und Dunkelklicks eines Detektors nach der Totzeit."""
        point = self.point.channels[channel]
        detector = self.config.detectors[channel]
        slot = self.point.slot_duration_s

        offsets = self.rng.normal(point.shift_s, point.sigma_s, size=len(true_slots))
        slots, residual = register_offsets(offsets, true_slots, slot)
        signal = DetectionRecords(
            slot=slots,
            true_slot=true_slots,
            channel=np.full(len(true_slots), channel, dtype=np.uint8),
            offset_s=residual,
            time_s=true_slots * slot + offsets,
        )
        dark = dark_clicks(detector.dark_rate_hz, slot_count * slot, self.rng,
                           slot_duration_s=slot, channel=channel)

        merged = DetectionRecords.concatenate(signal, dark).sorted_by_time()
        return apply_dead_time(merged, detector.dead_time_s)

    def run(self) -> MonteCarloResult:
        config = self.config
        slot_count = config.total_slots
        slot = self.point.slot_duration_s
        duration = slot_count * slot

        pulses = emit_pulses(config.source, StatePair.default(), slot_count, self.rng)
        fired, ambiguous = self._fired_slots(pulses.bits, pulses.photon_counts)

        parts = []
        for channel in (0, 1):
            if not self.point.channels[channel].enabled:
                continue
            parts.append(self._channel_clicks(channel, np.flatnonzero(fired[channel]),
                                              slot_count))
        records = DetectionRecords.concatenate(*parts)

        registered = records.select((records.slot >= 0) & (records.slot < slot_count))
        half_window = 0.5 * self.point.window_fraction * slot * (1.0 + 1e-12)
        accepted = registered.select(np.abs(registered.offset_s) <= half_window)

        kept = sift_indices(accepted, slot_count)
        slots = accepted.slot[kept]
        alice_key = SiftedKey(pulses.bits[slots], slots, "alice")
        bob_key = SiftedKey(accepted.channel[kept], slots, "bob")

        true_slots = accepted.true_slot[kept]
        is_dark = true_slots == -1
        is_signal = true_slots == slots
        counts = CountBreakdown(
            signal=float(np.count_nonzero(is_signal)),
            dark=float(np.count_nonzero(is_dark)),
            misallocated=float(np.count_nonzero(~is_dark & ~is_signal)),
        )

        insufficient = len(alice_key) == 0
        qber = 0.0
        if not insufficient:
            qber, _, _ = measure_qber(alice_key, bob_key, config.sample_fraction, self.rng)

        sifted_rate = len(alice_key) / duration
        nbr = net_bit_rate(KeyRateInputs(
            sifted_rate_hz=sifted_rate,
            qber=min(qber, 0.5),
            eve_fraction=self.point.eve_fraction,
            reconciliation_efficiency=config.postprocessing.reconciliation_efficiency,
            pa_margin=config.postprocessing.pa_margin,
        ))

        logger.debug("Monte-Carlo: %d Schlitze, %d Klicks, %d gesiftet, QBER %.4f",
                     slot_count, len(registered), len(alice_key), qber)
        metrics = LinkMetrics(
            raw_click_rate_hz=len(registered) / duration,
            conclusive_rate_hz=len(accepted) / duration,
            sifted_rate_hz=sifted_rate,
            qber=qber,
            nbr_hz=nbr,
            counts=counts,
            insufficient_data=insufficient,
            eve_fraction=self.point.eve_fraction,
            ambiguous_rate_hz=ambiguous / duration,
            slot_count=slot_count,
            mode="monte_carlo",
        )
        return MonteCarloResult(metrics, alice_key, bob_key, self.rng)
