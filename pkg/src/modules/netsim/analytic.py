# -*- coding: utf-8 -*-
"""
B92NetSim - Analytisches Modell
Erwartungswerte der Raten und der QBER in geschlossener Form
"""

import logging

from modules.netsim.metrics import CountBreakdown, LinkMetrics
from modules.netsim.operating_point import OperatingPoint
from modules.netsim.scenario import ScenarioConfig
from modules.postprocessing.key_rate import KeyRateInputs, net_bit_rate

logger = logging.getLogger(__name__)


class AnalyticModel:
    """
    Geschlossene Form der Monte-Carlo-Kette

    Pro Schlitz und Detektor c (Totzeitfaktor k, Signal r, Dunkel d):
      korrekt   = k * p_own * 0.5 * P(Klick c | Bit c)
      falsch    = k * p_own * 0.5 * P(Klick c | anderes Bit)
      fremd     = k * p_neighbour * r     (Fehler mit Wahrscheinlichkeit 1/2)
      dunkel    = k * d * window          (Fehler mit Wahrscheinlichkeit 1/2)
    """

    def __init__(self, config: ScenarioConfig, point: OperatingPoint):
        self.config = config
        self.point = point

    def compute(self) -> LinkMetrics:
        config = self.config
        point = self.point
        clock = config.clock_hz

        raw = correct = wrong = neighbour = dark = 0.0
        accepted = []
        for channel in point.channels:
            if not channel.enabled:
                accepted.append(0.0)
                continue
            k = channel.dead_time_factor
            own_bit = channel.channel
            c_correct = k * channel.p_own * 0.5 * channel.click_probability[own_bit]
            c_wrong = k * channel.p_own * 0.5 * channel.click_probability[1 - own_bit]
            c_neighbour = k * channel.p_neighbour * channel.signal_probability
            c_dark = k * channel.dark_probability * point.window_fraction

            raw += k * (channel.signal_probability + channel.dark_probability)
            correct += c_correct
            wrong += c_wrong
            neighbour += c_neighbour
            dark += c_dark
            accepted.append(c_correct + c_wrong + c_neighbour + c_dark)

        conclusive = correct + wrong + neighbour + dark
        # gleichzeitige Klicks beider Kanäle im selben Schlitz werden verworfen
        sifted = max(conclusive - 2.0 * accepted[0] * accepted[1], 0.0)
        errors = wrong + 0.5 * (neighbour + dark)

        insufficient = sifted <= 0.0
        qber = 0.0 if insufficient or conclusive <= 0 else min(errors / conclusive, 1.0)

        slots = config.total_slots
        scale = sifted / conclusive if conclusive > 0 else 0.0
        counts = CountBreakdown(
            signal=(correct + wrong) * scale * slots,
            dark=dark * scale * slots,
            misallocated=neighbour * scale * slots,
        )

        sifted_rate = sifted * clock
        nbr = net_bit_rate(KeyRateInputs(
            sifted_rate_hz=sifted_rate,
            qber=min(qber, 0.5),
            eve_fraction=point.eve_fraction,
            reconciliation_efficiency=config.postprocessing.reconciliation_efficiency,
            pa_margin=config.postprocessing.pa_margin,
        ))

        logger.debug("Analytisch: gesiftet %.4g bit/s, QBER %.4f, NBR %.4g bit/s",
                     sifted_rate, qber, nbr)
        return LinkMetrics(
            raw_click_rate_hz=raw * clock,
            conclusive_rate_hz=conclusive * clock,
            sifted_rate_hz=sifted_rate,
            qber=qber,
            nbr_hz=nbr,
            counts=counts,
            insufficient_data=insufficient,
            eve_fraction=point.eve_fraction,
            ambiguous_rate_hz=config.source.mu * point.ambiguous_per_photon * clock,
            slot_count=slots,
            mode="analytic",
        )
