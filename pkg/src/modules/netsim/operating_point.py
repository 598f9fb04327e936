# -*- coding: utf-8 -*-
"""
B92NetSim - Arbeitspunkt
Gemeinsame Vorberechnung für analytisches Modell und Monte-Carlo-Kette:
Budget, Photonenwahrscheinlichkeiten, Zählraten je Detektor, Jitter,
Verschiebung, Totzeitfaktor und Schlitzzuordnung.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from modules.channel.link_budget import LinkBudget, LinkPath, compute_route_budget
from modules.detection.detector import (
    FWHM_PER_SIGMA, dead_time_factor, jitter_at_rate, shift_at_rate,
    slot_allocation_probabilities, timing_sigma,
)
from modules.netsim.scenario import ScenarioConfig
from modules.optics.polarization import StatePair, eve_information_bound
from modules.protocol.b92 import outcome_probabilities
from modules.source.photon_source import effective_pulse_fwhm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChannelPoint:
    """
    Arbeitspunkt eines Detektors

    Attributes:
        channel: 0 oder 1
        enabled: Effizienz > 0
        click_probability: P(Signalklick | Bit b) für b = 0, 1
        signal_probability: Mittlere Signal-Klickwahrscheinlichkeit pro Schlitz
        dark_probability: Dunkelklick-Wahrscheinlichkeit pro Schlitz
        detected_rate_hz: Klickrate vor Totzeit
        dead_time_factor: 1 / (1 + R*tau)
        lookup_rate_hz: Rate für Jitter- und Verschiebungstabelle
        fwhm_s, shift_s, sigma_s: Zeitverhalten
        p_own, p_neighbour: Zuordnung in eigenen bzw. fremden Schlitz
    """
    channel: int
    enabled: bool
    click_probability: Tuple[float, float]
    signal_probability: float
    dark_probability: float
    detected_rate_hz: float
    dead_time_factor: float
    lookup_rate_hz: float
    fwhm_s: float
    shift_s: float
    sigma_s: float
    p_own: float
    p_neighbour: float


@dataclass(frozen=True)
class OperatingPoint:
    """
    Vorberechneter Zustand eines Links

    photon_outcomes[b] enthält pro Photon die Wahrscheinlichkeiten
    [Kanal0 erkannt, Kanal0 verpasst, Kanal1 erkannt, Kanal1 verpasst,
    mehrdeutig, verloren].
    """
    budget: LinkBudget
    slot_duration_s: float
    window_fraction: float
    transmittance: float
    source_sigma_s: float
    eve_fraction: float
    photon_outcomes: Tuple[np.ndarray, np.ndarray]
    ambiguous_per_photon: float
    channels: Tuple[ChannelPoint, ChannelPoint]


def _photon_outcomes(outcomes: np.ndarray, transmittance: float,
                     efficiencies: Sequence[float]) -> np.ndarray:
    conclusive0, conclusive1, ambiguous, _ = outcomes
    eta0, eta1 = efficiencies
    probs = np.array([
        transmittance * conclusive0 * eta0,
        transmittance * conclusive0 * (1.0 - eta0),
        transmittance * conclusive1 * eta1,
        transmittance * conclusive1 * (1.0 - eta1),
        transmittance * ambiguous,
        0.0,
    ])
    probs[5] = max(0.0, 1.0 - probs[:5].sum())
    return probs


def compute_operating_point(config: ScenarioConfig,
                            route: Optional[Sequence[LinkPath]] = None) -> OperatingPoint:
    """
    Berechnet den Arbeitspunkt eines Links

    Args:
        config: Szenario
        route: Teilstrecken; Standard ist config.path

    Returns:
        OperatingPoint
    """
    source = config.source
    paths = list(route) if route is not None else [config.path]
    budget = compute_route_budget(paths, StatePair.default(), source.linewidth_nm)
    transmittance = budget.transmittance_without_pdl
    pair = budget.effective_state_pair

    slot = config.slot_duration_s
    source_sigma = effective_pulse_fwhm(source) / FWHM_PER_SIGMA
    detectors = [config.detectors[channel] for channel in (0, 1)]
    efficiencies = [detector.efficiency for detector in detectors]

    outcomes = [outcome_probabilities(pair[bit], config.receiver) for bit in (0, 1)]
    photon_outcomes = tuple(_photon_outcomes(outcomes[bit], transmittance, efficiencies)
                            for bit in (0, 1))
    ambiguous_per_photon = 0.5 * transmittance * (outcomes[0][2] + outcomes[1][2])

    channels = []
    for channel, detector in enumerate(detectors):
        # Spalte 0 bzw. 2 in photon_outcomes: erkannter Photonenanteil
        column = 2 * channel
        lambdas = [source.mu * photon_outcomes[bit][column] for bit in (0, 1)]
        click = tuple(-math.expm1(-lam) for lam in lambdas)
        signal = 0.5 * (click[0] + click[1])
        dark = detector.dark_rate_hz * slot if detector.enabled else 0.0

        detected_rate = config.clock_hz * (signal + dark)
        factor = dead_time_factor(detected_rate, detector.dead_time_s)
        lookup_rate = detected_rate * factor

        fwhm = jitter_at_rate(detector, lookup_rate)
        shift = shift_at_rate(detector, lookup_rate)
        sigma = timing_sigma(fwhm, source_sigma, budget.added_sigma_s)
        p_own, p_neighbour = slot_allocation_probabilities(
            sigma, shift, slot, config.window_fraction)

        channels.append(ChannelPoint(
            channel=channel,
            enabled=detector.enabled,
            click_probability=click,
            signal_probability=signal,
            dark_probability=dark,
            detected_rate_hz=detected_rate,
            dead_time_factor=factor,
            lookup_rate_hz=lookup_rate,
            fwhm_s=fwhm,
            shift_s=shift,
            sigma_s=sigma,
            p_own=p_own,
            p_neighbour=p_neighbour,
        ))
        logger.debug("Kanal %d: R=%.3g c/s, FWHM=%.1f ps, sigma=%.1f ps, p_fremd=%.4f",
                     channel, detected_rate, fwhm * 1e12, sigma * 1e12, p_neighbour)

    if config.eve_fraction is not None:
        eve = config.eve_fraction
    else:
        eve = eve_information_bound(pair.relative_angle)

    return OperatingPoint(
        budget=budget,
        slot_duration_s=slot,
        window_fraction=config.window_fraction,
        transmittance=transmittance,
        source_sigma_s=source_sigma,
        eve_fraction=eve,
        photon_outcomes=photon_outcomes,
        ambiguous_per_photon=ambiguous_per_photon,
        channels=tuple(channels),
    )
