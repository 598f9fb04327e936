# -*- coding: utf-8 -*-
"""
B92NetSim - Linkbudget
Verluste, PDL und Dispersion entlang eines optischen Pfads
"""

import logging
import math
from dataclasses import dataclass
from typing import Sequence

from core.errors import ConfigError
from modules.optics.polarization import StatePair

logger = logging.getLogger(__name__)


@dataclass
class LinkPath:
    """
    Optischer Pfad zwischen Sender und Empfänger (oder ein Teilstück davon)

    Attributes:
        fiber_length_km: Faserlänge
        fiber_loss_db_per_km: Faserdämpfung
        splitter_loss_db: Verlust passiver Splitter
        pdl_db: Polarisationsabhängiger Verlust
        pdl_axis: Verlustarme PDL-Achse in Radiant
        receiver_excess_loss_db: Zusatzverlust im Empfänger
        dispersion_ps_per_nm_km: Chromatische Dispersion (Betrag wird verwendet)
        attenuator_db: Konzentrierter Dämpfer (ersetzt Faser im Sweep)
    """
    fiber_length_km: float = 0.0
    fiber_loss_db_per_km: float = 2.1
    splitter_loss_db: float = 0.0
    pdl_db: float = 0.0
    pdl_axis: float = 0.0
    receiver_excess_loss_db: float = 0.0
    dispersion_ps_per_nm_km: float = 85.0
    attenuator_db: float = 0.0

    def __post_init__(self):
        for name in ('fiber_length_km', 'fiber_loss_db_per_km', 'splitter_loss_db',
                     'pdl_db', 'receiver_excess_loss_db', 'attenuator_db'):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} darf nicht negativ sein", field_path=name)

    @property
    def fixed_loss_db(self) -> float:
        """Polarisationsunabhängiger Verlust in dB."""
        return (self.fiber_length_km * self.fiber_loss_db_per_km
                + self.splitter_loss_db
                + self.receiver_excess_loss_db
                + self.attenuator_db)


@dataclass(frozen=True)
class LinkBudget:
    """
    Ergebnis der Budgetrechnung

    Attributes:
        transmittance: Gesamttransmission inkl. mittlerem PDL-Verlust
        added_sigma_s: Zusätzliche Zeitverschmierung (1 sigma) durch Dispersion
        effective_state_pair: Zustände am Empfänger
        loss_db: Gesamtverlust in dB
        pdl_loss_db: Davon mittlerer PDL-Anteil
    """
    transmittance: float
    added_sigma_s: float
    effective_state_pair: StatePair
    loss_db: float = 0.0
    pdl_loss_db: float = 0.0

    @property
    def transmittance_without_pdl(self) -> float:
        """Transmission ohne PDL; die PDL steckt in den Zustandsamplituden."""
        return 10 ** (-(self.loss_db - self.pdl_loss_db) / 10)


def compute_budget(path: LinkPath, pair: StatePair,
                   linewidth_nm: float = 0.15) -> LinkBudget:
    """
    Berechnet Transmission, Dispersionsverbreiterung und effektive Zustände

    Args:
        path: Optischer Pfad
        pair: Zustandspaar am Eingang des Pfads
        linewidth_nm: Spektrale Linienbreite der Quelle

    Returns:
        LinkBudget
    """
    effective = pair.with_pdl(path.pdl_db, path.pdl_axis)

    pdl_loss_db = 0.0
    if path.pdl_db > 0:
        ratio = 0.5 * (effective.state0.intensity / pair.state0.intensity
                       + effective.state1.intensity / pair.state1.intensity)
        pdl_loss_db = -10 * math.log10(ratio)

    loss_db = path.fixed_loss_db + pdl_loss_db
    added_sigma_s = (abs(path.dispersion_ps_per_nm_km) * linewidth_nm
                     * path.fiber_length_km * 1e-12)

    return LinkBudget(
        transmittance=10 ** (-loss_db / 10),
        added_sigma_s=added_sigma_s,
        effective_state_pair=effective,
        loss_db=loss_db,
        pdl_loss_db=pdl_loss_db,
    )


def combine_budgets(first: LinkBudget, second: LinkBudget) -> LinkBudget:
    """
    Hintereinanderschaltung zweier Teilstrecken

    second muss mit first.effective_state_pair als Eingang berechnet sein.
    """
    if second.added_sigma_s == 0:
        sigma = first.added_sigma_s
    elif first.added_sigma_s == 0:
        sigma = second.added_sigma_s
    else:
        sigma = math.hypot(first.added_sigma_s, second.added_sigma_s)

    loss_db = first.loss_db + second.loss_db
    return LinkBudget(
        transmittance=10 ** (-loss_db / 10),
        added_sigma_s=sigma,
        effective_state_pair=second.effective_state_pair,
        loss_db=loss_db,
        pdl_loss_db=first.pdl_loss_db + second.pdl_loss_db,
    )


def compute_route_budget(paths: Sequence[LinkPath], pair: StatePair,
                         linewidth_nm: float = 0.15) -> LinkBudget:
    """
    Budget einer Route aus mehreren Teilstrecken (z.B. Zubringer, Splitter, Drop)

    Raises:
        ValueError: Leere Route
    """
    if not paths:
        raise ValueError("Route ohne Teilstrecken")

    budget = compute_budget(paths[0], pair, linewidth_nm)
    for path in paths[1:]:
        segment = compute_budget(path, budget.effective_state_pair, linewidth_nm)
        budget = combine_budgets(budget, segment)

    logger.debug("Routenbudget: %.2f dB (PDL %.3f dB), sigma_disp=%.2f ps",
                 budget.loss_db, budget.pdl_loss_db, budget.added_sigma_s * 1e12)
    return budget
