# -*- coding: utf-8 -*-
"""
B92NetSim - Polarisationsoptik
Lineare Polarisationszustände, Projektion, PDL-Modell und Eve-Schranke
"""

import math
from dataclasses import dataclass, field

# Winkelkonvention (Radiant, modulo pi)
STATE0_ANGLE = 0.0
STATE1_ANGLE = math.pi / 4
ANALYZER1_ANGLE = math.pi / 2       # orthogonal zu Zustand 0
ANALYZER0_ANGLE = 3 * math.pi / 4   # orthogonal zu Zustand 1

_ANGLE_TOLERANCE = 1e-12


def normalize_angle(angle: float) -> float:
    """Bildet einen Winkel auf [0, pi) ab."""
    result = math.fmod(angle, math.pi)
    if result < 0:
        result += math.pi
    if result >= math.pi:
        result = 0.0
    return result


@dataclass(frozen=True)
class PolarizationState:
    """
    Linearer Polarisationszustand

    Attributes:
        angle: Polarisationswinkel in Radiant, normiert auf [0, pi)
        relative_amplitude: Feldamplitude relativ zum verlustfreien Fall (0, 1]
    """
    angle: float
    relative_amplitude: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.relative_amplitude <= 1.0:
            raise ValueError(
                f"relative_amplitude muss in (0, 1] liegen: {self.relative_amplitude}"
            )
        object.__setattr__(self, 'angle', normalize_angle(self.angle))

    @property
    def intensity(self) -> float:
        """Relative Intensität (Amplitude zum Quadrat)."""
        return self.relative_amplitude ** 2

    @property
    def angle_deg(self) -> float:
        return math.degrees(self.angle)


@dataclass(frozen=True)
class StatePair:
    """Die beiden nicht-orthogonalen B92-Zustände"""
    state0: PolarizationState = field(
        default_factory=lambda: PolarizationState(STATE0_ANGLE))
    state1: PolarizationState = field(
        default_factory=lambda: PolarizationState(STATE1_ANGLE))

    @classmethod
    def default(cls) -> "StatePair":
        """Nominales Paar 0 / 45 Grad mit voller Amplitude."""
        return cls(PolarizationState(STATE0_ANGLE), PolarizationState(STATE1_ANGLE))

    def __getitem__(self, bit: int) -> PolarizationState:
        if bit == 0:
            return self.state0
        if bit == 1:
            return self.state1
        raise IndexError(f"Bit muss 0 oder 1 sein: {bit}")

    @property
    def relative_angle(self) -> float:
        """Winkelabstand der beiden Zustände in [0, pi/2]."""
        delta = abs(self.state1.angle - self.state0.angle) % math.pi
        if delta > math.pi / 2:
            delta = math.pi - delta
        return delta

    def with_pdl(self, pdl_db: float, pdl_axis: float = 0.0) -> "StatePair":
        """Wendet dasselbe PDL-Element auf beide Zustände an."""
        return StatePair(
            apply_pdl(self.state0, pdl_db, pdl_axis),
            apply_pdl(self.state1, pdl_db, pdl_axis),
        )


def projection_probability(state: PolarizationState, analyzer_angle: float) -> float:
    """
    Malus-Gesetz: Transmissionswahrscheinlichkeit durch einen Analysator

    Args:
        state: Eingangszustand
        analyzer_angle: Orientierung des Analysators in Radiant

    Returns:
        cos²(theta - analyzer) skaliert mit der Zustandsintensität
    """
    return math.cos(state.angle - analyzer_angle) ** 2 * state.intensity


def apply_pdl(state: PolarizationState, pdl_db: float,
              pdl_axis: float = 0.0) -> PolarizationState:
    """
    Polarisationsabhängiger Verlust

    Die Feldkomponente senkrecht zur verlustarmen Achse pdl_axis wird mit
    g = 10^(-pdl_db/20) skaliert. Der Winkel dreht dadurch zur Achse hin,
    die Amplitude sinkt entsprechend.

    Args:
        state: Eingangszustand
        pdl_db: PDL in dB (>= 0)
        pdl_axis: Orientierung der verlustarmen Achse in Radiant

    Returns:
        Neuer Zustand mit verdrehtem Winkel und reduzierter Amplitude
    """
    if pdl_db < 0:
        raise ValueError(f"pdl_db darf nicht negativ sein: {pdl_db}")
    if pdl_db == 0:
        return state

    gain = 10 ** (-pdl_db / 20)
    delta = state.angle - pdl_axis
    along = math.cos(delta)
    across = gain * math.sin(delta)

    angle = math.atan2(across, along) + pdl_axis
    amplitude = state.relative_amplitude * math.hypot(along, across)
    return PolarizationState(angle, min(amplitude, 1.0))


def eve_information_bound(relative_angle: float) -> float:
    """
    Obere Schranke für Eves Information pro Bit

    Entspricht der Erfolgswahrscheinlichkeit einer eindeutigen
    Zustandsunterscheidung (USD) für zwei reine Zustände: 1 - cos(Winkel).
    Bei 45 Grad ergibt das etwa 0.293.
    """
    if relative_angle < -_ANGLE_TOLERANCE or relative_angle > math.pi / 2 + _ANGLE_TOLERANCE:
        raise ValueError(f"Relativer Winkel außerhalb [0, pi/2]: {relative_angle}")
    clipped = min(max(relative_angle, 0.0), math.pi / 2)
    return 1.0 - math.cos(clipped)
