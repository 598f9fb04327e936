# -*- coding: utf-8 -*-
"""
B92NetSim - Unit Tests
Polarisationszustände, Projektion, PDL und Eve-Schranke
"""

import math
import unittest
import sys
from pathlib import Path

import numpy as np

# Pfad für Imports
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from modules.optics.polarization import (
    PolarizationState, StatePair, apply_pdl, eve_information_bound,
    normalize_angle, projection_probability,
)


class TestPolarizationState(unittest.TestCase):
    """Tests für PolarizationState und StatePair"""

    def test_angle_normalized(self):
        """Winkel liegen in [0, pi)"""
        for angle in (-math.pi / 4, math.pi, 3 * math.pi / 2, 7.0):
            state = PolarizationState(angle)
            self.assertGreaterEqual(state.angle, 0.0)
            self.assertLess(state.angle, math.pi)
        self.assertAlmostEqual(PolarizationState(-math.pi / 4).angle, 3 * math.pi / 4)
        self.assertEqual(normalize_angle(math.pi), 0.0)

    def test_amplitude_range(self):
        """Amplitude muss in (0, 1] liegen"""
        for amplitude in (0.0, -0.1, 1.2):
            with self.assertRaises(ValueError):
                PolarizationState(0.0, amplitude)
        self.assertAlmostEqual(PolarizationState(0.0, 0.5).intensity, 0.25)

    def test_default_pair(self):
        """Standardpaar hat 45 Grad Abstand"""
        pair = StatePair.default()
        self.assertAlmostEqual(pair.relative_angle, math.pi / 4)
        self.assertAlmostEqual(pair[1].angle_deg, 45.0)
        self.assertEqual(StatePair(), pair)
        with self.assertRaises(IndexError):
            pair[2]

    def test_relative_angle_folded(self):
        """Relativer Winkel wird auf [0, pi/2] gefaltet"""
        pair = StatePair(PolarizationState(0.0), PolarizationState(math.radians(170)))
        self.assertAlmostEqual(math.degrees(pair.relative_angle), 10.0)


class TestProjection(unittest.TestCase):
    """Tests für projection_probability"""

    def test_examples(self):
        """Parallel, orthogonal und 45 Grad"""
        state = PolarizationState(0.0)
        self.assertAlmostEqual(projection_probability(state, 0.0), 1.0)
        self.assertAlmostEqual(projection_probability(state, math.pi / 2), 0.0)
        self.assertAlmostEqual(projection_probability(state, math.pi / 4), 0.5)

    def test_completeness_and_period(self):
        """Orthogonales Analysatorpaar summiert zur Intensität, Periode pi"""
        rng = np.random.default_rng(3)
        for theta, amplitude in zip(rng.uniform(0, math.pi, 50), rng.uniform(0.1, 1.0, 50)):
            state = PolarizationState(theta, amplitude)
            total = (projection_probability(state, theta)
                     + projection_probability(state, theta + math.pi / 2))
            self.assertAlmostEqual(total, amplitude ** 2)
            analyzer = theta + 0.3
            self.assertAlmostEqual(projection_probability(state, analyzer),
                                   projection_probability(state, analyzer + math.pi))


class TestPdl(unittest.TestCase):
    """Tests für apply_pdl"""

    def test_zero_pdl_identity(self):
        """0 dB ändert nichts"""
        state = PolarizationState(math.pi / 4)
        self.assertEqual(apply_pdl(state, 0.0, 0.0), state)

    def test_rotation_at_max_pdl(self):
        """45 Grad bei 1.1 dB: atan(g) = 41.4 Grad, Abweichung <= 5 Grad"""
        result = apply_pdl(PolarizationState(math.pi / 4), 1.1, 0.0)
        gain = 10 ** (-1.1 / 20)
        self.assertAlmostEqual(result.angle, math.atan(gain))
        self.assertAlmostEqual(result.angle_deg, 41.4, places=1)
        self.assertLessEqual(45.0 - result.angle_deg, 5.0)

    def test_amplitude_vector_oracle(self):
        """Vergleich mit expliziter Zwei-Komponenten-Rechnung"""
        gain = 10 ** (-2.0 / 20)
        axis = math.radians(20)
        for theta in np.linspace(0.05, math.pi - 0.05, 17):
            result = apply_pdl(PolarizationState(theta), 2.0, axis)
            along = math.cos(theta - axis)
            across = gain * math.sin(theta - axis)
            expected = normalize_angle(math.atan2(across, along) + axis)
            self.assertAlmostEqual(result.angle, expected)
            self.assertAlmostEqual(result.relative_amplitude, math.hypot(along, across))

    def test_state_on_axis(self):
        """Zustand auf der Achse dreht nicht"""
        result = apply_pdl(PolarizationState(0.0), 3.0, 0.0)
        self.assertAlmostEqual(result.angle, 0.0)
        self.assertAlmostEqual(result.relative_amplitude, 1.0)

    def test_monotone_in_pdl(self):
        """Winkelabweichung wächst mit der PDL"""
        theta = math.radians(30)
        shifts = [abs(apply_pdl(PolarizationState(theta), pdl, 0.0).angle - theta)
                  for pdl in (0.2, 0.5, 1.0, 2.0, 5.0)]
        self.assertEqual(shifts, sorted(shifts))

    def test_negative_pdl(self):
        """Negative PDL wird abgelehnt"""
        with self.assertRaises(ValueError):
            apply_pdl(PolarizationState(0.0), -0.1, 0.0)

    def test_pair_with_pdl(self):
        """Paar mit PDL auf Achse 0: Zustand 0 bleibt, Zustand 1 dreht"""
        pair = StatePair.default().with_pdl(1.1, 0.0)
        self.assertAlmostEqual(pair.state0.angle, 0.0)
        self.assertLess(pair.relative_angle, math.pi / 4)


class TestEveBound(unittest.TestCase):
    """Tests für eve_information_bound"""

    def test_anchors(self):
        """45 Grad -> 0.293, 50 Grad -> 0.357, Ränder 0 und 1"""
        self.assertAlmostEqual(eve_information_bound(math.pi / 4), 0.293, delta=0.001)
        self.assertAlmostEqual(eve_information_bound(math.radians(50)), 0.357, delta=0.002)
        self.assertAlmostEqual(eve_information_bound(0.0), 0.0)
        self.assertAlmostEqual(eve_information_bound(math.pi / 2), 1.0)

    def test_monotone(self):
        """Monoton steigend auf [0, pi/2]"""
        values = [eve_information_bound(a) for a in np.linspace(0, math.pi / 2, 50)]
        self.assertTrue(all(b > a for a, b in zip(values, values[1:])))

    def test_rejects_out_of_range(self):
        """Winkel außerhalb [0, pi/2] werden abgelehnt"""
        for angle in (-0.1, math.pi / 2 + 0.1):
            with self.assertRaises(ValueError):
                eve_information_bound(angle)


if __name__ == '__main__':
    unittest.main(verbosity=2)
