# -*- coding: utf-8 -*-
"""
B92NetSim - Unit Tests
Photonenquelle: Bitstrom, Poisson-Statistik, Pulsbreite
"""

import math
import unittest
import sys
from pathlib import Path

import numpy as np
from scipy import stats

# Pfad für Imports
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from core.errors import ConfigError
from modules.optics.polarization import StatePair
from modules.source.photon_source import (
    SourceConfig, effective_pulse_fwhm, emit_pulses, generate_bitstream,
    multi_photon_probability, sample_photon_number,
)


class TestSourceConfig(unittest.TestCase):
    """Tests für SourceConfig"""

    def test_defaults(self):
        """Standardwerte: mu 0.1, 1 GHz, 850 nm"""
        config = SourceConfig()
        self.assertEqual(config.mu, 0.1)
        self.assertEqual(config.clock_hz, 1e9)
        self.assertEqual(config.wavelength_nm, 850.0)
        self.assertAlmostEqual(config.slot_duration_s, 1e-9)

    def test_validation(self):
        """Ungültige Werte werden mit Feldnamen abgelehnt"""
        for kwargs, name in (({"mu": -1.0}, "mu"), ({"mu": 0.0}, "mu"),
                             ({"clock_hz": 0.0}, "clock_hz"),
                             ({"pulse_fwhm": -1e-12}, "pulse_fwhm"),
                             ({"linewidth_nm": -0.1}, "linewidth_nm")):
            with self.subTest(kwargs=kwargs):
                with self.assertRaises(ConfigError) as ctx:
                    SourceConfig(**kwargs)
                self.assertEqual(ctx.exception.field_path, name)
        self.assertEqual(SourceConfig(pulse_fwhm=0.0).pulse_fwhm, 0.0)
        self.assertEqual(effective_pulse_fwhm(SourceConfig(pulse_fwhm=0.0)), 0.0)

    def test_patterning(self):
        """Taktabhängige Verbreiterung"""
        config = SourceConfig(clock_hz=2e9, patterning_s_per_ghz=10e-12)
        self.assertAlmostEqual(effective_pulse_fwhm(config), 120e-12)
        self.assertEqual(effective_pulse_fwhm(SourceConfig()), 100e-12)


class TestPhotonStatistics(unittest.TestCase):
    """Tests für Poisson-Statistik und Bitstrom"""

    def test_multi_photon_closed_form(self):
        """P(n >= 2) bei mu = 0.1 ist 0.00468 < 0.5 %"""
        value = multi_photon_probability(0.1)
        self.assertAlmostEqual(value, 0.00468, places=5)
        self.assertAlmostEqual(value, stats.poisson.sf(1, 0.1))
        self.assertLess(value, 0.005)

    def test_multi_photon_monte_carlo(self):
        """Stichprobe über 10^6 Pulse innerhalb 3 sigma"""
        rng = np.random.default_rng(11)
        counts = sample_photon_number(0.1, rng, size=10 ** 6)
        expected = multi_photon_probability(0.1)
        observed = float(np.mean(counts >= 2))
        sigma = math.sqrt(expected * (1 - expected) / 10 ** 6)
        self.assertLess(abs(observed - expected), 3 * sigma)
        self.assertLess(observed, 0.005)

    def test_poisson_pmf(self):
        """Häufigkeiten von 0, 1, 2 Photonen gegen die Poisson-Verteilung"""
        rng = np.random.default_rng(5)
        counts = sample_photon_number(0.5, rng, size=200000)
        for n in range(3):
            expected = stats.poisson.pmf(n, 0.5)
            sigma = math.sqrt(expected * (1 - expected) / len(counts))
            self.assertLess(abs(np.mean(counts == n) - expected), 4 * sigma)

    def test_scalar_and_invalid_mu(self):
        """Einzelwert als int, mu <= 0 abgelehnt"""
        rng = np.random.default_rng(0)
        self.assertIsInstance(sample_photon_number(0.1, rng), int)
        with self.assertRaises(ValueError):
            sample_photon_number(0.0, rng)
        with self.assertRaises(ValueError):
            multi_photon_probability(-1.0)

    def test_bitstream(self):
        """Bits 0/1, ausgeglichen, reproduzierbar"""
        bits = generate_bitstream(100000, np.random.default_rng(2))
        self.assertEqual(bits.dtype, np.uint8)
        self.assertTrue(set(np.unique(bits)) <= {0, 1})
        self.assertLess(abs(bits.mean() - 0.5), 4 * 0.5 / math.sqrt(len(bits)))
        again = generate_bitstream(100000, np.random.default_rng(2))
        self.assertTrue(np.array_equal(bits, again))
        self.assertEqual(len(generate_bitstream(0, np.random.default_rng(2))), 0)
        with self.assertRaises(ValueError):
            generate_bitstream(-1, np.random.default_rng(2))


class TestEmitPulses(unittest.TestCase):
    """Tests für emit_pulses"""

    def test_columns_and_items(self):
        """Spalten gleich lang, Einzelzugriff mit Zustand"""
        pair = StatePair.default()
        pulses = emit_pulses(SourceConfig(mu=0.3), pair, 1000, np.random.default_rng(4))
        self.assertEqual(len(pulses), 1000)
        self.assertTrue(np.array_equal(pulses.slots, np.arange(1000)))
        pulse = pulses[10]
        self.assertEqual(pulse.slot, 10)
        self.assertEqual(pulse.state, pair[pulse.bit])
        self.assertEqual(pulses[-1].slot, 999)
        self.assertEqual(sum(1 for _ in pulses), 1000)
        self.assertAlmostEqual(pulses.mean_photon_number, 0.3, delta=0.06)

    def test_draw_order(self):
        """Erst alle Bits, dann alle Photonenzahlen"""
        rng = np.random.default_rng(9)
        bits = generate_bitstream(500, rng)
        counts = sample_photon_number(0.1, rng, size=500)
        pulses = emit_pulses(SourceConfig(), StatePair.default(), 500,
                             np.random.default_rng(9))
        self.assertTrue(np.array_equal(pulses.bits, bits))
        self.assertTrue(np.array_equal(pulses.photon_counts, counts))


if __name__ == '__main__':
    unittest.main(verbosity=2)
