# -*- coding: utf-8 -*-
"""
B92NetSim - Unit Tests
Kommandozeile, Presets und CSV-Ausgabe
"""

import csv
import json
import unittest
import shutil
import sys
import tempfile
from pathlib import Path

# Pfad für Imports
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from cli.commands import EXIT_CONFIG_ERROR, EXIT_OK, EXIT_RUNTIME_ERROR, main
from cli.csv_output import CSV_COLUMNS
from cli.presets import PRESETS, get_preset, run_preset
from core.errors import ConfigError
from core.event_bus import EventBus, EventType, get_event_bus
from modules.netsim.engine import SimulationEngine
from modules.netsim.scenario import ScenarioConfig, parse_config
from modules.postprocessing.key_files import read_key_file


def _read_rows(path: Path):
    with open(path, encoding='utf-8', newline='') as f:
        return list(csv.reader(f))


class TestParseConfig(unittest.TestCase):
    """Tests für parse_config"""

    def setUp(self):
        self.temp_dir = Path(tempfile.mkdtemp())

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def _write(self, text: str) -> Path:
        path = self.temp_dir / "scenario.json"
        path.write_text(text, encoding='utf-8')
        return path

    def test_empty_object_gives_defaults(self):
        """Leeres Objekt -> Standardkonfiguration"""
        self.assertEqual(parse_config(self._write("{}")), ScenarioConfig())

    def test_invalid_mu(self):
        """Negative mittlere Photonenzahl mit Feldpfad"""
        with self.assertRaises(ConfigError) as ctx:
            parse_config(self._write('{"source": {"mu": -1}}'))
        self.assertEqual(ctx.exception.field_path, "source.mu")

    def test_unknown_key(self):
        """Unbekannte Schlüssel werden nicht ignoriert"""
        with self.assertRaises(ConfigError) as ctx:
            parse_config(self._write('{"path": {"fibre_length_km": 2}}'))
        self.assertEqual(ctx.exception.field_path, "path.fibre_length_km")

    def test_syntax_error_line(self):
        """Syntaxfehler nennt die Zeile"""
        with self.assertRaises(ConfigError) as ctx:
            parse_config(self._write('{\n  "seed": 1,\n  "mode": \n}'))
        self.assertEqual(ctx.exception.line, 4)

    def test_defaults_round_trip(self):
        """Ausgabe von 'defaults' lässt sich wieder einlesen"""
        out = self.temp_dir / "defaults.json"
        self.assertEqual(main(["defaults", "--out", str(out)]), EXIT_OK)
        self.assertEqual(parse_config(out), ScenarioConfig())

    def test_network_section(self):
        """Ports werden als Liste von Dataclasses eingelesen"""
        config = parse_config(self._write(json.dumps({
            "network": {"port_count": 8, "ports": [
                {"port_id": 3, "drop": {"fiber_length_km": 1.5}}]}})))
        self.assertEqual(config.network.port_count, 8)
        self.assertEqual(config.network.ports[0].port_id, 3)
        self.assertEqual(config.network.ports[0].drop.fiber_length_km, 1.5)


class TestPresets(unittest.TestCase):
    """Tests für run_preset"""

    def setUp(self):
        self.temp_dir = Path(tempfile.mkdtemp())
        self.engine = SimulationEngine(event_bus=EventBus())

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def test_known_presets(self):
        """Alle vier Experimente sind registriert"""
        self.assertEqual(set(PRESETS), {"fig4_clock_sweep", "fig5_distance_sweep",
                                        "table1_network", "p2p_baseline"})
        with self.assertRaises(KeyError):
            get_preset("fig9")

    def test_byte_identical(self):
        """Zwei Läufe mit gleichem Seed erzeugen identische Dateien"""
        for name in ("table1_network", "p2p_baseline"):
            with self.subTest(preset=name):
                first = run_preset(get_preset(name), self.temp_dir / "a", engine=self.engine)
                second = run_preset(get_preset(name), self.temp_dir / "b", engine=self.engine)
                self.assertTrue(first.success)
                self.assertTrue(second.success)
                for a, b in zip(first.files, second.files):
                    self.assertEqual(Path(a).read_bytes(), Path(b).read_bytes())

    def test_table1_csv(self):
        """Netz-CSV: feste Spalten, vier Zeilen, Trends"""
        result = run_preset(get_preset("table1_network"), self.temp_dir, engine=self.engine)
        rows = _read_rows(self.temp_dir / "table1_network.csv")
        self.assertEqual(tuple(rows[0]), CSV_COLUMNS)
        self.assertEqual(len(rows), 5)
        qber = [float(row[CSV_COLUMNS.index("qber")]) for row in rows[1:]]
        nbr = [float(row[CSV_COLUMNS.index("nbr_hz")]) for row in rows[1:]]
        self.assertEqual(qber, sorted(qber))
        self.assertEqual(nbr, sorted(nbr, reverse=True))
        self.assertIn(str(self.temp_dir / "table1_network_manifest.json"), result.files)

    def test_fig4_files(self):
        """Taktraten-Sweep: eine Datei je Detektorvariante plus Manifest"""
        result = run_preset(get_preset("fig4_clock_sweep"), self.temp_dir, engine=self.engine)
        names = sorted(Path(f).name for f in result.files)
        self.assertEqual(names, ["fig4_clock_sweep_enhanced.csv",
                                 "fig4_clock_sweep_manifest.json",
                                 "fig4_clock_sweep_standard.csv"])
        manifest = json.loads((self.temp_dir / "fig4_clock_sweep_manifest.json")
                              .read_text(encoding='utf-8'))
        self.assertEqual(manifest["seed"], 0)
        self.assertEqual(manifest["outputs"]["fig4_clock_sweep_standard.csv"]["variant"],
                         "standard")

    def test_unwritable_target(self):
        """Ausgabeverzeichnis ist eine Datei -> Fehlschlag ohne Ausnahme"""
        blocker = self.temp_dir / "blocker"
        blocker.write_text("x", encoding='utf-8')
        result = run_preset(get_preset("p2p_baseline"), blocker, engine=self.engine)
        self.assertFalse(result.success)
        self.assertTrue(result.errors)


class TestMain(unittest.TestCase):
    """Tests für main und die Exit-Codes"""

    def setUp(self):
        self.temp_dir = Path(tempfile.mkdtemp())

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def _config(self, data) -> str:
        path = self.temp_dir / "scenario.json"
        path.write_text(json.dumps(data), encoding='utf-8')
        return str(path)

    def test_missing_config(self):
        """Fehlende Datei -> Exit-Code 1"""
        code = main(["run", str(self.temp_dir / "missing.json")])
        self.assertEqual(code, EXIT_CONFIG_ERROR)

    def test_invalid_config(self):
        """Verletzte Invariante -> Exit-Code 1"""
        code = main(["run", self._config({"source": {"mu": -1}})])
        self.assertEqual(code, EXIT_CONFIG_ERROR)

    def test_runtime_error(self):
        """Lauf ohne Schlitze -> Exit-Code 2"""
        code = main(["run", self._config({"slot_count": 0})])
        self.assertEqual(code, EXIT_RUNTIME_ERROR)

    def test_run_writes_csv(self):
        """'run' schreibt eine Zeile pro Link"""
        out = self.temp_dir / "run.csv"
        self.assertEqual(main(["run", self._config({}), "--out", str(out)]), EXIT_OK)
        rows = _read_rows(out)
        self.assertEqual(len(rows), 2)
        self.assertEqual(float(rows[1][0]), 4.2)

    def test_run_monte_carlo_reproducible(self):
        """Monte-Carlo-CSV ist bei gleichem Seed byte-identisch"""
        config = self._config({"mode": "monte_carlo", "slot_count": 100000,
                               "source": {"clock_hz": 1.0e8}})
        outputs = []
        for name in ("first.csv", "second.csv"):
            out = self.temp_dir / name
            self.assertEqual(main(["run", config, "--out", str(out)]), EXIT_OK)
            outputs.append(out.read_bytes())
        self.assertEqual(outputs[0], outputs[1])

    def test_run_network(self):
        """'run --network' schreibt eine Zeile pro Port"""
        out = self.temp_dir / "network.csv"
        code = main(["run", self._config({}), "--network", "--out", str(out)])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(_read_rows(out)), 5)

    def test_sweep(self):
        """'sweep' mit mehreren Werten"""
        out = self.temp_dir / "sweep.csv"
        code = main(["sweep", "fiber_length_km", "1", "2", "4",
                     self._config({}), "--out", str(out)])
        self.assertEqual(code, EXIT_OK)
        rows = _read_rows(out)
        self.assertEqual([float(row[0]) for row in rows[1:]], [1.0, 2.0, 4.0])

    def test_sweep_bad_value(self):
        """Nicht-numerischer Sweep-Wert -> Exit-Code 2"""
        code = main(["sweep", "fiber_length_km", "abc", self._config({})])
        self.assertEqual(code, EXIT_RUNTIME_ERROR)

    def test_preset(self):
        """'preset' schreibt in das Ausgabeverzeichnis"""
        out = self.temp_dir / "results"
        self.assertEqual(main(["preset", "p2p_baseline", "--out", str(out)]), EXIT_OK)
        self.assertTrue((out / "p2p_baseline.csv").exists())
        self.assertTrue((out / "p2p_baseline_manifest.json").exists())


    def test_status_messages(self):
        """Geschriebene Ausgaben werden als Statusnachricht gemeldet"""
        messages = []
        handler = lambda event: messages.append(event.data['message'])
        bus = get_event_bus()
        bus.subscribe(EventType.STATUS_MESSAGE, handler)
        try:
            out = self.temp_dir / "defaults.json"
            self.assertEqual(main(["defaults", "--out", str(out)]), EXIT_OK)
            self.assertEqual(main(["preset", "p2p_baseline",
                                   "--out", str(self.temp_dir / "results")]), EXIT_OK)
            self.assertEqual(main(["defaults"]), EXIT_OK)
        finally:
            bus.unsubscribe(EventType.STATUS_MESSAGE, handler)
        self.assertEqual(len(messages), 2)
        self.assertIn(str(out), messages[0])
        self.assertTrue(messages[1].startswith("p2p_baseline: 2 Dateien"))
    def test_keys(self):
        """'keys' schreibt den Endschlüssel samt Längendatei"""
        config = self._config({
            "mode": "monte_carlo", "slot_count": 1000000,
            "source": {"clock_hz": 1.0e8},
            "path": {"fiber_length_km": 0.5, "receiver_excess_loss_db": 0.0},
        })
        key_file = self.temp_dir / "alice.key"
        self.assertEqual(main(["keys", config, "--emit-keys", str(key_file)]), EXIT_OK)
        bits = read_key_file(key_file)
        self.assertGreater(len(bits), 0)
        self.assertTrue(Path(str(key_file) + ".len").exists())


if __name__ == '__main__':
    unittest.main(verbosity=2)
