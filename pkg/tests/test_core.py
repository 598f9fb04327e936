# -*- coding: utf-8 -*-
"""
B92NetSim - Unit Tests
Testet die Kernkomponenten (Fehler, Konfigurationslader, Event-Bus)
"""

import unittest
import sys
import os
import tempfile
import shutil
from dataclasses import dataclass, field
from pathlib import Path
from typing import List

# Pfad für Imports
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))


@dataclass
class _Inner:
    rate: float = 1.0
    label: str = "a"
    active: bool = True

    def __post_init__(self):
        from core.errors import ConfigError
        if self.rate < 0:
            raise ConfigError("rate darf nicht negativ sein", field_path="rate")


@dataclass
class _Item:
    index: int = 0


def _items() -> List[_Item]:
    return [_Item(0)]


@dataclass
class _Outer:
    inner: _Inner = field(default_factory=_Inner)
    items: List[_Item] = field(default_factory=_items, metadata={"item_type": _Item})
    count: int = 3


class TestConfigError(unittest.TestCase):
    """Tests für ConfigError"""

    def test_message_contains_path_and_line(self):
        """Feldpfad und Zeile erscheinen in der Meldung"""
        from core.errors import ConfigError
        error = ConfigError("kaputt", field_path="source.mu", line=7)
        self.assertIn("source.mu", str(error))
        self.assertIn("Zeile 7", str(error))
        self.assertIsInstance(error, ValueError)

    def test_with_prefix(self):
        """Abschnittspfad wird vorangestellt"""
        from core.errors import ConfigError
        error = ConfigError("x", field_path="mu").with_prefix("source")
        self.assertEqual(error.field_path, "source.mu")
        self.assertEqual(ConfigError("x").with_prefix("path").field_path, "path")


class TestConfigLoader(unittest.TestCase):
    """Tests für den strikten Dataclass-Lader"""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def _write(self, text: str) -> str:
        path = os.path.join(self.temp_dir, "config.json")
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path

    def test_missing_file(self):
        """Fehlende Datei ist ein ConfigError"""
        from core.config import read_config_file
        from core.errors import ConfigError
        with self.assertRaises(ConfigError):
            read_config_file(os.path.join(self.temp_dir, "fehlt.json"))

    def test_empty_file(self):
        """Leere Datei ergibt ein leeres Dict"""
        from core.config import read_config_file
        self.assertEqual(read_config_file(self._write("  \n")), {})

    def test_syntax_error_line(self):
        """Syntaxfehler tragen die Zeilennummer"""
        from core.config import read_config_file
        from core.errors import ConfigError
        path = self._write('{\n  "a": 1,\n  "b": \n}\n')
        with self.assertRaises(ConfigError) as ctx:
            read_config_file(path)
        self.assertEqual(ctx.exception.line, 4)

    def test_top_level_must_be_object(self):
        """Liste auf oberster Ebene wird abgelehnt"""
        from core.config import read_config_file
        from core.errors import ConfigError
        with self.assertRaises(ConfigError):
            read_config_file(self._write("[1, 2]"))

    def test_merge_keeps_defaults(self):
        """Fehlende Schlüssel behalten die Standardwerte"""
        from core.config import merge_section
        merged = merge_section(_Outer(), {"inner": {"rate": 2}})
        self.assertEqual(merged.inner.rate, 2.0)
        self.assertIsInstance(merged.inner.rate, float)
        self.assertEqual(merged.inner.label, "a")
        self.assertEqual(merged.count, 3)

    def test_unknown_key(self):
        """Unbekannte Schlüssel werden mit Pfad abgelehnt"""
        from core.config import merge_section
        from core.errors import ConfigError
        with self.assertRaises(ConfigError) as ctx:
            merge_section(_Outer(), {"inner": {"rte": 2}})
        self.assertEqual(ctx.exception.field_path, "inner.rte")

    def test_invariant_violation_path(self):
        """Verletzte Invarianten erhalten den vollen Feldpfad"""
        from core.config import merge_section
        from core.errors import ConfigError
        with self.assertRaises(ConfigError) as ctx:
            merge_section(_Outer(), {"inner": {"rate": -1}})
        self.assertEqual(ctx.exception.field_path, "inner.rate")

    def test_type_checks(self):
        """Typkonflikte bei Skalaren"""
        from core.config import merge_section
        from core.errors import ConfigError
        for raw in ({"count": "drei"}, {"inner": {"active": 1}},
                    {"inner": {"label": 5}}, {"inner": 4}):
            with self.subTest(raw=raw):
                with self.assertRaises(ConfigError):
                    merge_section(_Outer(), raw)

    def test_typed_list(self):
        """Listen mit Dataclass-Elementen"""
        from core.config import merge_section
        merged = merge_section(_Outer(), {"items": [{"index": 4}, {}]})
        self.assertEqual([item.index for item in merged.items], [4, 0])
        self.assertIsInstance(merged.items[0], _Item)

    def test_dump_roundtrip(self):
        """Ausgabe und erneutes Einlesen ergeben dieselbe Konfiguration"""
        import json
        from core.config import dump_config, merge_section
        original = merge_section(_Outer(), {"count": 9, "items": [{"index": 2}]})
        self.assertEqual(merge_section(_Outer(), json.loads(dump_config(original))), original)

    def test_get_value(self):
        """Punktnotation inklusive Listenindex"""
        from core.config import get_value
        from core.errors import ConfigError
        config = _Outer()
        self.assertEqual(get_value(config, "inner.label"), "a")
        self.assertEqual(get_value(config, "items.0.index"), 0)
        with self.assertRaises(ConfigError):
            get_value(config, "inner.nichts")
        with self.assertRaises(ConfigError):
            get_value(config, "items.5")

    def test_with_value(self):
        """with_value liefert eine validierte Kopie"""
        from core.config import with_value
        from core.errors import ConfigError
        config = _Outer()
        changed = with_value(config, "inner.rate", 5.0)
        self.assertEqual(changed.inner.rate, 5.0)
        self.assertEqual(config.inner.rate, 1.0)
        self.assertEqual(with_value(config, "items.0.index", 7).items[0].index, 7)
        with self.assertRaises(ConfigError) as ctx:
            with_value(config, "inner.rate", -2.0)
        self.assertEqual(ctx.exception.field_path, "inner.rate")


class TestEventBus(unittest.TestCase):
    """Tests für EventBus"""

    def setUp(self):
        from core.event_bus import EventBus
        self.bus = EventBus()

    def test_subscribe_emit(self):
        """Testet Subscribe und Emit"""
        from core.event_bus import EventType

        received = []

        def handler(event):
            received.append(event)

        self.bus.subscribe(EventType.RUN_STARTED, handler)
        self.bus.emit(EventType.RUN_STARTED, {'kind': 'sweep'})
        self.bus.emit(EventType.RUN_COMPLETED, {'kind': 'sweep'})

        self.assertEqual(len(received), 1)
        self.assertEqual(received[0].data['kind'], 'sweep')

    def test_subscribe_all(self):
        """Globale Subscriber sehen jedes Event"""
        from core.event_bus import EventType
        received = []
        self.bus.subscribe_all(received.append)
        self.bus.emit_sweep_progress(1, 3, 2.0e9, source='test')
        self.bus.emit_status_message("fertig")
        self.bus.unsubscribe_all(received.append)
        self.bus.emit(EventType.RUN_STARTED)

        self.assertEqual([e.type for e in received],
                         [EventType.SWEEP_PROGRESS, EventType.STATUS_MESSAGE])
        self.assertEqual(received[0].data, {'index': 1, 'total': 3, 'value': 2.0e9})

    def test_failing_handler_is_isolated(self):
        """Ein fehlerhafter Handler stoppt die übrigen nicht"""
        from core.event_bus import EventType
        received = []

        def broken(event):
            raise RuntimeError("kaputt")

        self.bus.subscribe(EventType.PORT_COMPLETED, broken)
        self.bus.subscribe(EventType.PORT_COMPLETED, received.append)
        with self.assertLogs('core.event_bus', level='ERROR'):
            self.bus.emit(EventType.PORT_COMPLETED, {'port_id': 0})
        self.assertEqual(len(received), 1)

    def test_history(self):
        """Testet Event-History"""
        from core.event_bus import EventType

        self.bus.emit(EventType.STATUS_MESSAGE, {'message': 'Test 1'})
        self.bus.emit(EventType.STATUS_MESSAGE, {'message': 'Test 2'})
        self.bus.emit(EventType.KEYS_WRITTEN, {'bits': 10})

        history = self.bus.get_history(EventType.STATUS_MESSAGE, limit=10)
        self.assertEqual(len(history), 2)
        self.assertEqual(history[0].data['message'], 'Test 2')

        self.bus.clear_history()
        self.assertEqual(self.bus.get_history(), [])

    def test_singleton(self):
        """get_event_bus liefert immer dieselbe Instanz"""
        from core.event_bus import get_event_bus
        self.assertIs(get_event_bus(), get_event_bus())


if __name__ == '__main__':
    unittest.main(verbosity=2)
