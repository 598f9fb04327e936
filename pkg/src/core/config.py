# -*- coding: utf-8 -*-
"""
B92NetSim - Konfigurationslader
Strikter JSON-Lader für verschachtelte Dataclass-Konfigurationen
"""

import json
import logging
from dataclasses import asdict, fields, is_dataclass, replace
from pathlib import Path
from typing import Any, Dict, Union

from core.errors import ConfigError

logger = logging.getLogger(__name__)

# Metadaten-Schlüssel für Listenfelder mit Dataclass-Elementen
ITEM_TYPE = "item_type"


def read_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Liest eine JSON-Konfigurationsdatei

    Eine leere Datei ergibt ein leeres Dict (alle Standardwerte).

    Raises:
        ConfigError: Datei fehlt, ist kein JSON oder kein Objekt
    """
    config_file = Path(path)
    if not config_file.exists():
        raise ConfigError(f"Konfigurationsdatei nicht gefunden: {config_file}")

    try:
        text = config_file.read_text(encoding='utf-8')
    except OSError as e:
        raise ConfigError(f"Konfigurationsdatei nicht lesbar: {e}")

    if not text.strip():
        logger.info("Leere Konfiguration %s, verwende Standardwerte", config_file)
        return {}

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"Ungültiges JSON: {e.msg}", line=e.lineno)

    if not isinstance(data, dict):
        raise ConfigError("Konfiguration muss ein JSON-Objekt sein", line=1)
    return data


def merge_section(template: Any, raw: Any, path: str = "") -> Any:
    """
    Überträgt ein JSON-Objekt auf eine Dataclass-Vorlage

    Fehlende Schlüssel behalten den Wert der Vorlage, unbekannte Schlüssel
    werden abgelehnt. Validierungsfehler der Dataclass erhalten den vollen
    Feldpfad.

    Args:
        template: Dataclass-Instanz mit den Standardwerten
        raw: Geparstes JSON-Objekt
        path: Punktnotation des Abschnitts (für Fehlermeldungen)

    Returns:
        Neue Dataclass-Instanz
    """
    if not isinstance(raw, dict):
        raise ConfigError("Objekt erwartet", field_path=path or None)

    known = {item.name: item for item in fields(template)}
    values: Dict[str, Any] = {}

    for key, value in raw.items():
        field_path = f"{path}.{key}" if path else key
        if key not in known:
            raise ConfigError("Unbekannter Schlüssel", field_path=field_path)

        current = getattr(template, key)
        item_type = known[key].metadata.get(ITEM_TYPE)

        if is_dataclass(current) and not isinstance(current, type):
            values[key] = merge_section(current, value, field_path)
        elif item_type is not None:
            if not isinstance(value, list):
                raise ConfigError("Liste erwartet", field_path=field_path)
            values[key] = [
                merge_section(item_type(), item, f"{field_path}.{index}")
                for index, item in enumerate(value)
            ]
        else:
            values[key] = _check_scalar(current, value, field_path)

    try:
        return replace(template, **values)
    except ConfigError as e:
        raise e.with_prefix(path)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"Ungültiger Wert: {e}", field_path=path or None)


def _check_scalar(current: Any, value: Any, field_path: str) -> Any:
    """Grobe Typprüfung gegen den Vorlagenwert."""
    if isinstance(current, bool) or isinstance(value, bool):
        if not isinstance(current, bool) or not isinstance(value, bool):
            raise ConfigError("Typkonflikt (bool)", field_path=field_path)
        return value
    if isinstance(current, (int, float)):
        if not isinstance(value, (int, float)):
            raise ConfigError("Zahl erwartet", field_path=field_path)
        if isinstance(current, float):
            return float(value)
        return value
    if isinstance(current, str) and not isinstance(value, str):
        raise ConfigError("Zeichenkette erwartet", field_path=field_path)
    return value


def config_to_dict(config: Any) -> Dict[str, Any]:
    """Serialisiert eine Dataclass-Konfiguration (JSON-kompatibel)."""
    return asdict(config)


def dump_config(config: Any) -> str:
    """Gibt die Konfiguration als formatiertes JSON zurück."""
    return json.dumps(config_to_dict(config), indent=2, ensure_ascii=False)


def get_value(config: Any, key: str) -> Any:
    """
    Holt einen Wert per Punktnotation

    Args:
        config: Dataclass-Konfiguration
        key: z.B. "source.mu" oder "network.ports.0.pdl_db"

    Raises:
        ConfigError: Pfad existiert nicht
    """
    obj = config
    for part in key.split('.'):
        if isinstance(obj, (list, tuple)) and part.isdigit():
            index = int(part)
            if index >= len(obj):
                raise ConfigError("Index außerhalb der Liste", field_path=key)
            obj = obj[index]
        elif is_dataclass(obj) and hasattr(obj, part):
            obj = getattr(obj, part)
        else:
            raise ConfigError("Unbekannter Schlüssel", field_path=key)
    return obj


def with_value(config: Any, key: str, value: Any) -> Any:
    """
    Liefert eine Kopie der Konfiguration mit geändertem Wert

    Die Vorlage bleibt unverändert; die betroffenen Abschnitte werden
    neu konstruiert und dabei validiert.
    """
    parts = key.split('.')
    try:
        return _set_path(config, parts, value)
    except ConfigError as e:
        raise ConfigError(e.message, field_path=key, line=e.line)


def _set_path(obj: Any, parts, value: Any) -> Any:
    head, rest = parts[0], parts[1:]

    if isinstance(obj, list) and head.isdigit():
        index = int(head)
        if index >= len(obj):
            raise ConfigError("Index außerhalb der Liste")
        items = list(obj)
        items[index] = _set_path(items[index], rest, value) if rest else value
        return items

    if not is_dataclass(obj) or head not in {item.name for item in fields(obj)}:
        raise ConfigError("Unbekannter Schlüssel")

    new_value = _set_path(getattr(obj, head), rest, value) if rest else value
    try:
        return replace(obj, **{head: new_value})
    except ConfigError:
        raise
    except (TypeError, ValueError) as e:
        raise ConfigError(f"Ungültiger Wert: {e}")
