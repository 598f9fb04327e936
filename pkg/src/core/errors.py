# -*- coding: utf-8 -*-
"""
B92NetSim - Fehlerklassen
Gemeinsame Ausnahmen für Konfiguration und Simulation
"""

from typing import Optional


class QkdSimError(Exception):
    """Basisklasse aller Simulator-Fehler"""


class ConfigError(QkdSimError, ValueError):
    """
    Ungültige oder unlesbare Konfiguration

    Attributes:
        field_path: Punktnotation des betroffenen Feldes, z.B. "source.mu"
        line: Zeilennummer bei Syntaxfehlern in der Konfigurationsdatei
    """

    def __init__(self, message: str, field_path: Optional[str] = None,
                 line: Optional[int] = None):
        self.message = message
        self.field_path = field_path
        self.line = line
        super().__init__(self._format())

    def _format(self) -> str:
        parts = []
        if self.field_path:
            parts.append(self.field_path)
        if self.line is not None:
            parts.append(f"Zeile {self.line}")
        prefix = f"[{', '.join(parts)}] " if parts else ""
        return f"{prefix}{self.message}"

    def with_prefix(self, prefix: str) -> "ConfigError":
        """Liefert denselben Fehler mit vorangestelltem Abschnittspfad."""
        if not prefix:
            return self
        path = f"{prefix}.{self.field_path}" if self.field_path else prefix
        return ConfigError(self.message, field_path=path, line=self.line)


class SimulationError(QkdSimError):
    """Laufzeitfehler während einer Simulation"""
