# -*- coding: utf-8 -*-
"""
B92NetSim - Ergebnisgrößen eines Links
"""

from dataclasses import dataclass, field

# QBER-Schwelle für Sicherheit gegen individuelle Angriffe
SECURITY_THRESHOLD = 0.10


@dataclass
class CountBreakdown:
    """Herkunft der gesifteten Bits (Monte-Carlo: Zählwerte, analytisch: Erwartungswerte)"""
    signal: float = 0.0
    dark: float = 0.0
    misallocated: float = 0.0

    @property
    def total(self) -> float:
        return self.signal + self.dark + self.misallocated


@dataclass
class LinkMetrics:
    """
    Raten und Fehlerquote eines Links

    Attributes:
        raw_click_rate_hz: Registrierte Klicks (nach Totzeit)
        conclusive_rate_hz: Klicks im Akzeptanzfenster
        sifted_rate_hz: Gesiftete Bits pro Sekunde
        qber: Fehlerquote; 0 mit insufficient_data bei fehlenden Bits
        nbr_hz: Netto-Bitrate nach Fehlerkorrektur und Privacy Amplification
        counts: Herkunft der gesifteten Bits
        insufficient_data: Keine gesifteten Bits vorhanden
        eve_fraction: Verwendete Eve-Schranke
        ambiguous_rate_hz: Photonen an den "?"-Ausgängen pro Sekunde
        slot_count: Anzahl simulierter Schlitze
        mode: "analytic" oder "monte_carlo"
    """
    raw_click_rate_hz: float = 0.0
    conclusive_rate_hz: float = 0.0
    sifted_rate_hz: float = 0.0
    qber: float = 0.0
    nbr_hz: float = 0.0
    counts: CountBreakdown = field(default_factory=CountBreakdown)
    insufficient_data: bool = False
    eve_fraction: float = 0.0
    ambiguous_rate_hz: float = 0.0
    slot_count: int = 0
    mode: str = "analytic"

    @property
    def secure(self) -> bool:
        """QBER unterhalb der Sicherheitsschwelle (und überhaupt Daten)."""
        return not self.insufficient_data and self.qber < SECURITY_THRESHOLD

    @property
    def sifted_count(self) -> float:
        return self.counts.total
