# -*- coding: utf-8 -*-
"""
B92NetSim - CSV-Ausgabe
Feste Spalten, Dezimalpunkt, Zeilenende \\n
"""

import csv
import io
import json
from pathlib import Path
from typing import Any, Dict, Iterable, Tuple, Union

from modules.netsim.metrics import LinkMetrics

CSV_COLUMNS = (
    "parameter_value",
    "raw_click_rate_hz",
    "conclusive_rate_hz",
    "sifted_rate_hz",
    "qber",
    "nbr_hz",
    "signal_counts",
    "dark_counts",
    "misallocated_counts",
    "insufficient_data_flag",
)


def format_number(value: Any) -> str:
    """Gebietsschema-unabhängige Darstellung (repr für float)."""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def metrics_row(parameter_value: float, metrics: LinkMetrics) -> Tuple[str, ...]:
    return tuple(format_number(value) for value in (
        float(parameter_value),
        metrics.raw_click_rate_hz,
        metrics.conclusive_rate_hz,
        metrics.sifted_rate_hz,
        metrics.qber,
        metrics.nbr_hz,
        metrics.counts.signal,
        metrics.counts.dark,
        metrics.counts.misallocated,
        metrics.insufficient_data,
    ))


def render_csv(rows: Iterable[Tuple[float, LinkMetrics]]) -> str:
    """Erzeugt den CSV-Text inklusive Kopfzeile."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for parameter_value, metrics in rows:
        writer.writerow(metrics_row(parameter_value, metrics))
    return buffer.getvalue()


def write_csv(path: Union[str, Path], rows: Iterable[Tuple[float, LinkMetrics]]) -> Path:
    csv_file = Path(path)
    with open(csv_file, 'w', encoding='utf-8', newline='') as f:
        f.write(render_csv(rows))
    return csv_file


def write_manifest(path: Union[str, Path], manifest: Dict[str, Any]) -> Path:
    """Schreibt das Lauf-Manifest (JSON, ohne Zeitstempel)."""
    manifest_file = Path(path)
    with open(manifest_file, 'w', encoding='utf-8', newline='') as f:
        f.write(json.dumps(manifest, indent=2, ensure_ascii=False))
        f.write("\n")
    return manifest_file
