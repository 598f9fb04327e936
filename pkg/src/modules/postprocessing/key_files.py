# -*- coding: utf-8 -*-
"""
B92NetSim - Schlüsseldateien
Gepackte Bits (little-endian) plus Sidecar-Datei <name>.len mit der Bitanzahl
"""

import logging
from pathlib import Path
from typing import Union

import numpy as np

logger = logging.getLogger(__name__)


def _length_path(path: Path) -> Path:
    return path.with_name(path.name + ".len")


def write_key_file(path: Union[str, Path], bits: np.ndarray) -> Path:
    """
    Schreibt einen Schlüssel als gepackte Bits

    Returns:
        Pfad der Schlüsseldatei
    """
    key_file = Path(path)
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.size and bits.max() > 1:
        raise ValueError("Schlüssel darf nur 0/1 enthalten")

    key_file.parent.mkdir(parents=True, exist_ok=True)
    key_file.write_bytes(np.packbits(bits, bitorder='little').tobytes())
    _length_path(key_file).write_text(f"{len(bits)}\n", encoding='utf-8')
    logger.info("Schlüssel geschrieben: %s (%d Bits)", key_file, len(bits))
    return key_file


def read_key_file(path: Union[str, Path]) -> np.ndarray:
    """Liest einen mit write_key_file geschriebenen Schlüssel."""
    key_file = Path(path)
    length = int(_length_path(key_file).read_text(encoding='utf-8').strip())
    packed = np.frombuffer(key_file.read_bytes(), dtype=np.uint8)
    bits = np.unpackbits(packed, bitorder='little')
    if length > len(bits):
        raise ValueError(f"Schlüsseldatei zu kurz: {len(bits)} < {length} Bits")
    return bits[:length]
