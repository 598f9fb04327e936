# -*- coding: utf-8 -*-
"""
B92NetSim - Privacy Amplification
Toeplitz-Hashing über GF(2) (2-universelle Familie)
"""

import logging

import numpy as np
from scipy.signal import fftconvolve

logger = logging.getLogger(__name__)

# Ab dieser Produktgröße n*m wird per FFT gefaltet
_FFT_THRESHOLD = 1 << 22


def generate_seed(input_length: int, output_length: int,
                  rng: np.random.Generator) -> np.ndarray:
    """Zufälliger Toeplitz-Seed der Länge n + m - 1."""
    if input_length < 0 or output_length < 0:
        raise ValueError("Längen dürfen nicht negativ sein")
    length = max(input_length + output_length - 1, 0)
    return rng.integers(0, 2, size=length, dtype=np.uint8)


def privacy_amplify(key: np.ndarray, output_length: int, seed: np.ndarray) -> np.ndarray:
    """
    Komprimiert den Schlüssel mit einer Toeplitz-Matrix

    T[i, j] = seed[i - j + n - 1], Ergebnis = T @ key mod 2. Die Matrix wird
    nicht aufgebaut; das Produkt ist ein Ausschnitt der Faltung seed * key.

    Args:
        key: Korrigierter Schlüssel (n Bits)
        output_length: Ziellänge m <= n
        seed: n + m - 1 Zufallsbits

    Returns:
        uint8-Array der Länge m
    """
    key = np.asarray(key, dtype=np.uint8)
    seed = np.asarray(seed, dtype=np.uint8)
    n = len(key)

    if output_length < 0 or output_length > n:
        raise ValueError(f"output_length muss in [0, {n}] liegen: {output_length}")
    if output_length == 0:
        return np.zeros(0, dtype=np.uint8)
    if len(seed) != n + output_length - 1:
        raise ValueError(
            f"Seed-Länge {len(seed)} passt nicht, erwartet {n + output_length - 1}"
        )

    if n * output_length < _FFT_THRESHOLD:
        full = np.convolve(seed.astype(np.int64), key.astype(np.int64))
    else:
        full = np.rint(fftconvolve(seed.astype(np.float64),
                                   key.astype(np.float64))).astype(np.int64)

    result = (full[n - 1:n - 1 + output_length] & 1).astype(np.uint8)
    logger.debug("Privacy Amplification: %d -> %d Bits", n, output_length)
    return result
