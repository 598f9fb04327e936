# -*- coding: utf-8 -*-
"""
B92NetSim - Binäre Entropie
"""

import math


def binary_entropy(p: float) -> float:
    """
    H2(p) = -p log2 p - (1-p) log2 (1-p), mit H2(0) = H2(1) = 0

    Raises:
        ValueError: p außerhalb [0, 1]
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Wahrscheinlichkeit außerhalb [0, 1]: {p}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)
