# -*- coding: utf-8 -*-
"""
B92NetSim - Cascade-Fehlerkorrektur
Interaktive Paritätsabgleiche mit binärer Suche und Rückverfolgung
über frühere Durchläufe.
"""

import hashlib
import heapq
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

logger = logging.getLogger(__name__)

DEFAULT_PASSES = 4
DEFAULT_BLOCK_CONSTANT = 0.73


@dataclass
class ReconciliationResult:
    """
    Ergebnis der Fehlerkorrektur

    Attributes:
        corrected_key: Bobs korrigierter Schlüssel
        bits_leaked: Offengelegte Paritäten (nur Cascade-Austausch)
        passes: Anzahl Durchläufe
        converged: Abschließender Hash-Vergleich erfolgreich
        corrections: Anzahl korrigierter Bits
    """
    corrected_key: np.ndarray
    bits_leaked: int
    passes: int
    converged: bool
    corrections: int = 0


@dataclass
class _Pass:
    order: np.ndarray       # Permutation: Position -> Schlüsselindex
    position: np.ndarray    # Schlüsselindex -> Position
    block_size: int
    parities: np.ndarray    # Alices Blockparitäten, -1 = noch nicht offengelegt
    known: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def block_of(self, index: int) -> int:
        return int(self.position[index]) // self.block_size

    def block_range(self, block: int) -> Tuple[int, int]:
        start = block * self.block_size
        return start, min(start + self.block_size, len(self.order))


def key_digest(bits: np.ndarray) -> bytes:
    """64-Bit-Prüfsumme eines Bitstrings (SHA-256, gekürzt)."""
    packed = np.packbits(np.asarray(bits, dtype=np.uint8), bitorder='little')
    digest = hashlib.sha256(len(bits).to_bytes(8, 'little') + packed.tobytes())
    return digest.digest()[:8]


class CascadeReconciler:
    """
    Cascade zwischen Alice (Referenz) und Bob (wird korrigiert)

    Alices Antworten werden lokal aus ihrem Schlüssel berechnet; jede
    Antwort zählt als ein offengelegtes Bit. Bereits offengelegte
    Teilblock-Paritäten werden wiederverwendet und nicht erneut gezählt.
    """

    def __init__(self, alice_key: np.ndarray, bob_key: np.ndarray,
                 rng: np.random.Generator):
        self.alice = np.asarray(alice_key, dtype=np.uint8)
        self.bob = np.array(bob_key, dtype=np.uint8, copy=True)
        self.rng = rng
        self.bits_leaked = 0
        self.corrections = 0
        self._passes: List[_Pass] = []

    def _bob_parity(self, state: _Pass, start: int, end: int) -> int:
        return int(self.bob[state.order[start:end]].sum()) & 1

    def _alice_parity(self, state: _Pass, start: int, end: int) -> int:
        key = (start, end)
        if key not in state.known:
            self.bits_leaked += 1
            state.known[key] = int(self.alice[state.order[start:end]].sum()) & 1
        return state.known[key]

    def _binary_search(self, state: _Pass, start: int, end: int) -> int:
        """Findet ein fehlerhaftes Bit in einem Bereich mit ungerader Fehlerzahl."""
        while end - start > 1:
            middle = start + (end - start + 1) // 2
            if self._alice_parity(state, start, middle) != self._bob_parity(state, start, middle):
                end = middle
            else:
                start = middle
        return int(state.order[start])

    def _flip(self, index: int):
        self.bob[index] ^= 1
        self.corrections += 1

    def _odd_blocks_containing(self, index: int):
        for number, state in enumerate(self._passes):
            block = state.block_of(index)
            if state.parities[block] >= 0:
                yield number, block

    def _cascade_from(self, index: int):
        """Rückverfolgung: jede Korrektur kann Blöcke früherer Durchläufe ungerade machen."""
        # kleinste Blöcke (frühe Durchläufe) zuerst
        pending = list(self._odd_blocks_containing(index))
        heapq.heapify(pending)
        while pending:
            number, block = heapq.heappop(pending)
            state = self._passes[number]
            start, end = state.block_range(block)
            if self._bob_parity(state, start, end) == state.parities[block]:
                continue
            error = self._binary_search(state, start, end)
            self._flip(error)
            for item in self._odd_blocks_containing(error):
                heapq.heappush(pending, item)

    def run_pass(self, block_size: int):
        length = len(self.alice)
        order = self.rng.permutation(length)
        position = np.empty(length, dtype=np.int64)
        position[order] = np.arange(length)
        block_count = -(-length // block_size)
        state = _Pass(order, position, block_size,
                      np.full(block_count, -1, dtype=np.int8))
        self._passes.append(state)

        for block in range(block_count):
            start, end = state.block_range(block)
            state.parities[block] = self._alice_parity(state, start, end)
            if self._bob_parity(state, start, end) != state.parities[block]:
                error = self._binary_search(state, start, end)
                self._flip(error)
                self._cascade_from(error)


def reconcile(alice_key: np.ndarray, bob_key: np.ndarray, qber_hint: float,
              rng: np.random.Generator, passes: int = DEFAULT_PASSES,
              block_constant: float = DEFAULT_BLOCK_CONSTANT) -> ReconciliationResult:
    """
    Cascade-Fehlerkorrektur

    Args:
        alice_key: Alices Schlüssel (Referenz)
        bob_key: Bobs Schlüssel
        qber_hint: Geschätzte Fehlerrate (0, 0.5)
        rng: Zufallsgenerator für die Permutationen
        passes: Anzahl Durchläufe; Blockgröße verdoppelt sich je Durchlauf
        block_constant: Erste Blockgröße = round(block_constant / qber_hint)

    Returns:
        ReconciliationResult
    """
    alice_key = np.asarray(alice_key, dtype=np.uint8)
    bob_key = np.asarray(bob_key, dtype=np.uint8)
    if len(alice_key) != len(bob_key):
        raise ValueError(
            f"Schlüssellängen verschieden: {len(alice_key)} != {len(bob_key)}"
        )
    if not 0.0 < qber_hint < 0.5:
        raise ValueError(f"qber_hint muss in (0, 0.5) liegen: {qber_hint}")
    if passes < 1:
        raise ValueError(f"Mindestens ein Durchlauf nötig: {passes}")

    if len(alice_key) == 0:
        return ReconciliationResult(bob_key.copy(), 0, passes, True)

    reconciler = CascadeReconciler(alice_key, bob_key, rng)
    block_size = max(1, int(round(block_constant / qber_hint)))
    for _ in range(passes):
        reconciler.run_pass(min(block_size, len(alice_key)))
        block_size *= 2

    converged = key_digest(alice_key) == key_digest(reconciler.bob)
    if not converged:
        logger.warning("Cascade nicht konvergiert (%d Bits, %d Korrekturen)",
                       len(alice_key), reconciler.corrections)

    logger.debug("Cascade: %d Bits, %d offengelegt, %d Korrekturen",
                 len(alice_key), reconciler.bits_leaked, reconciler.corrections)
    return ReconciliationResult(
        corrected_key=reconciler.bob,
        bits_leaked=reconciler.bits_leaked,
        passes=passes,
        converged=converged,
        corrections=reconciler.corrections,
    )
