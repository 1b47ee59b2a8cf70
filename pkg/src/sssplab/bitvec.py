"""Multi-word bit vectors with set/clear/find-first-set.

Word size is fixed at 64.  Positions are 0-indexed; bits beyond the
logical length are always zero.  ffs scans words in order and returns
the smallest set position, or None when the vector is empty — the naive
per-bit scan defines the semantics, the word tricks are just speed.
"""
from __future__ import annotations

WORD_BITS = 64
_WORD_MASK = (1 << WORD_BITS) - 1


class BitVec:
    __slots__ = ("words", "nbits")

    def __init__(self, nbits: int):
        if nbits < 0:
            raise ValueError("nbits must be >= 0")
        self.nbits = nbits
        self.words = [0] * ((nbits + WORD_BITS - 1) // WORD_BITS)

    def _split(self, pos: int):
        if not 0 <= pos < self.nbits:
            raise IndexError(f"bit {pos} out of range [0, {self.nbits})")
        return pos // WORD_BITS, pos % WORD_BITS

    def set(self, pos: int) -> None:
        wi, b = self._split(pos)
        self.words[wi] |= 1 << b

    def clear(self, pos: int) -> None:
        wi, b = self._split(pos)
        self.words[wi] &= ~(1 << b) & _WORD_MASK

    def test(self, pos: int) -> bool:
        wi, b = self._split(pos)
        return bool((self.words[wi] >> b) & 1)

    def ffs(self):
        """Smallest set position, or None if all bits are zero."""
        for wi, w in enumerate(self.words):
            if w:
                return wi * WORD_BITS + ((w & -w).bit_length() - 1)
        return None

    def fill_ones(self, k: int) -> None:
        """Set bits [0, k) and clear the rest."""
        if not 0 <= k <= self.nbits:
            raise ValueError(f"k={k} outside [0, {self.nbits}]")
        full, rem = divmod(k, WORD_BITS)
        for wi in range(len(self.words)):
            if wi < full:
                self.words[wi] = _WORD_MASK
            elif wi == full and rem:
                self.words[wi] = (1 << rem) - 1
            else:
                self.words[wi] = 0

    def is_zero(self) -> bool:
        return not any(self.words)

    def __repr__(self):
        return f"BitVec({self.nbits}, set={[i for i in range(self.nbits) if self.test(i)]})"
