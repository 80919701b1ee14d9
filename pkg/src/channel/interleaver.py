# -*- coding: utf-8 -*-
"""
Entrelaceur bloc : écriture ligne par ligne, lecture colonne par colonne.
"""
from dataclasses import dataclass
import numpy as np
from src.exceptions import DimensionMismatchError


def _as_block(bits, rows, cols):
    bits = np.asarray(bits).ravel()
    if rows < 1 or cols < 1 or bits.size != rows * cols:
        raise DimensionMismatchError(f"{bits.size} bits pour un bloc {rows}x{cols}")
    return bits


def interleave(bits, rows, cols):
    """Ecrit en lignes (rows x cols), lit en colonnes."""
    return _as_block(bits, rows, cols).reshape(rows, cols).T.ravel()


def deinterleave(bits, rows, cols):
    """Inverse de interleave pour le même bloc rows x cols."""
    return _as_block(bits, rows, cols).reshape(cols, rows).T.ravel()


@dataclass(frozen=True)
class Interleaver:
    """Entrelaceur bloc de dimensions fixes (par défaut N2 x N1 de la trame)."""
    rows: int
    cols: int

    @property
    def size(self):
        return self.rows * self.cols

    def interleave(self, bits):
        return interleave(bits, self.rows, self.cols)

    def deinterleave(self, bits):
        return deinterleave(bits, self.rows, self.cols)
