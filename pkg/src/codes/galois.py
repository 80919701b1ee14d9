# -*- coding: utf-8 -*-
"""
Arithmétique dans GF(2^m) par tables log/antilog.

Les éléments sont des entiers en base polynomiale (bit i = coefficient de x^i) :
l'addition est un XOR, la multiplication passe par les tables.
"""
import numpy as np
from src.exceptions import (FecError, NonPrimitivePolynomialError, DegreeMismatchError, ZeroInverseError)
from src.utils.system_utils import log
from .codec_config import CodecConfig


class GaloisField:
    """
    Corps fini GF(2^m), immuable après construction.

    Attributs:
        m (int): degré d'extension.
        primitive_poly (int): polynôme primitif (bitmask, unitaire de degré m).
        order (int): 2^m - 1, ordre du groupe multiplicatif.
        log_table (np.ndarray): log_alpha(a) pour a != 0, -1 pour a = 0.
        antilog_table (np.ndarray): alpha^i pour i dans [0, 2*order), doublée pour éviter le modulo.
    """

    def __init__(self, m, primitive_poly=None):
        if not CodecConfig.MIN_FIELD_DEGREE <= m <= CodecConfig.MAX_FIELD_DEGREE:
            raise FecError(f"Degré d'extension m={m} hors de [{CodecConfig.MIN_FIELD_DEGREE}, "
                           f"{CodecConfig.MAX_FIELD_DEGREE}]")
        if primitive_poly is None:
            primitive_poly = CodecConfig.DEFAULT_PRIMITIVE_POLYS[m]
        if primitive_poly.bit_length() - 1 != m:
            raise DegreeMismatchError(
                f"Polynôme {primitive_poly:#b} de degré {primitive_poly.bit_length() - 1}, attendu {m}")

        self.m = m
        self.primitive_poly = primitive_poly
        self.size = 1 << m
        self.order = self.size - 1
        self.log_table, self.antilog_table = self._build_tables()
        self.log_table.setflags(write=False)
        self.antilog_table.setflags(write=False)
        log(f"Galois: GF(2^{m}) construit avec le polynôme {primitive_poly:#x}", level="DEBUG")

    def _build_tables(self):
        """
        Enumère les puissances de alpha et vérifie que son ordre vaut exactement 2^m - 1.
        Returns:
            tuple: (log_table, antilog_table)
        Raises:
            NonPrimitivePolynomialError: si alpha revient à 1 trop tôt ou jamais.
        """
        log_table = np.full(self.size, -1, dtype=np.int64)
        antilog = np.zeros(2 * self.order, dtype=np.int64)
        x = 1
        for i in range(self.order):
            if i > 0 and x == 1:
                raise NonPrimitivePolynomialError(
                    f"{self.primitive_poly:#b}: alpha est d'ordre {i} < {self.order}")
            antilog[i] = x
            log_table[x] = i
            x <<= 1
            if x & self.size:
                x ^= self.primitive_poly
        if x != 1:
            raise NonPrimitivePolynomialError(f"{self.primitive_poly:#b} n'est pas primitif (alpha^{self.order} != 1)")
        antilog[self.order:] = antilog[:self.order]
        return log_table, antilog

    def mul(self, a, b):
        """Produit de deux éléments."""
        if a == 0 or b == 0:
            return 0
        return int(self.antilog_table[self.log_table[a] + self.log_table[b]])

    def inv(self, a):
        """Inverse multiplicatif. Lève ZeroInverseError pour a = 0."""
        if a == 0:
            raise ZeroInverseError("Inversion de 0 dans GF(2^m)")
        return int(self.antilog_table[(self.order - self.log_table[a]) % self.order])

    def div(self, a, b):
        """Quotient a / b."""
        if a == 0:
            if b == 0:
                raise ZeroInverseError("Division par 0 dans GF(2^m)")
            return 0
        return self.mul(a, self.inv(b))

    def alpha_power(self, i):
        """Retourne alpha^i (i entier quelconque, éventuellement négatif)."""
        return int(self.antilog_table[i % self.order])

    def power(self, a, e):
        """Retourne a^e."""
        if a == 0:
            return 1 if e == 0 else 0
        return int(self.antilog_table[(self.log_table[a] * e) % self.order])

    def mul_array(self, a, b):
        """Produit élément par élément de deux tableaux d'éléments."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        prod = self.antilog_table[(self.log_table[a] + self.log_table[b]) % self.order]
        return np.where((a == 0) | (b == 0), 0, prod)

    def __repr__(self):
        return f"GaloisField(m={self.m}, primitive_poly={self.primitive_poly:#x})"


def gf_build(m, primitive_poly=None):
    """
    Construit GF(2^m).
    Args:
        m (int): degré d'extension (2 <= m <= 16).
        primitive_poly (int | None): bitmask du polynôme primitif, défaut de CodecConfig si None.
    Returns:
        GaloisField: le corps construit.
    """
    return GaloisField(m, primitive_poly)


def gf_mul(field, a, b):
    """Produit a*b dans field."""
    return field.mul(a, b)


def gf_inv(field, a):
    """Inverse de a dans field."""
    return field.inv(a)
