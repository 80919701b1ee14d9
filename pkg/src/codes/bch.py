# -*- coding: utf-8 -*-
"""
Codes BCH binaires au sens strict (étendus ou non) : encodage systématique et
décodage à distance bornée (BDD) par syndromes, Berlekamp-Massey et recherche de Chien.

Convention de position : le bit j d'un mot de longueur n porte le coefficient de
x^(n-1-j). Les k bits d'information occupent les positions 0..k-1, la parité
polynomiale les positions k..n-1 et, pour le code étendu, le bit de parité
globale la position n.
"""
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
import numpy as np
from src.exceptions import InvalidRadiusError, LengthMismatchError
from src.utils.system_utils import log
from .galois import GaloisField


def poly_mul(a, b):
    """Produit de deux polynômes binaires (bitmask)."""
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def poly_mod(a, mod):
    """Reste de a modulo mod (polynômes binaires en bitmask)."""
    mod_degree = mod.bit_length() - 1
    while a.bit_length() - 1 >= mod_degree:
        a ^= mod << (a.bit_length() - 1 - mod_degree)
    return a


def minimal_polynomial(gf, exponent):
    """
    Polynôme minimal de alpha^exponent : produit des (x + alpha^c) sur la classe cyclotomique.
    Args:
        gf (GaloisField): corps de travail.
        exponent (int): exposant de la racine.
    Returns:
        tuple: (bitmask du polynôme binaire, classe cyclotomique en frozenset)
    """
    coset = set()
    e = exponent % gf.order
    while e not in coset:
        coset.add(e)
        e = (2 * e) % gf.order
    coeffs = [1]  # coefficients dans GF(2^m), degré croissant
    for c in sorted(coset):
        root = gf.alpha_power(c)
        shifted = [0] + coeffs
        scaled = [gf.mul(root, v) for v in coeffs] + [0]
        coeffs = [s ^ r for s, r in zip(shifted, scaled)]
    mask = 0
    for i, v in enumerate(coeffs):
        if v not in (0, 1):
            raise ArithmeticError(f"Polynôme minimal non binaire pour alpha^{exponent}")
        mask |= v << i
    return mask, frozenset(coset)


class BddStatus(Enum):
    SUCCESS = "success"
    FAILURE = "failure"


@dataclass(frozen=True)
class BddOutcome:
    """Résultat du BDD d'un mot : mot corrigé, statut et positions inversées."""
    word: np.ndarray
    status: BddStatus
    flipped_positions: tuple = dataclass_field(default=())

    @property
    def success(self):
        return self.status is BddStatus.SUCCESS


class BchCode:
    """
    Code BCH binaire au sens strict de rayon t sur GF(2^m), éventuellement étendu.

    Attributs:
        field (GaloisField): corps des racines.
        n (int): longueur de base 2^m - 1.
        k (int): dimension.
        t (int): rayon de correction.
        extended (bool): bit de parité globale ajouté (longueur n + 1).
        length (int): longueur effective N (n ou n + 1).
        generator_poly (int): g(x) en bitmask.
    """

    def __init__(self, field, t, extended=False):
        if t < 1 or 2 * t >= field.order:
            raise InvalidRadiusError(f"t={t} invalide pour n={field.order}")
        self.field = field
        self.n = field.order
        self.t = t
        self.extended = bool(extended)
        self.length = self.n + 1 if self.extended else self.n

        generator = 1
        covered = set()
        for exponent in range(1, 2 * t + 1):
            if exponent % self.n in covered:
                continue
            min_poly, coset = minimal_polynomial(field, exponent)
            covered |= coset
            generator = poly_mul(generator, min_poly)
        self.generator_poly = generator
        self.k = self.n - (generator.bit_length() - 1)
        if self.k <= 0:
            raise InvalidRadiusError(f"t={t} donne k={self.k} <= 0 pour n={self.n}")

        self.info_positions = np.arange(self.k)
        self._parity_matrix = self._build_parity_matrix()
        self._syndrome_table = self._build_syndrome_table()
        log(f"BCH: code ({self.length},{self.k}) t={t} construit, g(x)={generator:#x}", level="DEBUG")

    @property
    def rate(self):
        return self.k / self.length

    def _build_parity_matrix(self):
        """Matrice P (k x (n-k)) : parité de chaque vecteur unité d'information."""
        r = self.n - self.k
        parity = np.zeros((self.k, r), dtype=np.uint8)
        for i in range(self.k):
            remainder = poly_mod(1 << (self.n - 1 - i), self.generator_poly)
            for j in range(r):
                parity[i, j] = (remainder >> (r - 1 - j)) & 1
        parity.setflags(write=False)
        return parity

    def _build_syndrome_table(self):
        """Table H[i, j] = alpha^((i+1) * (n-1-j)) pour les 2t syndromes."""
        powers = self.n - 1 - np.arange(self.n)
        rows = np.arange(1, 2 * self.t + 1)[:, None]
        table = self.field.antilog_table[(rows * powers[None, :]) % self.field.order]
        table.setflags(write=False)
        return table

    # --- Encodage ---
    def encode(self, info):
        """
        Encodage systématique d'un vecteur d'information.
        Args:
            info (array-like): k bits.
        Returns:
            np.ndarray: mot de code de longueur N (uint8).
        Raises:
            LengthMismatchError: si len(info) != k.
        """
        info = np.asarray(info, dtype=np.uint8)
        if info.ndim != 1 or info.shape[0] != self.k:
            raise LengthMismatchError(f"BCH: {info.shape} bits d'information, attendu ({self.k},)")
        return self.encode_batch(info[None, :])[0]

    def encode_batch(self, info):
        """Encodage systématique ligne par ligne d'une matrice (B, k)."""
        info = np.asarray(info, dtype=np.uint8)
        if info.ndim != 2 or info.shape[1] != self.k:
            raise LengthMismatchError(f"BCH: matrice {info.shape}, attendu (B, {self.k})")
        parity = (info.astype(np.int64) @ self._parity_matrix) % 2
        words = np.concatenate([info, parity.astype(np.uint8)], axis=1)
        if self.extended:
            overall = words.sum(axis=1, dtype=np.int64) % 2
            words = np.concatenate([words, overall.astype(np.uint8)[:, None]], axis=1)
        return words

    # --- Syndromes ---
    def syndromes_batch(self, words):
        """
        Syndromes S_1..S_2t de chaque mot (partie de base, sans la parité étendue).
        Args:
            words (np.ndarray): (B, N) bits.
        Returns:
            np.ndarray: (B, 2t) éléments de GF(2^m).
        """
        body = np.asarray(words)[:, :self.n].astype(bool)
        masked = np.where(body[:, None, :], self._syndrome_table[None, :, :], 0)
        return np.bitwise_xor.reduce(masked, axis=2)

    def is_codeword(self, word):
        """True si le mot appartient au code (syndromes nuls et parité globale paire si étendu)."""
        word = np.asarray(word, dtype=np.uint8)
        if word.shape != (self.length,):
            raise LengthMismatchError(f"BCH: mot {word.shape}, attendu ({self.length},)")
        if np.any(self.syndromes_batch(word[None, :])):
            return False
        return not self.extended or int(word.sum()) % 2 == 0

    # --- Décodage ---
    def berlekamp_massey(self, syndromes):
        """
        Polynôme localisateur d'erreurs Lambda(x) (coefficients de degré croissant).
        Returns:
            tuple: (liste des coefficients, longueur L du registre)
        """
        gf = self.field
        locator = [1]
        previous = [1]
        length = 0
        shift = 1
        last_discrepancy = 1
        for step, syndrome in enumerate(syndromes):
            discrepancy = int(syndrome)
            for i in range(1, length + 1):
                if i < len(locator):
                    discrepancy ^= gf.mul(locator[i], int(syndromes[step - i]))
            if discrepancy == 0:
                shift += 1
                continue
            factor = gf.div(discrepancy, last_discrepancy)
            candidate = locator + [0] * max(0, len(previous) + shift - len(locator))
            for i, coeff in enumerate(previous):
                candidate[i + shift] ^= gf.mul(factor, coeff)
            if 2 * length <= step:
                previous = locator
                length = step + 1 - length
                last_discrepancy = discrepancy
                shift = 1
            else:
                shift += 1
            locator = candidate
        while len(locator) > 1 and locator[-1] == 0:
            locator.pop()
        return locator, length

    def chien_search(self, locator):
        """
        Racines de Lambda parmi alpha^(-p), p = 0..n-1.
        Returns:
            np.ndarray: positions de mot (j = n-1-p) en erreur, triées.
        """
        gf = self.field
        powers = np.arange(self.n)
        value = np.zeros(self.n, dtype=np.int64)
        for i, coeff in enumerate(locator):
            if coeff == 0:
                continue
            value ^= gf.antilog_table[(gf.log_table[coeff] - powers * i) % gf.order]
        roots = np.nonzero(value == 0)[0]
        return np.sort(self.n - 1 - roots)

    def _decode_body(self, syndromes):
        """Positions à inverser dans la partie de base, ou None si échec."""
        if not np.any(syndromes):
            return np.zeros(0, dtype=np.int64)
        locator, length = self.berlekamp_massey(syndromes)
        degree = len(locator) - 1
        if degree != length or degree > self.t:
            return None
        positions = self.chien_search(locator)
        if len(positions) != degree:
            return None
        return positions

    def _finish(self, word, syndromes):
        """Applique le BDD à un mot dont les syndromes sont déjà calculés."""
        positions = self._decode_body(syndromes)
        if positions is None:
            return BddOutcome(word.copy(), BddStatus.FAILURE, ())
        flips = [int(p) for p in positions]
        if self.extended:
            # Parité globale après correction de la partie de base
            if (int(word.sum()) + len(flips)) % 2:
                flips.append(self.n)
            if len(flips) > self.t:
                return BddOutcome(word.copy(), BddStatus.FAILURE, ())
        corrected = word.copy()
        corrected[flips] ^= 1
        return BddOutcome(corrected, BddStatus.SUCCESS, tuple(sorted(flips)))

    def bdd_decode(self, word):
        """
        Décodage à distance bornée d'un mot reçu.
        Args:
            word (array-like): N bits.
        Returns:
            BddOutcome: SUCCESS avec le mot de code à distance <= t, sinon FAILURE et mot inchangé.
        Raises:
            LengthMismatchError: si len(word) != N.
        """
        word = np.asarray(word, dtype=np.uint8)
        if word.shape != (self.length,):
            raise LengthMismatchError(f"BCH: mot {word.shape}, attendu ({self.length},)")
        return self._finish(word, self.syndromes_batch(word[None, :])[0])

    def bdd_decode_batch(self, words):
        """
        BDD de chaque ligne d'une matrice (B, N). Les mots à syndrome nul ne passent pas par BM.
        Returns:
            tuple: (mots corrigés (B, N), succès (B,) bool, liste des positions inversées par mot)
        """
        words = np.asarray(words, dtype=np.uint8)
        if words.ndim != 2 or words.shape[1] != self.length:
            raise LengthMismatchError(f"BCH: matrice {words.shape}, attendu (B, {self.length})")
        syndromes = self.syndromes_batch(words)
        decoded = words.copy()
        success = np.ones(words.shape[0], dtype=bool)
        flipped = [()] * words.shape[0]
        dirty = np.any(syndromes, axis=1)
        if self.extended:
            dirty |= (words.sum(axis=1, dtype=np.int64) % 2).astype(bool)
        for b in np.nonzero(dirty)[0]:
            outcome = self._finish(words[b], syndromes[b])
            decoded[b] = outcome.word
            success[b] = outcome.success
            flipped[b] = outcome.flipped_positions
        return decoded, success, flipped

    def __repr__(self):
        return f"BchCode(N={self.length}, k={self.k}, t={self.t}, extended={self.extended})"


def bch_build(field, t, extended=False):
    """
    Construit le code BCH au sens strict de rayon t sur field.
    Args:
        field (GaloisField): corps GF(2^m).
        t (int): rayon de correction (t >= 1, 2t < n).
        extended (bool): ajout du bit de parité globale.
    Returns:
        BchCode: le code construit.
    """
    return BchCode(field, t, extended)


def bch_encode(code, info):
    """Encodage systématique (voir BchCode.encode)."""
    return code.encode(info)


def bdd_decode(code, word):
    """Décodage à distance bornée (voir BchCode.bdd_decode)."""
    return code.bdd_decode(word)


def build_column_code(t=2, m=8, extended=True):
    """Code BCH étendu (2^m, k) utilisé en colonne ((256,239) pour t=2, m=8)."""
    return BchCode(GaloisField(m), t, extended)
