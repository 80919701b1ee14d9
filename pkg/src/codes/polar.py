# -*- coding: utf-8 -*-
"""
Codes polaires systématiques (noyau d'Arikan) et décodage par liste à annulations
successives (SCL).

Conventions:
    - x = u . F^(kron n), ordre naturel (pas de permutation bit-reversal).
    - LLR = log(P(bit=0) / P(bit=1)) : positif => 0.
    - Le décodage SCL traite un lot de B mots en parallèle (les N2 lignes d'une trame).
"""
from dataclasses import dataclass
import numpy as np
from src.exceptions import (LengthMismatchError, NonPowerOfTwoLengthError, InvalidListSizeError)
from src.utils.system_utils import log
from .codec_config import CodecConfig


def _check_power_of_two(n):
    if n < 1 or n & (n - 1):
        raise NonPowerOfTwoLengthError(f"Longueur {n} n'est pas une puissance de deux")
    return n.bit_length() - 1


def polar_transform(u):
    """
    Transformée x = u . F^(kron n) sur GF(2) par papillons, sur le dernier axe.
    Auto-inverse : polar_transform(polar_transform(u)) == u.
    Args:
        u (array-like): bits, dernier axe de longueur puissance de deux.
    Returns:
        np.ndarray: bits transformés (uint8), même forme.
    """
    x = np.array(u, dtype=np.uint8, copy=True)
    n = x.shape[-1]
    _check_power_of_two(n)
    lead = x.shape[:-1]
    half = 1
    while half < n:
        view = x.reshape(lead + (n // (2 * half), 2, half))
        view[..., 0, :] ^= view[..., 1, :]
        half *= 2
    return x


def build_reliability_order(n1, design="bhattacharyya", epsilon=CodecConfig.BHATTACHARYYA_DESIGN_EPSILON):
    """
    Ordre de fiabilité des canaux synthétiques, du moins fiable au plus fiable.

    Récurrence de Bhattacharyya sur BEC(epsilon) : Z -> (2Z - Z^2, Z^2), le bit
    de poids fort de l'indice correspondant à la première étape de polarisation.
    Les égalités sont départagées par indice croissant (le plus petit indice
    est classé le moins fiable).
    Args:
        n1 (int): longueur N1 (puissance de deux).
        design (str): "bhattacharyya" (seule méthode livrée).
        epsilon (float): paramètre d'effacement de conception.
    Returns:
        np.ndarray: permutation de [0, n1).
    """
    stages = _check_power_of_two(n1)
    if design != "bhattacharyya":
        raise ValueError(f"Méthode de construction inconnue: {design}")
    z = np.array([float(epsilon)])
    for _ in range(stages):
        nxt = np.empty(2 * z.size)
        nxt[0::2] = 2 * z - z * z
        nxt[1::2] = z * z
        z = nxt
    return np.argsort(-z, kind="stable")


class PolarCode:
    """
    Code polaire systématique (N1, K1) à bits gelés nuls.

    Attributs:
        n1 (int): longueur.
        k1 (int): dimension.
        reliability_order (np.ndarray): ordre de fiabilité commun à tous les K1.
        info_set (np.ndarray): les K1 indices les plus fiables, triés.
        frozen_mask (np.ndarray): True sur les indices gelés.
    """

    def __init__(self, n1, k1, reliability_order=None):
        self.stages = _check_power_of_two(n1)
        if not 0 <= k1 <= n1:
            raise LengthMismatchError(f"K1={k1} hors de [0, {n1}]")
        self.n1 = n1
        self.k1 = k1
        if reliability_order is None:
            reliability_order = build_reliability_order(n1)
        self.reliability_order = np.asarray(reliability_order)
        self.info_set = np.sort(self.reliability_order[n1 - k1:]) if k1 else np.zeros(0, dtype=np.int64)
        self.frozen_mask = np.ones(n1, dtype=bool)
        self.frozen_mask[self.info_set] = False
        self.info_positions = self.info_set
        self._systematic_map = self._build_systematic_map()
        log(f"Polar: code ({n1},{k1}) construit", level="DEBUG")

    @property
    def rate(self):
        return self.k1 / self.n1

    def _double_transform(self, info):
        """Encodage par double transformée : x_A = info, gel dans le domaine u, puis retransformée."""
        v = np.zeros(info.shape[:-1] + (self.n1,), dtype=np.uint8)
        v[..., self.info_set] = info
        u = polar_transform(v)
        u[..., self.frozen_mask] = 0
        return polar_transform(u)

    def _build_systematic_map(self):
        """
        Vérifie que la double transformée est systématique pour cet ensemble d'information.
        Sinon, prépare l'inverse de G_AA sur GF(2) pour résoudre u_A directement.
        """
        if self.k1 == 0:
            return None
        identity = np.eye(self.k1, dtype=np.uint8)
        if np.array_equal(self._double_transform(identity)[:, self.info_set], identity):
            return None
        log(f"Polar: ensemble d'information ({self.n1},{self.k1}) non dominé-contigu, inversion de G_AA",
            level="DEBUG")
        rows = np.zeros((self.k1, self.n1), dtype=np.uint8)
        rows[np.arange(self.k1), self.info_set] = 1
        g_aa = polar_transform(rows)[:, self.info_set]
        return gf2_inverse(g_aa)

    def encode(self, info):
        """
        Encodage systématique : x[info_set] = info, contraintes de gel satisfaites.
        Args:
            info (array-like): K1 bits, ou matrice (B, K1).
        Returns:
            np.ndarray: mot(s) de code de longueur N1.
        Raises:
            LengthMismatchError: si la dernière dimension != K1.
        """
        info = np.asarray(info, dtype=np.uint8)
        if info.shape[-1] != self.k1 or info.ndim not in (1, 2):
            raise LengthMismatchError(f"Polar: info {info.shape}, attendu (..., {self.k1})")
        if self._systematic_map is None:
            return self._double_transform(info)
        u = np.zeros(info.shape[:-1] + (self.n1,), dtype=np.uint8)
        u[..., self.info_set] = (info.astype(np.int64) @ self._systematic_map) % 2
        return polar_transform(u)

    def is_codeword(self, word):
        """True si le mot vérifie les contraintes de gel après transformée inverse."""
        word = np.asarray(word, dtype=np.uint8)
        if word.shape[-1] != self.n1:
            raise LengthMismatchError(f"Polar: mot {word.shape}, attendu (..., {self.n1})")
        return bool(np.all(polar_transform(word)[..., self.frozen_mask] == 0))

    def __repr__(self):
        return f"PolarCode(N1={self.n1}, K1={self.k1})"


def gf2_inverse(matrix):
    """
    Inverse d'une matrice carrée sur GF(2) par élimination de Gauss-Jordan.
    Raises:
        ValueError: si la matrice est singulière.
    """
    size = matrix.shape[0]
    work = np.concatenate([matrix.astype(np.uint8) % 2, np.eye(size, dtype=np.uint8)], axis=1)
    for col in range(size):
        pivots = np.nonzero(work[col:, col])[0]
        if pivots.size == 0:
            raise ValueError("Matrice singulière sur GF(2)")
        pivot = col + pivots[0]
        if pivot != col:
            work[[col, pivot]] = work[[pivot, col]]
        others = np.nonzero(work[:, col])[0]
        others = others[others != col]
        work[others] ^= work[col]
    return work[:, size:]


@dataclass(frozen=True)
class SclResult:
    """Décision SCL pour un mot : mot de code, bits systématiques et métrique de chemin."""
    codeword: np.ndarray
    info: np.ndarray
    path_metric: float


def _f_minsum(a, b):
    return np.sign(a) * np.sign(b) * np.minimum(np.abs(a), np.abs(b))


def _g(a, b, left_bits):
    return b + (1.0 - 2.0 * left_bits) * a


class _ListDecoder:
    """
    État d'un décodage SCL par lot : LLR par profondeur (B, L, taille) et décisions
    gauches mémorisées. Seuls les tampons encore utiles sont permutés lors du
    tri des chemins.
    """

    def __init__(self, code, llrs, list_size):
        self.code = code
        self.list_size = list_size
        batch = llrs.shape[0]
        n = code.n1
        root = np.broadcast_to(llrs[:, None, :], (batch, list_size, n))
        self.alpha = [root] + [None] * code.stages
        self.left = [None] * code.stages
        self.metric = np.full((batch, list_size), np.inf)
        self.metric[:, 0] = 0.0
        self.rows = np.arange(batch)[:, None]

    def _permute(self, parents, leaf):
        """Recopie les chemins parents : alpha[d] si la feuille est dans le fils gauche du noeud de profondeur d, sinon left[d]."""
        stages = self.code.stages
        for depth in range(stages):
            in_right = (leaf >> (stages - 1 - depth)) & 1
            if in_right:
                self.left[depth] = self.left[depth][self.rows, parents]
            elif depth > 0:
                self.alpha[depth] = self.alpha[depth][self.rows, parents]

    def _leaf(self, leaf):
        llr = self.alpha[self.code.stages][..., 0]
        if self.code.frozen_mask[leaf]:
            self.metric = self.metric + np.where(llr < 0, -llr, 0.0)
            return np.zeros(llr.shape + (1,), dtype=np.uint8)
        cost_zero = self.metric + np.where(llr < 0, -llr, 0.0)
        cost_one = self.metric + np.where(llr > 0, llr, 0.0)
        candidates = np.concatenate([cost_zero, cost_one], axis=1)
        chosen = np.argsort(candidates, axis=1, kind="stable")[:, :self.list_size]
        parents = chosen % self.list_size
        bits = (chosen // self.list_size).astype(np.uint8)
        self.metric = np.take_along_axis(candidates, chosen, axis=1)
        self._permute(parents, leaf)
        return bits[..., None]

    def run(self, depth=0, offset=0):
        """Parcours en profondeur ; retourne les sommes partielles (B, L, taille) du noeud."""
        if depth == self.code.stages:
            return self._leaf(offset)
        size = self.code.n1 >> depth
        half = size // 2
        node = self.alpha[depth]
        self.alpha[depth + 1] = _f_minsum(node[..., :half], node[..., half:])
        self.left[depth] = self.run(depth + 1, offset)
        node = self.alpha[depth]
        self.alpha[depth + 1] = _g(node[..., :half], node[..., half:], self.left[depth])
        right = self.run(depth + 1, offset + half)
        return np.concatenate([self.left[depth] ^ right, right], axis=-1)


def scl_decode_batch(code, llrs, list_size=CodecConfig.DEFAULT_LIST_SIZE):
    """
    Décodage SCL de B mots en parallèle.

    La métrique min-sum accumulée sert à élaguer la liste. Pour la sélection
    finale, la métrique de chemin est lue comme la pénalité canal du mot de
    code complet, sum(|LLR| sur les positions en désaccord avec le signe),
    recalculée sur chaque survivant : le mot retenu est le plus vraisemblable
    de la liste. Egalités départagées par l'indice de chemin le plus bas.
    Args:
        code (PolarCode): code polaire.
        llrs (np.ndarray): (B, N1) LLR finis.
        list_size (int): taille de liste L (L=1 : annulations successives).
    Returns:
        tuple: (mots de code (B, N1) uint8, bits d'information (B, K1), métriques (B,))
    Raises:
        InvalidListSizeError: si L < 1.
        LengthMismatchError: si la forme ne correspond pas.
    """
    if int(list_size) < 1:
        raise InvalidListSizeError(f"Taille de liste {list_size} < 1")
    llrs = np.asarray(llrs, dtype=np.float64)
    if llrs.ndim != 2 or llrs.shape[1] != code.n1:
        raise LengthMismatchError(f"Polar: LLR {llrs.shape}, attendu (B, {code.n1})")
    llrs = np.clip(llrs, -CodecConfig.LLR_CLIP, CodecConfig.LLR_CLIP)
    decoder = _ListDecoder(code, llrs, int(list_size))
    paths = decoder.run()
    hard = (llrs < 0).astype(np.uint8)
    penalties = np.sum(np.abs(llrs)[:, None, :] * (paths != hard[:, None, :]), axis=2)
    penalties = np.where(np.isfinite(decoder.metric), penalties, np.inf)
    best = np.argmin(penalties, axis=1)
    rows = np.arange(llrs.shape[0])
    codewords = paths[rows, best]
    return codewords, codewords[:, code.info_set], penalties[rows, best]


def scl_decode(code, llrs, list_size=CodecConfig.DEFAULT_LIST_SIZE):
    """
    Décodage SCL d'un mot.
    Args:
        code (PolarCode): code polaire.
        llrs (array-like): N1 LLR.
        list_size (int): taille de liste.
    Returns:
        SclResult: mot de code retenu, information systématique et métrique.
    """
    llrs = np.asarray(llrs, dtype=np.float64)
    if llrs.shape != (code.n1,):
        raise LengthMismatchError(f"Polar: LLR {llrs.shape}, attendu ({code.n1},)")
    codewords, info, metrics = scl_decode_batch(code, llrs[None, :], list_size)
    return SclResult(codewords[0], info[0], float(metrics[0]))


def systematic_encode(code, info):
    """Encodage systématique (voir PolarCode.encode)."""
    return code.encode(info)
