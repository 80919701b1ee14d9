# -*- coding: utf-8 -*-
"""
Modulation 16QAM à étiquetage de Gray, canal AWGN et démappage souple.

Convention LLR : log(P(bit=0) / P(bit=1)), positif => 0.
Energie moyenne par symbole Es = 1.
"""
from dataclasses import dataclass
import numpy as np
from scipy.special import erfc, logsumexp
from src.exceptions import LengthNotDivisibleBy4Error, NonPositiveVarianceError, FecError

# Etiquetage de Gray par axe : 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3
GRAY_AXIS_LEVELS = {0b00: -3.0, 0b01: -1.0, 0b11: 1.0, 0b10: 3.0}
DEMAPPER_METHODS = ("exact", "maxlog")


@dataclass(frozen=True)
class Constellation:
    """
    Constellation étiquetée : points[s] est le symbole de l'étiquette s (bit 0 = bit de poids fort).
    """
    points: np.ndarray
    bits_per_symbol: int

    @property
    def labels(self):
        """Matrice (M, bits_per_symbol) des bits de chaque étiquette."""
        shifts = np.arange(self.bits_per_symbol - 1, -1, -1)
        return (np.arange(self.points.size)[:, None] >> shifts[None, :]) & 1


def _build_qam16():
    points = np.empty(16, dtype=np.complex128)
    for label in range(16):
        in_phase = GRAY_AXIS_LEVELS[label >> 2]
        quadrature = GRAY_AXIS_LEVELS[label & 0b11]
        points[label] = complex(in_phase, quadrature) / np.sqrt(10.0)
    points.setflags(write=False)
    return Constellation(points=points, bits_per_symbol=4)


QAM16 = _build_qam16()


def map_16qam(bits, constellation=QAM16):
    """
    Association bits -> symboles, 4 bits par symbole (b0 b1 : I, b2 b3 : Q).
    Args:
        bits (array-like): vecteur de bits de longueur multiple de 4.
    Returns:
        np.ndarray: symboles complexes.
    Raises:
        LengthNotDivisibleBy4Error: si la longueur n'est pas multiple de 4.
    """
    bits = np.asarray(bits, dtype=np.int64).ravel()
    width = constellation.bits_per_symbol
    if bits.size % width:
        raise LengthNotDivisibleBy4Error(f"{bits.size} bits, non multiple de {width}")
    weights = 1 << np.arange(width - 1, -1, -1)
    return constellation.points[bits.reshape(-1, width) @ weights]


def demap_16qam(symbols, noise_variance, method="exact", constellation=QAM16):
    """
    LLR par bit : log(sum_{s: b=0} exp(-|y-s|^2/N0) / sum_{s: b=1} exp(-|y-s|^2/N0)).
    Args:
        symbols (array-like): symboles reçus.
        noise_variance (float): N0, variance complexe du bruit.
        method (str): "exact" (log-somme) ou "maxlog".
    Returns:
        np.ndarray: LLR, 4 par symbole, dans l'ordre b0..b3.
    Raises:
        NonPositiveVarianceError: si noise_variance <= 0.
    """
    if not noise_variance > 0:
        raise NonPositiveVarianceError(f"Variance de bruit {noise_variance} <= 0")
    if method not in DEMAPPER_METHODS:
        raise FecError(f"Démappeur inconnu: {method}")
    received = np.asarray(symbols, dtype=np.complex128).ravel()
    metric = -np.abs(received[:, None] - constellation.points[None, :]) ** 2 / noise_variance
    labels = constellation.labels
    llrs = np.empty((received.size, constellation.bits_per_symbol))
    for k in range(constellation.bits_per_symbol):
        zero = metric[:, labels[:, k] == 0]
        one = metric[:, labels[:, k] == 1]
        if method == "exact":
            llrs[:, k] = logsumexp(zero, axis=1) - logsumexp(one, axis=1)
        else:
            llrs[:, k] = zero.max(axis=1) - one.max(axis=1)
    return llrs.ravel()


def noise_variance_from_snr(es_n0_db, es=1.0):
    """N0 = Es / 10^(Es/N0 dB / 10) ; 0 pour +inf."""
    if np.isposinf(es_n0_db):
        return 0.0
    return es / 10.0 ** (es_n0_db / 10.0)


def make_rng(seed, *stream):
    """
    Générateur numpy déterministe pour (seed, *stream), ex. (seed, point SNR, indice de trame).
    Un Generator déjà construit est retourné tel quel.
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(np.random.SeedSequence([int(seed)] + [int(s) for s in stream]))


def awgn(symbols, es_n0_db, rng_seed):
    """
    Ajout d'un bruit gaussien complexe circulaire de variance N0/2 par dimension réelle.
    Args:
        symbols (np.ndarray): trame de symboles.
        es_n0_db (float): Es/N0 en dB (+inf : trame inchangée).
        rng_seed (int | np.random.Generator): graine ou générateur.
    Returns:
        np.ndarray: symboles bruités.
    """
    symbols = np.asarray(symbols, dtype=np.complex128)
    n0 = noise_variance_from_snr(es_n0_db)
    if n0 == 0.0:
        return symbols.copy()
    rng = make_rng(rng_seed)
    sigma = np.sqrt(n0 / 2.0)
    # Parties réelle et imaginaire tirées par paires : le bruit d'un préfixe ne dépend pas de la longueur
    noise = rng.normal(0.0, sigma, symbols.shape + (2,)).view(np.complex128)[..., 0]
    return symbols + noise


def qam16_ber_approx(es_n0_db):
    """BER pré-FEC approchée de la 16QAM Gray : (3/8) erfc(sqrt(Es/N0 / 10))."""
    es_n0 = 10.0 ** (np.asarray(es_n0_db, dtype=np.float64) / 10.0)
    return 0.375 * erfc(np.sqrt(es_n0 / 10.0))
