# -*- coding: utf-8 -*-
"""
Codes produits : Polar-BCH hybride (lignes polaires, colonnes BCH) et BCH-BCH.

Trames : matrices numpy (N2, N1), une ligne par mot du code ligne, une colonne
par mot du code colonne. L'information est une matrice (K2, K1).

Décodeurs :
    - hshd_decode : SCL sur les lignes, BDD sur les colonnes, mise à jour
      additive des LLR aux positions en conflit (Lambda += alpha * (-1)^b_c).
    - ibdd_decode : BDD itératif lignes puis colonnes (BCH-BCH).
    - sabm_decode : iBDD avec marquage des bits par fiabilité canal (BCH-BCH).
"""
from dataclasses import dataclass, field as dataclass_field
import numpy as np
from src.exceptions import (ConfigInvalidError, DimensionMismatchError, WrongRowCodeKindError)
from src.utils.system_utils import log
from .bch import BchCode, BddOutcome, BddStatus, build_column_code
from .codec_config import CodecConfig
from .polar import PolarCode, build_reliability_order, scl_decode_batch


@dataclass
class ProductCodeConfig:
    """
    Code produit asymétrique et paramètres de décodage.
    Args:
        row_code (PolarCode | BchCode): code ligne (N1, K1).
        col_code (BchCode): code colonne (N2, K2).
        alpha (float): facteur d'échelle de la mise à jour HSHD (> 0).
        l_max (int): nombre maximal d'itérations (>= 1).
        list_size (int): taille de liste SCL.
        hrb_threshold (float): seuil HRB (SABM), en multiple de la médiane des |LLR| de la trame.
        lrb_count (int): nombre de bits peu fiables essayés par composante (SABM).
    """
    row_code: object
    col_code: BchCode
    alpha: float = CodecConfig.DEFAULT_ALPHA
    l_max: int = CodecConfig.DEFAULT_L_MAX
    list_size: int = CodecConfig.DEFAULT_LIST_SIZE
    hrb_threshold: float = CodecConfig.SABM_HRB_THRESHOLD
    lrb_count: int = CodecConfig.SABM_LRB_COUNT

    def __post_init__(self):
        if not self.alpha > 0:
            raise ConfigInvalidError(f"alpha={self.alpha} doit être > 0")
        if int(self.l_max) < 1:
            raise ConfigInvalidError(f"l_max={self.l_max} doit être >= 1")
        if not self.hrb_threshold > 0:
            raise ConfigInvalidError(f"hrb_threshold={self.hrb_threshold} doit être > 0")
        if not isinstance(self.row_code, (PolarCode, BchCode)):
            raise ConfigInvalidError(f"Code ligne non supporté: {type(self.row_code).__name__}")
        if not isinstance(self.col_code, BchCode):
            raise ConfigInvalidError(f"Code colonne non supporté: {type(self.col_code).__name__}")

    @property
    def row_is_polar(self):
        return isinstance(self.row_code, PolarCode)

    @property
    def n1(self):
        return self.row_code.n1 if self.row_is_polar else self.row_code.length

    @property
    def k1(self):
        return self.row_code.k1 if self.row_is_polar else self.row_code.k

    @property
    def n2(self):
        return self.col_code.length

    @property
    def k2(self):
        return self.col_code.k

    @property
    def rate(self):
        """Rendement global (K1 x K2) / (N1 x N2)."""
        return (self.k1 * self.k2) / (self.n1 * self.n2)

    @property
    def frame_shape(self):
        return (self.n2, self.n1)

    @property
    def info_shape(self):
        return (self.k2, self.k1)

    def describe(self):
        kind = "polar-bch" if self.row_is_polar else "bch-bch"
        return f"{kind} ({self.n1},{self.k1})x({self.n2},{self.k2}) R={self.rate:.4f}"


@dataclass(frozen=True)
class DecodeReport:
    """
    Résultat d'un décodage de trame.

    Attributs:
        info (np.ndarray): estimation (K2, K1) de l'information.
        iterations_used (int): itérations effectuées (<= l_max).
        converged (bool): accord lignes/colonnes atteint.
        conflict_counts (tuple): nombre de positions b_r != b_c à chaque itération.
        frame (np.ndarray): trame dure finale (N2, N1).
        row_decodings (int): nombre de décodages de lignes effectués.
    """
    info: np.ndarray
    iterations_used: int
    converged: bool
    conflict_counts: tuple = dataclass_field(default=())
    frame: np.ndarray = None
    row_decodings: int = 0


# --- Fabriques ---
def build_polar_bch(k1, n1=CodecConfig.ROW_LENGTH, col_t=CodecConfig.COLUMN_T, m=CodecConfig.FIELD_DEGREE, **decoder):
    """
    Code produit hybride : lignes polaires (n1, k1), colonnes BCH étendu (2^m, k2) de rayon col_t.
    Args:
        k1 (int): dimension polaire.
        n1 (int): longueur polaire.
        col_t (int): rayon du code colonne.
        m (int): degré du corps des colonnes.
        **decoder: alpha, l_max, list_size, hrb_threshold, lrb_count.
    Returns:
        ProductCodeConfig
    """
    column = build_column_code(col_t, m)
    row = PolarCode(n1, k1, build_reliability_order(n1))
    return ProductCodeConfig(row_code=row, col_code=column, **decoder)


def build_bch_bch(row_t=CodecConfig.COLUMN_T, col_t=CodecConfig.COLUMN_T, m=CodecConfig.FIELD_DEGREE, **decoder):
    """Code produit BCH-BCH étendu de rayons (row_t, col_t) sur GF(2^m)."""
    column = build_column_code(col_t, m)
    return ProductCodeConfig(row_code=BchCode(column.field, row_t, extended=True), col_code=column, **decoder)


# --- Encodage / extraction ---
def _encode_rows(cfg, rows):
    if cfg.row_is_polar:
        return cfg.row_code.encode(rows)
    return cfg.row_code.encode_batch(rows)


def _check_shape(matrix, shape, what):
    if matrix.shape != shape:
        raise DimensionMismatchError(f"{what}: forme {matrix.shape}, attendu {shape}")


def pc_encode(cfg, info):
    """
    Encodage produit : chaque ligne d'information par le code ligne, puis chaque colonne par le code colonne.
    Args:
        cfg (ProductCodeConfig): configuration.
        info (np.ndarray): (K2, K1) bits.
    Returns:
        np.ndarray: trame (N2, N1) uint8.
    Raises:
        DimensionMismatchError: si info n'a pas la forme (K2, K1).
    """
    info = np.asarray(info, dtype=np.uint8)
    _check_shape(info, cfg.info_shape, "pc_encode")
    rows = _encode_rows(cfg, info)
    return np.ascontiguousarray(cfg.col_code.encode_batch(rows.T).T)


def extract_info(cfg, frame):
    """
    Bits systématiques : lignes 0..K2 du code colonne x positions d'information du code ligne.
    Args:
        cfg (ProductCodeConfig): configuration.
        frame (np.ndarray): trame (N2, N1).
    Returns:
        np.ndarray: information (K2, K1).
    """
    frame = np.asarray(frame)
    _check_shape(frame, cfg.frame_shape, "extract_info")
    return frame[:cfg.k2][:, cfg.row_code.info_positions].astype(np.uint8)


def update_llrs(llrs, row_bits, col_bits, alpha, clip=CodecConfig.LLR_CLIP):
    """
    Mise à jour additive aux positions en conflit : Lambda(i,j) += alpha * (-1)^b_c(i,j).
    Les positions sans conflit sont laissées strictement inchangées.
    Args:
        llrs (np.ndarray): LLR courants (modifiés sur place).
        row_bits (np.ndarray): décisions du décodeur ligne.
        col_bits (np.ndarray): décisions du décodeur colonne.
        alpha (float): facteur d'échelle.
        clip (float): borne |LLR|.
    Returns:
        np.ndarray: masque booléen des conflits.
    """
    conflicts = row_bits != col_bits
    if np.any(conflicts):
        step = alpha * (1.0 - 2.0 * col_bits[conflicts].astype(np.float64))
        llrs[conflicts] = np.clip(llrs[conflicts] + step, -clip, clip)
    return conflicts


# --- Décodeurs ---
def hshd_decode(cfg, llrs):
    """
    Décodage hybride souple/dur d'une trame Polar-BCH.

    A chaque itération : SCL de toutes les lignes, BDD de toutes les colonnes
    (colonnes en échec inchangées), arrêt si les deux décisions coïncident,
    sinon mise à jour des LLR en conflit. Seules les lignes dont les LLR ont
    changé sont redécodées.
    Args:
        cfg (ProductCodeConfig): configuration à lignes polaires.
        llrs (np.ndarray): LLR canal (N2, N1).
    Returns:
        DecodeReport
    """
    if not cfg.row_is_polar:
        raise WrongRowCodeKindError("HSHD requiert un code ligne polaire")
    llrs = np.asarray(llrs, dtype=np.float64)
    _check_shape(llrs, cfg.frame_shape, "hshd_decode")
    soft = np.clip(llrs, -CodecConfig.LLR_CLIP, CodecConfig.LLR_CLIP)
    row_bits = np.zeros(cfg.frame_shape, dtype=np.uint8)
    stale = np.ones(cfg.n2, dtype=bool)
    conflict_counts = []
    row_decodings = 0
    converged = False
    col_bits = row_bits

    for iteration in range(1, int(cfg.l_max) + 1):
        todo = np.nonzero(stale)[0]
        if todo.size:
            codewords, _, _ = scl_decode_batch(cfg.row_code, soft[todo], cfg.list_size)
            row_bits[todo] = codewords
            row_decodings += int(todo.size)
        decoded_cols, _, _ = cfg.col_code.bdd_decode_batch(row_bits.T)
        col_bits = np.ascontiguousarray(decoded_cols.T)
        conflicts = row_bits != col_bits
        count = int(np.count_nonzero(conflicts))
        conflict_counts.append(count)
        log(f"HSHD: itération {iteration}, {todo.size} lignes décodées, {count} conflits", level="DEEP_DEBUG")
        if count == 0:
            converged = True
            break
        if iteration < cfg.l_max:
            update_llrs(soft, row_bits, col_bits, cfg.alpha)
            stale = conflicts.any(axis=1)

    return DecodeReport(info=extract_info(cfg, col_bits),
                        iterations_used=iteration,
                        converged=converged,
                        conflict_counts=tuple(conflict_counts),
                        frame=col_bits,
                        row_decodings=row_decodings)


def _require_bch_rows(cfg):
    if cfg.row_is_polar:
        raise WrongRowCodeKindError("iBDD/SABM requièrent un code ligne BCH")


def _iterate_bdd(cfg, hard, row_pass, col_pass, label):
    """Ordonnancement commun iBDD/SABM : passe lignes puis passe colonnes jusqu'à l_max ou point fixe."""
    frame = np.asarray(hard, dtype=np.uint8).copy()
    conflict_counts = []
    converged = False
    row_decodings = 0
    for iteration in range(1, int(cfg.l_max) + 1):
        rows_out, rows_ok = row_pass(frame)
        row_decodings += cfg.n2
        cols_out, cols_ok = col_pass(np.ascontiguousarray(rows_out.T))
        new_frame = np.ascontiguousarray(cols_out.T)
        count = int(np.count_nonzero(rows_out != new_frame))
        conflict_counts.append(count)
        changed = bool(np.any(new_frame != frame))
        frame = new_frame
        log(f"{label}: itération {iteration}, {count} bits modifiés par les colonnes", level="DEEP_DEBUG")
        if count == 0 and rows_ok.all() and cols_ok.all():
            converged = True
            break
        if not changed:
            break
    return DecodeReport(info=extract_info(cfg, frame),
                        iterations_used=iteration,
                        converged=converged,
                        conflict_counts=tuple(conflict_counts),
                        frame=frame,
                        row_decodings=row_decodings)


def ibdd_decode(cfg, hard):
    """
    BDD itératif d'une trame BCH-BCH sur décisions dures.
    Args:
        cfg (ProductCodeConfig): configuration à lignes BCH.
        hard (np.ndarray): trame dure (N2, N1).
    Returns:
        DecodeReport
    """
    _require_bch_rows(cfg)
    hard = np.asarray(hard, dtype=np.uint8)
    _check_shape(hard, cfg.frame_shape, "ibdd_decode")

    def row_pass(frame):
        decoded, ok, _ = cfg.row_code.bdd_decode_batch(frame)
        return decoded, ok

    def col_pass(columns):
        decoded, ok, _ = cfg.col_code.bdd_decode_batch(columns)
        return decoded, ok

    return _iterate_bdd(cfg, hard, row_pass, col_pass, "iBDD")


def sabm_bdd(code, word, reliability, hrb_level, lrb_count=CodecConfig.SABM_LRB_COUNT):
    """
    BDD d'une composante avec marquage des bits.

    Un succès qui inverserait un bit très fiable (|LLR| > hrb_level) est rejeté
    (mot inchangé). Un échec déclenche un nouvel essai : les lrb_count bits les
    moins fiables sont inversés un à un, par fiabilité croissante, et le
    premier BDD réussi sans toucher de HRB est retenu.
    Args:
        code (BchCode): code composante.
        word (np.ndarray): mot dur (N,).
        reliability (np.ndarray): |LLR| canal des N bits.
        hrb_level (float): seuil absolu |LLR| des bits très fiables.
        lrb_count (int): nombre de bits peu fiables essayés.
    Returns:
        BddOutcome: positions inversées relatives au mot d'entrée.
    """
    word = np.asarray(word, dtype=np.uint8)
    reliability = np.asarray(reliability, dtype=np.float64)
    highly_reliable = reliability > hrb_level
    outcome = code.bdd_decode(word)
    if outcome.success:
        if any(highly_reliable[p] for p in outcome.flipped_positions):
            return BddOutcome(word.copy(), BddStatus.FAILURE, ())
        return outcome

    for position in np.argsort(reliability, kind="stable")[:max(0, int(lrb_count))]:
        trial = word.copy()
        trial[position] ^= 1
        retry = code.bdd_decode(trial)
        if not retry.success:
            continue
        flips = tuple(sorted(set(retry.flipped_positions) ^ {int(position)}))
        if any(highly_reliable[p] for p in flips):
            continue
        return BddOutcome(retry.word, BddStatus.SUCCESS, flips)
    return BddOutcome(word.copy(), BddStatus.FAILURE, ())


def hrb_marking_level(cfg, reliability):
    """Seuil absolu des HRB : cfg.hrb_threshold x médiane des |LLR| canal (suit l'échelle 1/N0)."""
    return cfg.hrb_threshold * float(np.median(reliability))


def _sabm_pass(code, words, reliability, level, lrb_count):
    """Passe SABM sur toutes les lignes d'une matrice ; les mots à syndrome nul sont laissés tels quels."""
    decoded, ok, _ = code.bdd_decode_batch(words)
    suspicious = np.nonzero(np.any(decoded != words, axis=1) | ~ok)[0]
    for b in suspicious:
        outcome = sabm_bdd(code, words[b], reliability[b], level, lrb_count)
        decoded[b] = outcome.word
        ok[b] = outcome.success
    return decoded, ok


def sabm_decode(cfg, llrs):
    """
    Décodage SABM d'une trame BCH-BCH : ordonnancement iBDD, marquage calculé une
    seule fois à partir des LLR canal.
    Args:
        cfg (ProductCodeConfig): configuration à lignes BCH.
        llrs (np.ndarray): LLR canal (N2, N1).
    Returns:
        DecodeReport
    """
    _require_bch_rows(cfg)
    llrs = np.asarray(llrs, dtype=np.float64)
    _check_shape(llrs, cfg.frame_shape, "sabm_decode")
    reliability = np.abs(llrs)
    reliability_t = np.ascontiguousarray(reliability.T)
    hard = (llrs < 0).astype(np.uint8)
    level = hrb_marking_level(cfg, reliability)
    log(f"SABM: seuil HRB |LLR| > {level:.3f}, {int(np.count_nonzero(reliability > level))} bits marqués",
        level="DEEP_DEBUG")

    def row_pass(frame):
        return _sabm_pass(cfg.row_code, frame, reliability, level, cfg.lrb_count)

    def col_pass(columns):
        return _sabm_pass(cfg.col_code, columns, reliability_t, level, cfg.lrb_count)

    return _iterate_bdd(cfg, hard, row_pass, col_pass, "SABM")


def get_decoder_handlers():
    """
    Table décodeur -> fonction (LLR canal -> DecodeReport).
    Returns:
        dict: {"hshd": ..., "ibdd": ..., "sabm": ...}
    """
    return {
        'hshd': hshd_decode,
        'ibdd': lambda cfg, llrs: ibdd_decode(cfg, (np.asarray(llrs) < 0).astype(np.uint8)),
        'sabm': sabm_decode,
    }


def decode_frame(cfg, decoder, llrs):
    """
    Décode une trame de LLR canal avec le décodeur nommé.
    Raises:
        ConfigInvalidError: si le décodeur est inconnu.
    """
    handler = get_decoder_handlers().get(decoder)
    if handler is None:
        raise ConfigInvalidError(f"Décodeur inconnu: {decoder}")
    return handler(cfg, llrs)
