# -*- coding: utf-8 -*-
"""
Configuration d'un balayage Monte Carlo et lignes de résultats.
"""
from dataclasses import dataclass, field as dataclass_field
import numpy as np
from src.codes.codec_config import CodecConfig
from src.codes.product import build_polar_bch, build_bch_bch
from src.exceptions import ConfigInvalidError
from src.utils.system_utils import default_thread_count, LOG_LEVELS

CODE_KINDS = ("polar-bch", "bch-bch")
DECODERS = ("hshd", "ibdd", "sabm")
DECODERS_BY_CODE = {"polar-bch": ("hshd", ), "bch-bch": ("ibdd", "sabm")}
SWEEP_CSV_HEADER = ["es_n0_db", "frames", "pre_fec_ber", "post_fec_ber", "avg_iterations", "converged_fraction"]
RATE_CSV_HEADER = ["es_n0_db", "best_k1", "net_rate"]


@dataclass
class SweepConfig:
    """
    Paramètres d'un balayage BER ou d'une adaptation de débit.

    Les noms de champs sont ceux des clés du fichier de configuration
    (voir SweepConfigManager.KEY_ALIASES pour les noms d'options CLI).
    """
    code_kind: str = "polar-bch"
    decoder: str = "hshd"
    k1: int = CodecConfig.DEFAULT_K1
    k1_range: tuple = (229, 240)
    snr_start: float = 13.0
    snr_stop: float = 15.0
    snr_step: float = 0.5
    target_ber: float = 1e-4
    max_frames: int = 1000
    min_bit_errors: int = 100
    seed: int = 1
    noise_replay: str = None
    threads_hint: int = dataclass_field(default_factory=default_thread_count)
    rate_scale: float = CodecConfig.DEFAULT_RATE_SCALE
    polarizations: int = 1
    alpha: float = CodecConfig.DEFAULT_ALPHA
    l_max: int = CodecConfig.DEFAULT_L_MAX
    list_size: int = CodecConfig.DEFAULT_LIST_SIZE
    row_t: int = CodecConfig.COLUMN_T
    col_t: int = CodecConfig.COLUMN_T
    demapper: str = "exact"
    hrb_threshold: float = CodecConfig.SABM_HRB_THRESHOLD
    lrb_count: int = CodecConfig.SABM_LRB_COUNT
    out: str = None
    log_level: str = "INFO"
    mqtt_broker: str = None
    mqtt_port: int = 1883

    @property
    def noise_source(self):
        """'awgn' ou 'replay'."""
        return "replay" if self.noise_replay else "awgn"

    @property
    def snr_points(self):
        """Points Es/N0 (dB) de snr_start à snr_stop inclus, arrondis au µdB."""
        count = int(np.floor((self.snr_stop - self.snr_start) / self.snr_step + 1e-9)) + 1
        return [round(self.snr_start + i * self.snr_step, 6) for i in range(max(count, 0))]

    def validate(self):
        """
        Vérifie la cohérence de la configuration.
        Returns:
            SweepConfig: self, pour chaînage.
        Raises:
            ConfigInvalidError: au premier paramètre invalide.
        """
        if self.code_kind not in CODE_KINDS:
            raise ConfigInvalidError(f"code={self.code_kind}, attendu un de {CODE_KINDS}")
        if self.decoder not in DECODERS_BY_CODE[self.code_kind]:
            raise ConfigInvalidError(f"Décodeur {self.decoder} incompatible avec {self.code_kind} "
                                     f"(attendu {DECODERS_BY_CODE[self.code_kind]})")
        if not self.snr_step > 0:
            raise ConfigInvalidError(f"snr_step={self.snr_step} doit être > 0")
        if self.snr_stop < self.snr_start:
            raise ConfigInvalidError(f"snr_stop={self.snr_stop} < snr_start={self.snr_start}")
        if self.min_bit_errors < 1:
            raise ConfigInvalidError(f"min_bit_errors={self.min_bit_errors} doit être >= 1")
        if self.max_frames < 1:
            raise ConfigInvalidError(f"max_frames={self.max_frames} doit être >= 1")
        if not 0 < self.target_ber < 1:
            raise ConfigInvalidError(f"target_ber={self.target_ber} hors de ]0, 1[")
        if self.code_kind == "polar-bch" and not 1 <= self.k1 <= CodecConfig.ROW_LENGTH:
            raise ConfigInvalidError(f"k1={self.k1} hors de [1, {CodecConfig.ROW_LENGTH}]")
        lo, hi = self.k1_range
        if not 1 <= lo <= hi <= CodecConfig.ROW_LENGTH:
            raise ConfigInvalidError(f"k1_range={self.k1_range} invalide")
        if not self.alpha > 0 or self.l_max < 1 or self.list_size < 1:
            raise ConfigInvalidError(f"alpha={self.alpha}, l_max={self.l_max}, list_size={self.list_size} invalides")
        if self.threads_hint < 1:
            raise ConfigInvalidError(f"threads={self.threads_hint} doit être >= 1")
        if self.polarizations not in (1, 2):
            raise ConfigInvalidError(f"polarizations={self.polarizations}, attendu 1 ou 2")
        if self.demapper not in ("exact", "maxlog"):
            raise ConfigInvalidError(f"demapper={self.demapper}, attendu exact ou maxlog")
        if not self.rate_scale > 0:
            raise ConfigInvalidError(f"rate_scale={self.rate_scale} doit être > 0")
        if not self.hrb_threshold > 0 or self.lrb_count < 0:
            raise ConfigInvalidError(f"hrb_threshold={self.hrb_threshold}, lrb_count={self.lrb_count} invalides")
        if self.log_level.upper() not in LOG_LEVELS:
            raise ConfigInvalidError(f"log_level={self.log_level} inconnu")
        return self

    def decoder_options(self):
        return dict(alpha=self.alpha, l_max=self.l_max, list_size=self.list_size,
                    hrb_threshold=self.hrb_threshold, lrb_count=self.lrb_count)

    def build_code(self, k1=None, row_t=None):
        """
        Code produit décrit par la configuration.
        Args:
            k1 (int | None): dimension polaire (polar-bch), défaut self.k1.
            row_t (int | None): rayon du code ligne (bch-bch), défaut self.row_t.
        Returns:
            ProductCodeConfig
        """
        if self.code_kind == "polar-bch":
            return build_polar_bch(k1 if k1 is not None else self.k1, col_t=self.col_t, **self.decoder_options())
        return build_bch_bch(row_t=row_t if row_t is not None else self.row_t, col_t=self.col_t,
                             **self.decoder_options())


@dataclass(frozen=True)
class SweepRow:
    """Résultat d'un point SNR."""
    es_n0_db: float
    frames: int
    pre_fec_ber: float
    post_fec_ber: float
    avg_iterations: float
    converged_fraction: float

    def as_csv_row(self):
        return [f"{self.es_n0_db:.6g}", str(self.frames), f"{self.pre_fec_ber:.10g}", f"{self.post_fec_ber:.10g}",
                f"{self.avg_iterations:.6g}", f"{self.converged_fraction:.6g}"]


@dataclass(frozen=True)
class RateRow:
    """Niveau de débit retenu à un point SNR (best_k1 = 0 : aucun niveau atteint)."""
    es_n0_db: float
    best_k1: int
    net_rate: float

    def as_csv_row(self):
        return [f"{self.es_n0_db:.6g}", str(self.best_k1), f"{self.net_rate:.10g}"]
