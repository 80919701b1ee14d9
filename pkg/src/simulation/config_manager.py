# -*- coding: utf-8 -*-
"""
Chargement de la configuration de balayage : fichier texte plat "clé = valeur"
(commentaires #), surchargé par les options de la ligne de commande.
"""
import os
from dataclasses import fields
from src.exceptions import ConfigInvalidError
from src.utils.system_utils import log
from .sweep_config import SweepConfig


def _parse_range(text, parts, cast, key):
    pieces = [p.strip() for p in str(text).split(":")]
    if len(pieces) != parts:
        raise ConfigInvalidError(f"{key}: '{text}' attendu sous la forme {':'.join(['x'] * parts)}")
    try:
        return tuple(cast(p) for p in pieces)
    except ValueError as e:
        raise ConfigInvalidError(f"{key}: valeur invalide '{text}' ({e})") from e


def _optional_str(value):
    value = str(value).strip()
    return value or None


class SweepConfigManager:
    """
    Classe pour gérer la configuration des balayages.
    """
    # Nom de clé (fichier ou option CLI sans tirets) -> champ de SweepConfig
    KEY_ALIASES = {
        "code": "code_kind",
        "lmax": "l_max",
        "min_errors": "min_bit_errors",
        "threads": "threads_hint",
    }
    CASTS = {
        "code_kind": str,
        "decoder": str,
        "k1": int,
        "target_ber": float,
        "max_frames": int,
        "min_bit_errors": int,
        "seed": int,
        "noise_replay": _optional_str,
        "threads_hint": int,
        "rate_scale": float,
        "polarizations": int,
        "alpha": float,
        "l_max": int,
        "list_size": int,
        "row_t": int,
        "col_t": int,
        "demapper": str,
        "hrb_threshold": float,
        "lrb_count": int,
        "out": _optional_str,
        "log_level": str,
        "mqtt_broker": _optional_str,
        "mqtt_port": int,
    }

    @staticmethod
    def normalize_key(key):
        """'--min-errors' / 'min_errors' / 'MIN-ERRORS' -> 'min_bit_errors'."""
        key = str(key).strip().lstrip("-").lower().replace("-", "_")
        return SweepConfigManager.KEY_ALIASES.get(key, key)

    @staticmethod
    def parse_values(raw):
        """
        Convertit un dictionnaire clé brute -> texte en champs typés de SweepConfig.
        Args:
            raw (dict): valeurs textuelles (ou déjà typées).
        Returns:
            dict: champ -> valeur typée.
        Raises:
            ConfigInvalidError: clé inconnue ou valeur non convertible.
        """
        known = {f.name for f in fields(SweepConfig)}
        values = {}
        for raw_key, raw_value in raw.items():
            if raw_value is None:
                continue
            key = SweepConfigManager.normalize_key(raw_key)
            if key == "snr":
                start, stop, step = _parse_range(raw_value, 3, float, key)
                values.update(snr_start=start, snr_stop=stop, snr_step=step)
                continue
            if key == "k1_range":
                values["k1_range"] = raw_value if isinstance(raw_value, tuple) else _parse_range(
                    raw_value, 2, int, key)
                continue
            if key in ("snr_start", "snr_stop", "snr_step"):
                cast = float
            elif key in SweepConfigManager.CASTS:
                cast = SweepConfigManager.CASTS[key]
            elif key in known:
                cast = str
            else:
                raise ConfigInvalidError(f"Clé de configuration inconnue: {raw_key}")
            try:
                values[key] = cast(raw_value)
            except (TypeError, ValueError) as e:
                raise ConfigInvalidError(f"{raw_key}: valeur invalide '{raw_value}' ({e})") from e
        return values

    @staticmethod
    def load_config_file(config_path):
        """
        Lit un fichier "clé = valeur".
        Args:
            config_path (str): chemin du fichier.
        Returns:
            dict: clé brute -> valeur textuelle.
        Raises:
            ConfigInvalidError: fichier introuvable, illisible ou ligne mal formée.
        """
        if not os.path.exists(config_path):
            log(f"Config: Fichier de configuration non trouvé: {config_path}", level="ERROR")
            raise ConfigInvalidError(f"Fichier de configuration introuvable: {config_path}")
        raw = {}
        try:
            with open(config_path, "r", encoding="utf-8") as file:
                for number, line in enumerate(file, start=1):
                    content = line.split("#", 1)[0].strip()
                    if not content:
                        continue
                    if "=" not in content:
                        raise ConfigInvalidError(f"{config_path}:{number}: ligne sans '=': {line.strip()}")
                    key, value = content.split("=", 1)
                    raw[key.strip()] = value.strip()
        except OSError as e:
            log(f"Config: Erreur lecture config ({config_path}): {e}", level="ERROR")
            raise ConfigInvalidError(f"Lecture impossible: {config_path}") from e
        log(f"Config: {len(raw)} clés chargées depuis {config_path}", level="INFO")
        return raw

    @staticmethod
    def build(config_path=None, overrides=None):
        """
        Construit la configuration : défauts < fichier < options CLI.
        Args:
            config_path (str | None): fichier "clé = valeur" optionnel.
            overrides (dict | None): valeurs de la ligne de commande (None = non fournie).
        Returns:
            SweepConfig: configuration validée.
        """
        values = {}
        if config_path:
            values.update(SweepConfigManager.parse_values(SweepConfigManager.load_config_file(config_path)))
        if overrides:
            values.update(SweepConfigManager.parse_values(overrides))
        return SweepConfig(**values).validate()
