# -*- coding: utf-8 -*-
"""
Enregistrements de bruit canal (n = y - x) et rejeu sur des trames simulées.

Format fichier NOISREC1 : 8 octets magiques "NOISREC1", nombre d'échantillons
(uint32 little-endian), puis les paires (I, Q) en float32 little-endian.
"""
from dataclasses import dataclass
import os
import struct
import numpy as np
from src.exceptions import EmptyRecordError, NoiseFileUnreadableError, FecError
from src.utils.system_utils import log

NOISE_RECORD_MAGIC = b"NOISREC1"
_HEADER = struct.Struct("<8sI")
_SAMPLE_DTYPE = np.dtype("<f4")


@dataclass(frozen=True)
class NoiseRecord:
    """Séquence d'échantillons de bruit complexes, non vide et finie."""
    samples: np.ndarray

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.complex128).ravel()
        if samples.size == 0:
            raise EmptyRecordError("Enregistrement de bruit vide")
        if not np.all(np.isfinite(samples)):
            raise FecError("Enregistrement de bruit avec échantillons non finis")
        object.__setattr__(self, "samples", samples)

    @property
    def source_power(self):
        """Puissance moyenne |n|^2 des échantillons stockés."""
        return float(np.mean(np.abs(self.samples) ** 2))

    def __len__(self):
        return self.samples.size


def capture_noise_record(received, transmitted):
    """Bruit observé n = y - x entre signal reçu et signal émis."""
    received = np.asarray(received, dtype=np.complex128).ravel()
    transmitted = np.asarray(transmitted, dtype=np.complex128).ravel()
    if received.shape != transmitted.shape:
        raise FecError(f"Signaux reçu {received.shape} et émis {transmitted.shape} de tailles différentes")
    return NoiseRecord(received - transmitted)


def apply_noise_replay(symbols, record, target_n0, offset=0):
    """
    Ajoute les échantillons de l'enregistrement de façon cyclique à partir de offset,
    remis à l'échelle par sqrt(target_n0 / source_power).
    Args:
        symbols (np.ndarray): trame de symboles.
        record (NoiseRecord): bruit enregistré.
        target_n0 (float): puissance de bruit visée (source_power : échantillons inchangés).
        offset (int): indice de départ dans l'enregistrement.
    Returns:
        tuple: (symboles bruités, offset utilisé)
    """
    if record is None or len(record) == 0:
        raise EmptyRecordError("Enregistrement de bruit vide")
    symbols = np.asarray(symbols, dtype=np.complex128)
    offset = int(offset) % len(record)
    scale = np.sqrt(target_n0 / record.source_power)
    index = (offset + np.arange(symbols.size)) % len(record)
    noise = record.samples[index].reshape(symbols.shape)
    if scale != 1.0:
        noise = noise * scale
    return symbols + noise, offset


def write_noise_record(path, record):
    """
    Ecrit un enregistrement au format NOISREC1.
    Raises:
        OSError: si l'écriture échoue (journalisée).
    """
    payload = np.empty(2 * len(record), dtype=_SAMPLE_DTYPE)
    payload[0::2] = record.samples.real
    payload[1::2] = record.samples.imag
    try:
        with open(path, "wb") as file:
            file.write(_HEADER.pack(NOISE_RECORD_MAGIC, len(record)))
            file.write(payload.tobytes())
        log(f"NoiseRecord: {len(record)} échantillons écrits dans {path}", level="INFO")
    except OSError as e:
        log(f"NoiseRecord: ERREUR - Impossible d'écrire {path}: {e}", level="ERROR")
        raise


def read_noise_record(path):
    """
    Lit un enregistrement NOISREC1.
    Returns:
        NoiseRecord
    Raises:
        NoiseFileUnreadableError: fichier absent, magique incorrect ou contenu tronqué.
        EmptyRecordError: fichier valide mais sans échantillon.
    """
    if not os.path.exists(path):
        log(f"NoiseRecord: Fichier non trouvé: {path}", level="ERROR")
        raise NoiseFileUnreadableError(f"Fichier de bruit introuvable: {path}")
    try:
        with open(path, "rb") as file:
            data = file.read()
    except OSError as e:
        log(f"NoiseRecord: Erreur lecture {path}: {e}", level="ERROR")
        raise NoiseFileUnreadableError(f"Lecture impossible: {path}") from e

    if len(data) < _HEADER.size:
        raise NoiseFileUnreadableError(f"{path}: en-tête tronqué ({len(data)} octets)")
    magic, count = _HEADER.unpack_from(data)
    if magic != NOISE_RECORD_MAGIC:
        raise NoiseFileUnreadableError(f"{path}: magique {magic!r} au lieu de {NOISE_RECORD_MAGIC!r}")
    expected = _HEADER.size + 2 * count * _SAMPLE_DTYPE.itemsize
    if len(data) < expected:
        raise NoiseFileUnreadableError(f"{path}: {len(data)} octets, {expected} attendus pour {count} échantillons")
    payload = np.frombuffer(data, dtype=_SAMPLE_DTYPE, count=2 * count, offset=_HEADER.size)
    samples = payload[0::2].astype(np.float64) + 1j * payload[1::2].astype(np.float64)
    log(f"NoiseRecord: {count} échantillons chargés depuis {path}", level="INFO")
    return NoiseRecord(samples)
