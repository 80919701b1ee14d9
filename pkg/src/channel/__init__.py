# -*- coding: utf-8 -*-
"""
Package 'channel' : moitié canal de la chaîne d'évaluation.

Ce package regroupe :
- La modulation 16QAM Gray et le démappage LLR (exact / max-log)
- Le canal AWGN et le rejeu de bruit enregistré (format NOISREC1)
- L'entrelaceur bloc
"""

from .modem import (QAM16, Constellation, map_16qam, demap_16qam, awgn, make_rng, noise_variance_from_snr,
                    qam16_ber_approx)
from .interleaver import Interleaver, interleave, deinterleave
from .noise_record import (NoiseRecord, capture_noise_record, apply_noise_replay, read_noise_record,
                           write_noise_record, NOISE_RECORD_MAGIC)

__all__ = [
    'QAM16', 'Constellation', 'map_16qam', 'demap_16qam', 'awgn', 'make_rng', 'noise_variance_from_snr',
    'qam16_ber_approx',
    'Interleaver', 'interleave', 'deinterleave',
    'NoiseRecord', 'capture_noise_record', 'apply_noise_replay', 'read_noise_record', 'write_noise_record',
    'NOISE_RECORD_MAGIC',
]
