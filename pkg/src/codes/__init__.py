# -*- coding: utf-8 -*-
"""
Package 'codes' : codes correcteurs et décodeurs.

Ce package regroupe :
- L'arithmétique GF(2^m) (tables log/antilog)
- Les codes BCH binaires et le décodage à distance bornée
- Les codes polaires systématiques et le décodage SCL
- Les codes produits Polar-BCH / BCH-BCH et les décodeurs HSHD, iBDD, SABM
"""

from .codec_config import CodecConfig
from .galois import GaloisField, gf_build, gf_mul, gf_inv
from .bch import BchCode, BddOutcome, BddStatus, bch_build, bch_encode, bdd_decode, build_column_code
from .polar import (PolarCode, SclResult, polar_transform, build_reliability_order, systematic_encode, scl_decode,
                    scl_decode_batch)
from .product import (ProductCodeConfig, DecodeReport, build_polar_bch, build_bch_bch, pc_encode, extract_info,
                      update_llrs, hshd_decode, ibdd_decode, sabm_decode, sabm_bdd, hrb_marking_level, decode_frame,
                      get_decoder_handlers)

__all__ = [
    'CodecConfig',
    'GaloisField', 'gf_build', 'gf_mul', 'gf_inv',
    'BchCode', 'BddOutcome', 'BddStatus', 'bch_build', 'bch_encode', 'bdd_decode', 'build_column_code',
    'PolarCode', 'SclResult', 'polar_transform', 'build_reliability_order', 'systematic_encode', 'scl_decode',
    'scl_decode_batch',
    'ProductCodeConfig', 'DecodeReport', 'build_polar_bch', 'build_bch_bch', 'pc_encode', 'extract_info',
    'update_llrs', 'hshd_decode', 'ibdd_decode', 'sabm_decode', 'sabm_bdd', 'hrb_marking_level', 'decode_frame',
    'get_decoder_handlers',
]
