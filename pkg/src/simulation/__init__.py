# -*- coding: utf-8 -*-
"""
Package 'simulation' : harnais d'évaluation Monte Carlo.

Ce package regroupe :
- La configuration des balayages (dataclass, fichier "clé = valeur")
- Le balayage BER et l'adaptation de débit
- L'écriture et la relecture des CSV de résultats
- La publication MQTT optionnelle de l'avancement
- L'auto-test des codecs
"""

from .sweep_config import (SweepConfig, SweepRow, RateRow, CODE_KINDS, DECODERS, SWEEP_CSV_HEADER,
                           RATE_CSV_HEADER)
from .config_manager import SweepConfigManager
from .csv_manager import CSVManager
from .progress_publisher import SweepProgressPublisher
from .ber_sweep import FrameSimulator, FrameResult, simulate_point, run_ber_sweep
from .rate_adapt import build_rate_ladder, run_rate_adapt, net_rate
from .selftest import codec_selftest, corrupt_antilog_entry, SelftestReport, SuiteResult

__all__ = [
    'SweepConfig', 'SweepRow', 'RateRow', 'CODE_KINDS', 'DECODERS', 'SWEEP_CSV_HEADER', 'RATE_CSV_HEADER',
    'SweepConfigManager',
    'CSVManager',
    'SweepProgressPublisher',
    'FrameSimulator', 'FrameResult', 'simulate_point', 'run_ber_sweep',
    'build_rate_ladder', 'run_rate_adapt', 'net_rate',
    'codec_selftest', 'corrupt_antilog_entry', 'SelftestReport', 'SuiteResult',
]
