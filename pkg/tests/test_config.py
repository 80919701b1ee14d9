# -*- coding: utf-8 -*-
import pytest
from src.exceptions import ConfigInvalidError, FecError
from src.simulation import (SweepConfig, SweepConfigManager, CSVManager, SweepRow, RateRow, SWEEP_CSV_HEADER,
                            RATE_CSV_HEADER)

CONFIG_TEXT = """
# Balayage de référence
code = bch-bch
decoder = sabm
snr = 7.5:9.0:0.5     # dB
min-errors = 50
max_frames = 300
k1-range = 229:240
seed = 11
threads = 2
hrb_threshold = 8.5
noise-replay =
"""


def test_defaults_are_valid():
    cfg = SweepConfig(threads_hint=1).validate()
    assert cfg.alpha == 3.0
    assert cfg.l_max == 10
    assert cfg.list_size == 8
    assert cfg.min_bit_errors == 100
    assert cfg.rate_scale == 100.0
    assert cfg.noise_source == "awgn"
    assert cfg.snr_points == [13.0, 13.5, 14.0, 14.5, 15.0]
    assert cfg.hrb_threshold == 2.0


def test_snr_points_include_stop():
    cfg = SweepConfig(snr_start=8.0, snr_stop=9.0, snr_step=0.25)
    assert cfg.snr_points == [8.0, 8.25, 8.5, 8.75, 9.0]
    assert SweepConfig(snr_start=1.0, snr_stop=1.0, snr_step=0.5).snr_points == [1.0]


@pytest.mark.parametrize("changes", [
    dict(snr_step=0.0),
    dict(snr_start=5.0, snr_stop=4.0),
    dict(min_bit_errors=0),
    dict(k1=0),
    dict(k1=257),
    dict(code_kind="ldpc"),
    dict(code_kind="bch-bch", decoder="hshd"),
    dict(decoder="ibdd"),
    dict(polarizations=3),
    dict(demapper="approx"),
    dict(k1_range=(240, 229)),
    dict(target_ber=0.0),
    dict(hrb_threshold=0.0),
    dict(lrb_count=-1),
])
def test_invalid_configs(changes):
    with pytest.raises(ConfigInvalidError):
        SweepConfig(threads_hint=1, **changes).validate()


def test_load_file_and_cli_override(tmp_path):
    path = tmp_path / "sweep.conf"
    path.write_text(CONFIG_TEXT, encoding="utf-8")
    cfg = SweepConfigManager.build(str(path), {"seed": 99, "max_frames": None, "--target-ber": "1e-5"})
    assert cfg.code_kind == "bch-bch"
    assert cfg.decoder == "sabm"
    assert (cfg.snr_start, cfg.snr_stop, cfg.snr_step) == (7.5, 9.0, 0.5)
    assert cfg.min_bit_errors == 50
    assert cfg.max_frames == 300
    assert cfg.k1_range == (229, 240)
    assert cfg.threads_hint == 2
    assert cfg.hrb_threshold == 8.5
    assert cfg.noise_replay is None
    assert cfg.seed == 99
    assert cfg.target_ber == 1e-5


def test_normalize_key():
    assert SweepConfigManager.normalize_key("--min-errors") == "min_bit_errors"
    assert SweepConfigManager.normalize_key("LMAX") == "l_max"
    assert SweepConfigManager.normalize_key("list-size") == "list_size"


def test_unknown_key_rejected():
    with pytest.raises(ConfigInvalidError):
        SweepConfigManager.parse_values({"turbo": "1"})


def test_bad_values_rejected():
    with pytest.raises(ConfigInvalidError):
        SweepConfigManager.parse_values({"k1": "deux-cent"})
    with pytest.raises(ConfigInvalidError):
        SweepConfigManager.parse_values({"snr": "1:2"})


def test_missing_or_malformed_file(tmp_path):
    with pytest.raises(ConfigInvalidError):
        SweepConfigManager.build(str(tmp_path / "absent.conf"))
    path = tmp_path / "bad.conf"
    path.write_text("seed 4\n", encoding="utf-8")
    with pytest.raises(ConfigInvalidError):
        SweepConfigManager.build(str(path))


def test_csv_round_trip(tmp_path):
    path = str(tmp_path / "out" / "sweep.csv")
    rows = [SweepRow(8.0, 120, 0.0123, 4.5e-5, 2.5, 0.99), SweepRow(8.5, 400, 0.0081, 0.0, 1.25, 1.0)]
    CSVManager.create_csv(path, SWEEP_CSV_HEADER)
    for row in rows:
        CSVManager.append_row(path, row)
    with open(path, encoding="utf-8") as file:
        assert file.readline().strip() == "es_n0_db,frames,pre_fec_ber,post_fec_ber,avg_iterations,converged_fraction"
    assert CSVManager.read_sweep_csv(path) == rows


def test_rate_csv_round_trip(tmp_path):
    path = str(tmp_path / "rate.csv")
    rows = [RateRow(9.0, 0, 0.0), RateRow(10.0, 235, 83.5)]
    CSVManager.create_csv(path, RATE_CSV_HEADER)
    for row in rows:
        CSVManager.append_row(path, row)
    assert CSVManager.read_rate_csv(path) == rows


def test_csv_header_mismatch(tmp_path):
    path = str(tmp_path / "rate.csv")
    CSVManager.create_csv(path, RATE_CSV_HEADER)
    with pytest.raises(FecError):
        CSVManager.read_sweep_csv(path)
