# -*- coding: utf-8 -*-
import numpy as np
import pytest
from src.codes import (ProductCodeConfig, build_polar_bch, build_bch_bch, pc_encode, extract_info, update_llrs,
                       hshd_decode, ibdd_decode, sabm_decode, sabm_bdd, hrb_marking_level, decode_frame,
                       get_decoder_handlers, BddStatus)
from src.exceptions import ConfigInvalidError, DimensionMismatchError, WrongRowCodeKindError
from tests.conftest import noiseless_llrs


# --- Encodage ---
def test_rates():
    assert build_polar_bch(239).rate == pytest.approx(239 ** 2 / 256 ** 2)
    assert build_polar_bch(239).rate == pytest.approx(0.8716, abs=1e-4)
    assert build_bch_bch(row_t=4, col_t=4).rate == pytest.approx(0.7588, abs=1e-4)
    code = build_polar_bch(223, col_t=4)
    assert (code.n1, code.k1, code.n2, code.k2) == (256, 223, 256, 223)


def test_zero_info_gives_zero_frame(small_polar_bch):
    assert not pc_encode(small_polar_bch, np.zeros(small_polar_bch.info_shape, dtype=np.uint8)).any()
    assert not extract_info(small_polar_bch, np.zeros(small_polar_bch.frame_shape, dtype=np.uint8)).any()


@pytest.mark.parametrize("fixture", ["small_polar_bch", "small_bch_bch"])
def test_rows_and_columns_are_codewords(fixture, request, rng):
    cfg = request.getfixturevalue(fixture)
    info = rng.integers(0, 2, cfg.info_shape, dtype=np.uint8)
    frame = pc_encode(cfg, info)
    assert frame.shape == cfg.frame_shape
    assert all(cfg.row_code.is_codeword(row) for row in frame)
    assert all(cfg.col_code.is_codeword(col) for col in frame.T)
    np.testing.assert_array_equal(extract_info(cfg, frame), info)


def test_encode_dimension_mismatch(small_polar_bch):
    with pytest.raises(DimensionMismatchError):
        pc_encode(small_polar_bch, np.zeros((3, 3), dtype=np.uint8))
    with pytest.raises(DimensionMismatchError):
        extract_info(small_polar_bch, np.zeros((8, 16), dtype=np.uint8))


def test_invalid_config(small_polar_bch):
    with pytest.raises(ConfigInvalidError):
        ProductCodeConfig(small_polar_bch.row_code, small_polar_bch.col_code, alpha=0)
    with pytest.raises(ConfigInvalidError):
        ProductCodeConfig(small_polar_bch.row_code, small_polar_bch.col_code, l_max=0)
    with pytest.raises(ConfigInvalidError):
        ProductCodeConfig(small_polar_bch.row_code, small_polar_bch.row_code)
    with pytest.raises(ConfigInvalidError):
        ProductCodeConfig(small_polar_bch.row_code, small_polar_bch.col_code, hrb_threshold=0.0)


# --- Mise à jour des LLR ---
def test_update_llrs_single_step():
    llrs = np.array([[1.0, 1.0, 0.5]])
    row_bits = np.array([[0, 1, 1]], dtype=np.uint8)
    col_bits = np.array([[1, 0, 1]], dtype=np.uint8)
    conflicts = update_llrs(llrs, row_bits, col_bits, alpha=3.0)
    np.testing.assert_array_equal(conflicts, [[True, True, False]])
    np.testing.assert_array_equal(llrs, [[-2.0, 4.0, 0.5]])


def test_update_llrs_clips():
    llrs = np.array([49.0])
    update_llrs(llrs, np.array([1], dtype=np.uint8), np.array([0], dtype=np.uint8), alpha=3.0)
    assert llrs[0] == 50.0


# --- HSHD ---
@pytest.mark.parametrize("k1", range(229, 241))
def test_hshd_round_trip_full_size(k1, rng):
    cfg = build_polar_bch(k1)
    info = rng.integers(0, 2, cfg.info_shape, dtype=np.uint8)
    report = hshd_decode(cfg, noiseless_llrs(pc_encode(cfg, info)))
    np.testing.assert_array_equal(report.info, info)
    assert report.converged
    assert report.iterations_used == 1
    assert report.conflict_counts == (0, )


def test_hshd_resolves_row_error_through_columns(small_polar_bch):
    cfg = small_polar_bch
    llrs = np.full(cfg.frame_shape, 2.0)
    llrs[0, :3] = -2.0
    report = hshd_decode(cfg, llrs)
    assert report.converged
    assert report.iterations_used == 2
    assert report.conflict_counts == (4, 0)
    assert report.row_decodings == cfg.n2 + 1
    assert not report.frame.any()
    assert not report.info.any()


def test_hshd_stops_at_l_max(small_polar_bch, rng):
    cfg = ProductCodeConfig(small_polar_bch.row_code, small_polar_bch.col_code, l_max=2)
    llrs = rng.normal(0.0, 1.0, cfg.frame_shape)
    report = hshd_decode(cfg, llrs)
    assert report.iterations_used <= 2
    assert len(report.conflict_counts) == report.iterations_used
    if report.converged:
        assert report.conflict_counts[-1] == 0
    else:
        assert report.conflict_counts[-1] > 0


def test_hshd_deterministic(small_polar_bch, rng):
    llrs = rng.normal(1.0, 2.0, small_polar_bch.frame_shape)
    first = hshd_decode(small_polar_bch, llrs)
    second = hshd_decode(small_polar_bch, llrs.copy())
    np.testing.assert_array_equal(first.frame, second.frame)
    assert first.conflict_counts == second.conflict_counts


def test_hshd_requires_polar_rows(small_bch_bch):
    with pytest.raises(WrongRowCodeKindError):
        hshd_decode(small_bch_bch, np.zeros(small_bch_bch.frame_shape))


def test_hshd_corrects_three_by_three_block_where_ibdd_stalls(small_bch_bch):
    # Lignes (8,4) décodées au sens ML (liste exhaustive de 16 chemins)
    cfg = build_polar_bch(4, n1=8, m=4, list_size=16)
    llrs = np.full(cfg.frame_shape, 4.0)
    llrs[:3, :3] = -0.5
    report = hshd_decode(cfg, llrs)
    assert report.converged
    assert report.iterations_used == 1
    assert not report.frame.any()

    received = np.zeros(small_bch_bch.frame_shape, dtype=np.uint8)
    received[:3, :3] = 1
    stalled = ibdd_decode(small_bch_bch, received)
    assert not stalled.converged
    assert stalled.frame[:3, :3].all()


# --- iBDD ---
def test_ibdd_noiseless(small_bch_bch, rng):
    info = rng.integers(0, 2, small_bch_bch.info_shape, dtype=np.uint8)
    report = ibdd_decode(small_bch_bch, pc_encode(small_bch_bch, info))
    assert report.converged
    assert report.iterations_used == 1
    np.testing.assert_array_equal(report.info, info)


def test_ibdd_single_error(small_bch_bch, rng):
    info = rng.integers(0, 2, small_bch_bch.info_shape, dtype=np.uint8)
    frame = pc_encode(small_bch_bch, info)
    received = frame.copy()
    received[4, 11] ^= 1
    report = ibdd_decode(small_bch_bch, received)
    assert report.converged
    np.testing.assert_array_equal(report.frame, frame)


def test_ibdd_stalls_on_three_by_three_block(small_bch_bch):
    received = np.zeros(small_bch_bch.frame_shape, dtype=np.uint8)
    received[:3, :3] = 1
    report = ibdd_decode(small_bch_bch, received)
    assert not report.converged
    assert report.iterations_used == 1
    np.testing.assert_array_equal(report.frame, received)
    assert report.info.any()


def test_ibdd_requires_bch_rows(small_polar_bch):
    with pytest.raises(WrongRowCodeKindError):
        ibdd_decode(small_polar_bch, np.zeros(small_polar_bch.frame_shape, dtype=np.uint8))


# --- SABM ---
def test_sabm_rejects_miscorrection_on_reliable_bit(bch_15_7):
    other = bch_15_7.encode(np.array([0, 0, 0, 0, 0, 0, 1], dtype=np.uint8))
    assert list(np.nonzero(other)[0]) == [6, 7, 8, 10, 14]
    received = np.zeros(15, dtype=np.uint8)
    received[[6, 7, 8]] = 1
    plain = bch_15_7.bdd_decode(received)
    assert plain.success and plain.flipped_positions == (10, 14)
    np.testing.assert_array_equal(plain.word, other)

    reliability = np.ones(15)
    reliability[10] = 20.0
    outcome = sabm_bdd(bch_15_7, received, reliability, hrb_level=10.0, lrb_count=2)
    assert outcome.status is BddStatus.FAILURE
    np.testing.assert_array_equal(outcome.word, received)


def test_sabm_lrb_flip_rescues_three_errors(bch_16_7):
    received = np.zeros(16, dtype=np.uint8)
    received[[0, 5, 9]] = 1
    assert not bch_16_7.bdd_decode(received).success
    reliability = np.full(16, 5.0)
    reliability[5] = 0.1
    outcome = sabm_bdd(bch_16_7, received, reliability, hrb_level=10.0, lrb_count=2)
    assert outcome.success
    assert outcome.flipped_positions == (0, 5, 9)
    assert not outcome.word.any()


def test_sabm_noiseless_matches_ibdd(small_bch_bch, rng):
    info = rng.integers(0, 2, small_bch_bch.info_shape, dtype=np.uint8)
    frame = pc_encode(small_bch_bch, info)
    sabm = sabm_decode(small_bch_bch, noiseless_llrs(frame))
    ibdd = ibdd_decode(small_bch_bch, frame)
    assert sabm.converged and ibdd.converged
    np.testing.assert_array_equal(sabm.frame, ibdd.frame)
    np.testing.assert_array_equal(sabm.info, info)


def test_hrb_marking_level_follows_median():
    cfg = build_bch_bch(m=4, hrb_threshold=2.0)
    reliability = np.array([1.0, 1.0, 1.0, 4.0])
    assert hrb_marking_level(cfg, reliability) == pytest.approx(2.0)
    assert hrb_marking_level(cfg, 25.0 * reliability) == pytest.approx(50.0)


@pytest.mark.parametrize("scale", [1.0, 40.0])
def test_sabm_decision_invariant_to_llr_scale(small_bch_bch, scale):
    llrs = np.ones(small_bch_bch.frame_shape)
    llrs[3, [5, 9]] = -0.5
    report = sabm_decode(small_bch_bch, scale * llrs)
    assert report.converged
    assert not report.frame.any()


# --- Table des décodeurs ---
def test_decoder_handlers():
    assert set(get_decoder_handlers()) == {"hshd", "ibdd", "sabm"}


def test_decode_frame_by_name(small_bch_bch):
    llrs = np.full(small_bch_bch.frame_shape, 3.0)
    llrs[2, 2] = -3.0
    report = decode_frame(small_bch_bch, "ibdd", llrs)
    assert report.converged
    assert not report.frame.any()
    with pytest.raises(ConfigInvalidError):
        decode_frame(small_bch_bch, "turbo", llrs)
