# -*- coding: utf-8 -*-
import numpy as np
import pytest
from src.channel import (QAM16, map_16qam, demap_16qam, awgn, make_rng, noise_variance_from_snr, qam16_ber_approx,
                         interleave, deinterleave, Interleaver, NoiseRecord, capture_noise_record, apply_noise_replay,
                         read_noise_record, write_noise_record, NOISE_RECORD_MAGIC)
from src.exceptions import (LengthNotDivisibleBy4Error, NonPositiveVarianceError, DimensionMismatchError,
                            EmptyRecordError, NoiseFileUnreadableError)

SQRT10 = np.sqrt(10.0)


# --- 16QAM ---
def test_map_examples():
    np.testing.assert_allclose(map_16qam([0, 0, 0, 0]), [(-3 - 3j) / SQRT10])
    np.testing.assert_allclose(map_16qam([1, 0, 1, 0]), [(3 + 3j) / SQRT10])
    np.testing.assert_allclose(map_16qam([0, 1, 1, 1]), [(-1 + 1j) / SQRT10])


def test_unit_average_energy():
    assert np.mean(np.abs(QAM16.points) ** 2) == pytest.approx(1.0)


def test_gray_neighbours_differ_by_one_bit():
    labels = QAM16.labels
    for a in range(16):
        for b in range(16):
            if np.isclose(abs(QAM16.points[a] - QAM16.points[b]), 2 / SQRT10):
                assert np.count_nonzero(labels[a] != labels[b]) == 1


def test_map_rejects_bad_length():
    with pytest.raises(LengthNotDivisibleBy4Error):
        map_16qam([0, 1, 1])


def test_demap_at_constellation_points():
    bits = QAM16.labels.ravel()
    for method in ("exact", "maxlog"):
        llrs = demap_16qam(QAM16.points, 0.01, method=method)
        np.testing.assert_array_equal(llrs < 0, bits.astype(bool))


def test_demap_origin_sign_bits_are_zero():
    llrs = demap_16qam([0j], 0.5)
    assert llrs[0] == pytest.approx(0.0, abs=1e-12)
    assert llrs[2] == pytest.approx(0.0, abs=1e-12)


def test_maxlog_close_to_exact_and_converges():
    grid = np.linspace(-1.3, 1.3, 41)
    received = (grid[:, None] + 1j * grid[None, :]).ravel()
    gaps = []
    for n0 in (1.0, 0.1, 0.01):
        exact = demap_16qam(received, n0, "exact")
        approx = demap_16qam(received, n0, "maxlog")
        gap = np.abs(exact - approx)
        assert gap.max() <= np.log(8) + 1e-9
        gaps.append(gap.mean())
    assert gaps[2] < gaps[0]


def test_maxlog_sign_is_min_distance_decision():
    rng = np.random.default_rng(3)
    received = rng.normal(0, 0.6, 2000) + 1j * rng.normal(0, 0.6, 2000)
    llrs = demap_16qam(received, 0.2, "maxlog").reshape(-1, 4)
    nearest = np.argmin(np.abs(received[:, None] - QAM16.points[None, :]), axis=1)
    decided = QAM16.labels[nearest]
    mask = llrs != 0
    np.testing.assert_array_equal((llrs < 0)[mask], decided.astype(bool)[mask])


def test_demap_rejects_non_positive_variance():
    with pytest.raises(NonPositiveVarianceError):
        demap_16qam([0j], 0.0)


# --- AWGN ---
def test_awgn_infinite_snr_is_identity():
    symbols = map_16qam(np.tile([1, 0, 0, 1], 8))
    np.testing.assert_array_equal(awgn(symbols, np.inf, 1), symbols)


def test_awgn_noise_power_and_determinism():
    symbols = np.zeros(1_000_000, dtype=np.complex128)
    noisy = awgn(symbols, 10.0, 42)
    n0 = noise_variance_from_snr(10.0)
    assert n0 == pytest.approx(0.1)
    assert np.mean(np.abs(noisy) ** 2) == pytest.approx(n0, rel=0.01)
    assert np.var(noisy.real) == pytest.approx(n0 / 2, rel=0.01)
    np.testing.assert_array_equal(awgn(symbols[:100], 10.0, 42), noisy[:100])


@pytest.mark.parametrize("short", [1, 7, 333])
def test_awgn_prefix_is_stable_across_lengths(short):
    symbols = map_16qam(np.tile([0, 1, 1, 0], 1000))
    np.testing.assert_array_equal(awgn(symbols[:short], 12.0, 9), awgn(symbols, 12.0, 9)[:short])


def test_make_rng_streams_are_independent():
    a = make_rng(1, 0, 0).integers(0, 1 << 30, 4)
    b = make_rng(1, 0, 1).integers(0, 1 << 30, 4)
    c = make_rng(1, 0, 0).integers(0, 1 << 30, 4)
    assert not np.array_equal(a, b)
    np.testing.assert_array_equal(a, c)


@pytest.mark.parametrize("es_n0_db", [10.0, 12.0, 14.0])
def test_uncoded_ber_matches_gray_approximation(es_n0_db):
    rng = make_rng(7, int(es_n0_db))
    bits = rng.integers(0, 2, 2_000_000, dtype=np.uint8)
    received = awgn(map_16qam(bits), es_n0_db, rng)
    llrs = demap_16qam(received, noise_variance_from_snr(es_n0_db))
    measured = np.count_nonzero((llrs < 0) != bits) / bits.size
    assert measured == pytest.approx(float(qam16_ber_approx(es_n0_db)), rel=0.05)


# --- Entrelaceur ---
def test_interleave_example():
    np.testing.assert_array_equal(interleave([0, 1, 1, 0, 1, 0], 2, 3), [0, 0, 1, 1, 1, 0])


def test_interleave_single_row_is_identity():
    bits = np.arange(7)
    np.testing.assert_array_equal(interleave(bits, 1, 7), bits)


def test_interleaver_is_inverse_permutation(rng):
    block = Interleaver(16, 8)
    index = np.arange(block.size)
    permuted = block.interleave(index)
    assert sorted(permuted) == list(index)
    np.testing.assert_array_equal(block.deinterleave(permuted), index)
    bits = rng.integers(0, 2, block.size)
    np.testing.assert_array_equal(deinterleave(interleave(bits, 16, 8), 16, 8), bits)


def test_interleave_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        interleave(np.zeros(10), 3, 3)


# --- Rejeu de bruit ---
def test_empty_record_rejected():
    with pytest.raises(EmptyRecordError):
        NoiseRecord(np.zeros(0, dtype=np.complex128))


def test_replay_unit_scale_adds_samples_verbatim():
    record = NoiseRecord(np.array([0.1 + 0.2j, -0.3j, 0.05, 0.4 - 0.1j]))
    symbols = np.zeros(6, dtype=np.complex128)
    noisy, offset = apply_noise_replay(symbols, record, record.source_power, offset=2)
    assert offset == 2
    np.testing.assert_allclose(noisy, record.samples[[2, 3, 0, 1, 2, 3]])


def test_replay_rescales_to_target_power(rng):
    record = NoiseRecord(rng.normal(0, 0.3, 1000) + 1j * rng.normal(0, 0.3, 1000))
    noisy, _ = apply_noise_replay(np.zeros(1000, dtype=np.complex128), record, 0.02)
    assert np.mean(np.abs(noisy) ** 2) == pytest.approx(0.02, rel=1e-6)


def test_capture_and_file_round_trip(tmp_path, rng):
    transmitted = map_16qam(rng.integers(0, 2, 400))
    received = awgn(transmitted, 12.0, rng)
    record = capture_noise_record(received, transmitted)
    path = tmp_path / "noise.bin"
    write_noise_record(str(path), record)
    data = path.read_bytes()
    assert data[:8] == NOISE_RECORD_MAGIC
    assert len(data) == 12 + 8 * len(record)
    loaded = read_noise_record(str(path))
    np.testing.assert_allclose(loaded.samples, record.samples, atol=1e-6)


def test_unreadable_noise_files(tmp_path):
    with pytest.raises(NoiseFileUnreadableError):
        read_noise_record(str(tmp_path / "absent.bin"))
    bad_magic = tmp_path / "bad.bin"
    bad_magic.write_bytes(b"NOTNOISE" + (1).to_bytes(4, "little") + bytes(8))
    with pytest.raises(NoiseFileUnreadableError):
        read_noise_record(str(bad_magic))
    truncated = tmp_path / "short.bin"
    truncated.write_bytes(NOISE_RECORD_MAGIC + (10).to_bytes(4, "little") + bytes(8))
    with pytest.raises(NoiseFileUnreadableError):
        read_noise_record(str(truncated))
