# -*- coding: utf-8 -*-
import numpy as np
import pytest
from src.codes import GaloisField, BchCode, PolarCode, build_polar_bch, build_bch_bch


@pytest.fixture(scope="session")
def gf16():
    return GaloisField(4)


@pytest.fixture(scope="session")
def gf256():
    return GaloisField(8)


@pytest.fixture(scope="session")
def bch_15_7(gf16):
    return BchCode(gf16, 2)


@pytest.fixture(scope="session")
def bch_16_7(gf16):
    return BchCode(gf16, 2, extended=True)


@pytest.fixture(scope="session")
def polar_8_4():
    return PolarCode(8, 4)


@pytest.fixture
def small_polar_bch():
    """(8,4) polaire x (16,7) BCH étendu."""
    return build_polar_bch(4, n1=8, m=4)


@pytest.fixture
def small_bch_bch():
    """(16,7)^2 BCH étendu."""
    return build_bch_bch(m=4)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def noiseless_llrs(frame, magnitude=10.0):
    """LLR de grande amplitude et de signe correct pour une trame ou un mot."""
    return magnitude * (1.0 - 2.0 * np.asarray(frame, dtype=np.float64))
