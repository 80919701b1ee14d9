# -*- coding: utf-8 -*-
from itertools import product
import pytest
from src.codes import GaloisField, gf_build, gf_mul, gf_inv
from src.exceptions import NonPrimitivePolynomialError, DegreeMismatchError, ZeroInverseError, FecError


def test_gf16_alpha_order(gf16):
    assert gf16.size == 16
    assert gf16.alpha_power(15) == 1
    assert all(gf16.alpha_power(i) != 1 for i in range(1, 15))


def test_gf256_default_polynomial(gf256):
    assert gf256.primitive_poly == 0b100011101
    assert gf256.alpha_power(255) == 1
    assert sorted(int(v) for v in gf256.antilog_table[:255]) == list(range(1, 256))


@pytest.mark.parametrize("a, b, expected", [(2, 1, 2), (8, 2, 3), (2, 3, 6), (5, 0, 0), (0, 7, 0)])
def test_gf16_mul_examples(gf16, a, b, expected):
    assert gf_mul(gf16, a, b) == expected


def test_gf16_inverse_examples(gf16):
    assert gf_inv(gf16, 1) == 1
    assert gf_inv(gf16, 2) == 9


@pytest.mark.parametrize("m", [2, 3, 4, 8])
def test_every_nonzero_element_has_inverse(m):
    gf = gf_build(m)
    for a in range(1, gf.size):
        assert gf.mul(a, gf.inv(a)) == 1
        assert gf.antilog_table[gf.log_table[a]] == a


def test_zero_has_no_inverse(gf16):
    with pytest.raises(ZeroInverseError):
        gf16.inv(0)
    with pytest.raises(ZeroDivisionError):
        gf16.div(3, 0)


def test_field_axioms_exhaustive_gf16(gf16):
    elements = range(gf16.size)
    for a, b in product(elements, repeat=2):
        assert gf16.mul(a, b) == gf16.mul(b, a)
        square = gf16.mul(a ^ b, a ^ b)
        assert square == gf16.mul(a, a) ^ gf16.mul(b, b)
    for a, b, c in product(elements, repeat=3):
        assert gf16.mul(a, gf16.mul(b, c)) == gf16.mul(gf16.mul(a, b), c)
        assert gf16.mul(a, b ^ c) == gf16.mul(a, b) ^ gf16.mul(a, c)


def test_mul_array_matches_scalar(gf16):
    a = [0, 1, 2, 8, 15]
    b = [3, 0, 3, 2, 15]
    assert list(gf16.mul_array(a, b)) == [gf16.mul(x, y) for x, y in zip(a, b)]


def test_power(gf16):
    assert gf16.power(2, 4) == 3
    assert gf16.power(0, 0) == 1
    assert gf16.power(0, 3) == 0


def test_reducible_polynomial_rejected():
    # x^4 + x^2 + 1 = (x^2 + x + 1)^2
    with pytest.raises(NonPrimitivePolynomialError):
        GaloisField(4, 0b10101)


def test_irreducible_non_primitive_polynomial_rejected():
    # x^4 + x^3 + x^2 + x + 1 : alpha d'ordre 5
    with pytest.raises(NonPrimitivePolynomialError):
        GaloisField(4, 0b11111)


def test_degree_mismatch_rejected():
    with pytest.raises(DegreeMismatchError):
        GaloisField(4, 0b100011101)


def test_extension_degree_out_of_range():
    with pytest.raises(FecError):
        GaloisField(17)


def test_tables_are_read_only(gf16):
    with pytest.raises(ValueError):
        gf16.log_table[1] = 3
