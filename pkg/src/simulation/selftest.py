# -*- coding: utf-8 -*-
"""
Auto-test des codecs contre des oracles exhaustifs sur petits codes.

Suites :
    galois      : axiomes de corps et multiplication polynomiale de référence
    bch_bdd     : BDD (15,7) et (16,7) contre le mot de code le plus proche
    polar_ml    : SCL N=8, K=4, L=16 contre le maximum de vraisemblance
    round_trip  : encodage puis décodage sans bruit des codes produits
"""
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations, product
import time
import numpy as np
from src.codes import (GaloisField, BchCode, PolarCode, scl_decode_batch, build_polar_bch, build_bch_bch, pc_encode,
                       decode_frame)
from src.utils.system_utils import log

SELFTEST_SEED = 2024
BDD_CODEWORDS = 16
SCL_VECTORS = 10_000
SCL_AGREEMENT = 0.999


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = dataclass_field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self):
        return not self.failures

    def check(self, condition, message):
        self.checks += 1
        if not condition:
            self.failures.append(message)


@dataclass
class SelftestReport:
    suites: list

    @property
    def passed(self):
        return all(suite.passed for suite in self.suites)

    def summary(self):
        lines = []
        for suite in self.suites:
            state = "OK" if suite.passed else "ECHEC"
            lines.append(f"{suite.name:<12} {state:<6} {suite.checks} vérifications, "
                         f"{len(suite.failures)} échecs ({suite.seconds:.2f} s)")
            lines.extend(f"    - {failure}" for failure in suite.failures[:5])
        lines.append("SELFTEST " + ("OK" if self.passed else "ECHEC"))
        return "\n".join(lines)


def corrupt_antilog_entry(gf, index=1):
    """Point d'injection de défaut : inverse le bit de poids faible de alpha^index dans la table."""
    table = gf.antilog_table.copy()
    table[index] ^= 1
    table[index + gf.order] ^= 1
    table.setflags(write=False)
    gf.antilog_table = table


def _reference_mul(a, b, m, poly):
    """Multiplication sans retenue puis réduction, sans table."""
    result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a >> m & 1:
            a ^= poly
    return result


def _galois_suite(fault_injection):
    suite = SuiteResult("galois")
    for m in (3, 4, 8):
        gf = GaloisField(m)
        if fault_injection is not None:
            fault_injection(gf)
        elements = range(1, gf.size)
        for a in range(gf.size):
            suite.check(a == 0 or int(gf.antilog_table[gf.log_table[a]]) == a, f"GF(2^{m}): antilog(log({a})) != {a}")
        for a in elements:
            suite.check(gf.mul(a, gf.inv(a)) == 1, f"GF(2^{m}): {a} * inv({a}) != 1")
        grid = np.arange(gf.size)
        table = gf.mul_array(grid[:, None], grid[None, :])
        for a, b in product(range(gf.size), repeat=2):
            expected = _reference_mul(a, b, m, gf.primitive_poly)
            if table[a, b] != expected or gf.mul(a, b) != expected:
                suite.check(False, f"GF(2^{m}): {a} * {b} = {table[a, b]}, attendu {expected}")
                break
        else:
            suite.check(True, "")
        for a in elements:
            suite.check(gf.power(a, gf.order) == 1, f"GF(2^{m}): {a}^{gf.order} != 1")
        rng = np.random.default_rng(SELFTEST_SEED)
        for a, b, c in rng.integers(0, gf.size, size=(200, 3)):
            a, b, c = int(a), int(b), int(c)
            suite.check(gf.mul(a, gf.mul(b, c)) == gf.mul(gf.mul(a, b), c), f"GF(2^{m}): associativité ({a},{b},{c})")
            suite.check(gf.mul(a, b ^ c) == gf.mul(a, b) ^ gf.mul(a, c), f"GF(2^{m}): distributivité ({a},{b},{c})")
    return suite


def _all_codewords(code):
    infos = np.array(list(product((0, 1), repeat=code.k)), dtype=np.uint8)
    return code.encode_batch(infos)


def _bch_suite():
    suite = SuiteResult("bch_bdd")
    rng = np.random.default_rng(SELFTEST_SEED)
    gf = GaloisField(4)
    for extended in (False, True):
        code = BchCode(gf, 2, extended=extended)
        codebook = _all_codewords(code)
        patterns = [()] + [(i, ) for i in range(code.length)] + list(combinations(range(code.length), 2))
        for index in rng.choice(len(codebook), size=BDD_CODEWORDS, replace=False):
            received = np.repeat(codebook[index][None, :], len(patterns), axis=0)
            for row, pattern in enumerate(patterns):
                received[row, list(pattern)] ^= 1
            decoded, success, _ = code.bdd_decode_batch(received)
            distances = np.count_nonzero(received[:, None, :] != codebook[None, :, :], axis=2)
            nearest = codebook[np.argmin(distances, axis=1)]
            mismatches = int(np.count_nonzero(np.any(decoded != nearest, axis=1) | ~success))
            suite.check(mismatches == 0,
                        f"({code.length},{code.k}): {mismatches} écarts avec le plus proche voisin")
    return suite


def _polar_suite():
    suite = SuiteResult("polar_ml")
    rng = np.random.default_rng(SELFTEST_SEED)
    code = PolarCode(8, 4)
    infos = np.array(list(product((0, 1), repeat=code.k1)), dtype=np.uint8)
    codebook = code.encode(infos)
    suite.check(all(code.is_codeword(word) for word in codebook), "(8,4): mot encodé hors du code")
    suite.check(np.array_equal(codebook[:, code.info_set], infos), "(8,4): encodage non systématique")

    sent = codebook[rng.integers(0, len(codebook), size=SCL_VECTORS)]
    sigma = 0.8
    received = (1.0 - 2.0 * sent) + rng.normal(0.0, sigma, sent.shape)
    llrs = 2.0 * received / sigma ** 2
    decoded, _, _ = scl_decode_batch(code, llrs, 16)
    correlation = llrs @ (1.0 - 2.0 * codebook.T)
    ml = codebook[np.argmax(correlation, axis=1)]
    agreement = float(np.mean(np.all(decoded == ml, axis=1)))
    suite.check(agreement >= SCL_AGREEMENT, f"SCL/ML accord {agreement:.4%} < {SCL_AGREEMENT:.1%}")
    return suite


def _round_trip_suite():
    suite = SuiteResult("round_trip")
    rng = np.random.default_rng(SELFTEST_SEED)
    cases = [
        (build_polar_bch(4, n1=8, m=4), "hshd"),
        (build_bch_bch(m=4), "ibdd"),
        (build_bch_bch(m=4), "sabm"),
        (build_polar_bch(239), "hshd"),
    ]
    for code, decoder in cases:
        info = rng.integers(0, 2, size=code.info_shape, dtype=np.uint8)
        frame = pc_encode(code, info)
        report = decode_frame(code, decoder, 10.0 * (1.0 - 2.0 * frame.astype(np.float64)))
        label = f"{code.describe()} / {decoder}"
        suite.check(np.array_equal(report.info, info), f"{label}: information non restituée")
        suite.check(report.converged and report.iterations_used == 1, f"{label}: non convergé en une itération")
    return suite


def codec_selftest(fault_injection=None):
    """
    Exécute toutes les suites et journalise le résumé.
    Args:
        fault_injection (callable | None): appliqué à chaque GaloisField de la suite galois
            (ex. corrupt_antilog_entry) pour vérifier que la suite détecte l'altération.
    Returns:
        SelftestReport
    """
    runners = [
        lambda: _galois_suite(fault_injection),
        _bch_suite,
        _polar_suite,
        _round_trip_suite,
    ]
    suites = []
    for runner in runners:
        start = time.time()
        suite = runner()
        suite.seconds = time.time() - start
        log(f"Selftest: {suite.name} {'OK' if suite.passed else 'ECHEC'} "
            f"({suite.checks} vérifications, {suite.seconds:.2f} s)", level="INFO" if suite.passed else "ERROR")
        suites.append(suite)
    return SelftestReport(suites)
