# -*- coding: utf-8 -*-
"""
Adaptation de débit : à chaque SNR, plus grand niveau (K1) dont le BER
post-FEC mesuré respecte la cible.
"""
from concurrent.futures import ThreadPoolExecutor
from src.codes import CodecConfig
from src.exceptions import ConfigInvalidError
from src.utils.system_utils import log
from .ber_sweep import FrameSimulator, simulate_point, load_record, open_publisher
from .csv_manager import CSVManager
from .sweep_config import RateRow, RATE_CSV_HEADER


def build_rate_ladder(cfg, k1_range=None):
    """
    Niveaux de débit disponibles, par K1 décroissant.

    Polar-BCH : un niveau par K1 de l'intervalle. BCH-BCH : codes lignes BCH
    étendus t = 1..4 dont la dimension tombe dans l'intervalle.
    Args:
        cfg (SweepConfig): configuration.
        k1_range (tuple | None): (lo, hi) inclus, défaut cfg.k1_range.
    Returns:
        list[tuple]: (k1, ProductCodeConfig)
    Raises:
        ConfigInvalidError: intervalle invalide ou échelle vide.
    """
    lo, hi = k1_range or cfg.k1_range
    if not 1 <= lo <= hi <= CodecConfig.ROW_LENGTH:
        raise ConfigInvalidError(f"k1_range=({lo}, {hi}) invalide")
    if cfg.code_kind == "polar-bch":
        ladder = [(k1, cfg.build_code(k1=k1)) for k1 in range(hi, lo - 1, -1)]
    else:
        ladder = []
        for t in CodecConfig.BCH_LADDER_T:
            code = cfg.build_code(row_t=t)
            if lo <= code.k1 <= hi:
                ladder.append((code.k1, code))
        ladder.sort(key=lambda level: level[0], reverse=True)
    if not ladder:
        raise ConfigInvalidError(f"Aucun niveau de débit {cfg.code_kind} dans k1_range=({lo}, {hi})")
    log(f"RateAdapt: {len(ladder)} niveaux, K1 = {[k1 for k1, _ in ladder]}", level="INFO")
    return ladder


def net_rate(code, cfg):
    """Débit net = rendement x rate_scale x nombre de polarisations."""
    return code.rate * cfg.rate_scale * cfg.polarizations


def run_rate_adapt(cfg, k1_range=None, publisher=None, ladder=None):
    """
    Balayage d'adaptation de débit.

    Les niveaux sont essayés du plus haut au plus bas ; le premier dont le BER
    post-FEC est <= target_ber est retenu. best_k1 est forcé non décroissant
    en SNR (avertissement si une mesure le contredit). best_k1 = 0 et
    net_rate = 0 quand aucun niveau n'atteint la cible.
    Args:
        cfg (SweepConfig): configuration validée.
        k1_range (tuple | None): intervalle (lo, hi), défaut cfg.k1_range.
        publisher (SweepProgressPublisher | None): client d'avancement.
        ladder (list | None): niveaux (k1, code) imposés, défaut build_rate_ladder(cfg, k1_range).
    Returns:
        list[RateRow]
    """
    cfg.validate()
    ladder = sorted(ladder or build_rate_ladder(cfg, k1_range), key=lambda level: level[0], reverse=True)
    record = load_record(cfg)
    simulators = [(k1, code, FrameSimulator(code, cfg.decoder, cfg.seed, cfg.demapper, record))
                  for k1, code in ladder]
    own_publisher = publisher is None
    if own_publisher:
        publisher = open_publisher(cfg, f"{cfg.code_kind}_{cfg.decoder}_rate_s{cfg.seed}")
    if cfg.out:
        CSVManager.create_csv(cfg.out, RATE_CSV_HEADER)
    if publisher:
        publisher.publish_status("started", levels=len(ladder), points=len(cfg.snr_points))

    rows = []
    best = (0, None)
    executor = ThreadPoolExecutor(max_workers=cfg.threads_hint) if cfg.threads_hint > 1 else None
    try:
        for snr_index, es_n0_db in enumerate(cfg.snr_points):
            measured = (0, None)
            for k1, code, simulator in simulators:
                if k1 < best[0]:
                    break
                point = simulate_point(simulator, snr_index, es_n0_db, cfg.max_frames, cfg.min_bit_errors,
                                       executor, chunk=2 * cfg.threads_hint)
                log(f"RateAdapt: Es/N0={es_n0_db:.2f} dB, K1={k1}, BER post={point.post_fec_ber:.3e}",
                    level="DEBUG")
                if point.post_fec_ber <= cfg.target_ber:
                    measured = (k1, code)
                    break
            if measured[0] < best[0]:
                log(f"RateAdapt: Es/N0={es_n0_db:.2f} dB, K1 mesuré {measured[0]} < {best[0]} au point précédent, "
                    f"niveau précédent conservé", level="WARNING")
            else:
                best = measured
            best_k1, code = best
            row = RateRow(es_n0_db=es_n0_db, best_k1=best_k1, net_rate=net_rate(code, cfg) if code else 0.0)
            rows.append(row)
            log(f"RateAdapt: Es/N0={es_n0_db:.2f} dB -> K1={row.best_k1}, débit net={row.net_rate:.3f}",
                level="INFO")
            if cfg.out:
                CSVManager.append_row(cfg.out, row)
            if publisher:
                publisher.publish_point(row)
    finally:
        if executor is not None:
            executor.shutdown(wait=True)
        if publisher:
            publisher.publish_status("finished", points=len(rows))
            if own_publisher:
                publisher.close()

    if rows and rows[-1].best_k1 == 0:
        log(f"RateAdapt: cible {cfg.target_ber:g} jamais atteinte sur la plage SNR", level="WARNING")
    return rows
