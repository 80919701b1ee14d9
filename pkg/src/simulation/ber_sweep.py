# -*- coding: utf-8 -*-
"""
Balayage Monte Carlo du BER post-FEC.

Chaîne par trame : information aléatoire -> encodage produit -> entrelacement
N2 x N1 -> 16QAM -> bruit (AWGN ou rejeu) -> démappage -> désentrelacement
-> décodage -> comptage des erreurs.

Chaque trame tire ses aléas du sous-flux (seed, indice SNR, indice de trame) ;
la règle d'arrêt est évaluée dans l'ordre des indices de trame, ce qui rend le
résultat indépendant du nombre de threads.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import time
import numpy as np
from src.channel import (Interleaver, map_16qam, demap_16qam, awgn, apply_noise_replay,
                         noise_variance_from_snr, make_rng, read_noise_record)
from src.codes import CodecConfig, pc_encode, decode_frame
from src.utils.system_utils import log, available_memory_mb
from .csv_manager import CSVManager
from .progress_publisher import SweepProgressPublisher
from .sweep_config import SweepRow, SWEEP_CSV_HEADER


@dataclass(frozen=True)
class FrameResult:
    """Compteurs d'une trame simulée."""
    frame_index: int
    coded_bit_errors: int
    info_bit_errors: int
    iterations: int
    converged: bool
    row_decodings: int = 0
    noise_offset: int = None


class FrameSimulator:
    """
    Simule des trames d'un code produit sur le canal 16QAM.
    Args:
        code (ProductCodeConfig): code et paramètres de décodage.
        decoder (str): 'hshd', 'ibdd' ou 'sabm'.
        seed (int): graine racine.
        demapper (str): 'exact' ou 'maxlog'.
        record (NoiseRecord | None): bruit à rejouer au lieu de l'AWGN.
    """

    def __init__(self, code, decoder, seed, demapper="exact", record=None):
        self.code = code
        self.decoder = decoder
        self.seed = int(seed)
        self.demapper = demapper
        self.record = record
        self.interleaver = Interleaver(code.n2, code.n1)

    @property
    def info_bits_per_frame(self):
        return self.code.k1 * self.code.k2

    @property
    def coded_bits_per_frame(self):
        return self.code.n1 * self.code.n2

    def add_noise(self, symbols, es_n0_db, rng):
        """
        Bruite une trame : AWGN, ou rejeu à partir d'un offset tiré dans le flux de la trame.
        Returns:
            tuple: (symboles bruités, offset de rejeu ou None pour l'AWGN)
        """
        if self.record is None:
            return awgn(symbols, es_n0_db, rng), None
        noisy, offset = apply_noise_replay(symbols, self.record, noise_variance_from_snr(es_n0_db),
                                           int(rng.integers(len(self.record))))
        log(f"Sweep: rejeu de bruit à l'offset {offset}/{len(self.record)}", level="DEEP_DEBUG")
        return noisy, offset

    def simulate(self, snr_index, es_n0_db, frame_index):
        """
        Simule une trame.
        Returns:
            FrameResult
        """
        code = self.code
        rng = make_rng(self.seed, snr_index, frame_index)
        info = rng.integers(0, 2, size=code.info_shape, dtype=np.uint8)
        frame = pc_encode(code, info)
        bits = self.interleaver.interleave(frame)
        received, offset = self.add_noise(map_16qam(bits), es_n0_db, rng)

        n0 = max(noise_variance_from_snr(es_n0_db), CodecConfig.DEMAP_N0_FLOOR)
        llrs = demap_16qam(received, n0, method=self.demapper)
        llrs = self.interleaver.deinterleave(llrs).reshape(code.frame_shape)

        report = decode_frame(code, self.decoder, llrs)
        return FrameResult(frame_index=frame_index,
                           coded_bit_errors=int(np.count_nonzero((llrs < 0) != frame.astype(bool))),
                           info_bit_errors=int(np.count_nonzero(report.info != info)),
                           iterations=int(report.iterations_used),
                           converged=bool(report.converged),
                           row_decodings=int(report.row_decodings),
                           noise_offset=offset)


def simulate_point(simulator, snr_index, es_n0_db, max_frames, min_bit_errors, executor=None, chunk=1):
    """
    Simule un point SNR jusqu'à min_bit_errors erreurs post-FEC ou max_frames trames.
    Args:
        simulator (FrameSimulator): simulateur.
        snr_index (int): indice du point (sous-flux aléatoire).
        es_n0_db (float): Es/N0 en dB.
        max_frames (int): nombre maximal de trames.
        min_bit_errors (int): erreurs post-FEC déclenchant l'arrêt.
        executor (ThreadPoolExecutor | None): pool de threads, exécution séquentielle si None.
        chunk (int): nombre de trames soumises par lot.
    Returns:
        SweepRow
    """
    frames = coded_errors = info_errors = iterations = converged = row_decodings = 0
    next_frame = 0
    done = False
    while not done and next_frame < max_frames:
        batch = range(next_frame, min(next_frame + max(1, chunk), max_frames))
        next_frame = batch.stop
        if executor is None:
            results = (simulator.simulate(snr_index, es_n0_db, f) for f in batch)
        else:
            results = executor.map(lambda f: simulator.simulate(snr_index, es_n0_db, f), batch)
        # Les trames au-delà de la règle d'arrêt sont ignorées
        for result in results:
            frames += 1
            coded_errors += result.coded_bit_errors
            info_errors += result.info_bit_errors
            iterations += result.iterations
            converged += int(result.converged)
            row_decodings += result.row_decodings
            if info_errors >= min_bit_errors:
                done = True
                break

    log(f"Sweep: Es/N0={es_n0_db:.2f} dB, {row_decodings / frames:.1f} décodages de lignes par trame", level="DEBUG")
    return SweepRow(es_n0_db=es_n0_db,
                    frames=frames,
                    pre_fec_ber=coded_errors / (frames * simulator.coded_bits_per_frame),
                    post_fec_ber=info_errors / (frames * simulator.info_bits_per_frame),
                    avg_iterations=iterations / frames,
                    converged_fraction=converged / frames)


def load_record(cfg):
    """Enregistrement de bruit de la configuration, None pour l'AWGN."""
    if cfg.noise_source != "replay":
        return None
    return read_noise_record(cfg.noise_replay)


def open_publisher(cfg, run_id):
    """Client MQTT d'avancement si un broker est configuré, sinon None."""
    if not cfg.mqtt_broker:
        return None
    publisher = SweepProgressPublisher(cfg.mqtt_broker, cfg.mqtt_port, run_id)
    return publisher if publisher.connect() else None


def run_ber_sweep(cfg, code=None, publisher=None):
    """
    Balayage BER sur tous les points SNR de la configuration.
    Args:
        cfg (SweepConfig): configuration validée.
        code (ProductCodeConfig | None): code à simuler, défaut cfg.build_code().
        publisher (SweepProgressPublisher | None): client d'avancement, ouvert depuis cfg si None.
    Returns:
        list[SweepRow]: une ligne par point SNR, dans l'ordre croissant.
    Raises:
        ConfigInvalidError: configuration invalide.
        NoiseFileUnreadableError: fichier de rejeu illisible.
    """
    cfg.validate()
    code = code or cfg.build_code()
    simulator = FrameSimulator(code, cfg.decoder, cfg.seed, cfg.demapper, load_record(cfg))
    run_id = f"{cfg.code_kind}_{cfg.decoder}_s{cfg.seed}"
    own_publisher = publisher is None
    if own_publisher:
        publisher = open_publisher(cfg, run_id)

    log(f"Sweep: {code.describe()}, décodeur {cfg.decoder}, bruit {cfg.noise_source}, "
        f"{len(cfg.snr_points)} points, {cfg.threads_hint} threads", level="INFO")
    memory = available_memory_mb()
    if memory is not None:
        log(f"Sweep: mémoire disponible {memory:.0f} Mo", level="DEBUG")
    if cfg.out:
        CSVManager.create_csv(cfg.out, SWEEP_CSV_HEADER)
    if publisher:
        publisher.publish_status("started", code=code.describe(), decoder=cfg.decoder, points=len(cfg.snr_points))

    rows = []
    executor = ThreadPoolExecutor(max_workers=cfg.threads_hint) if cfg.threads_hint > 1 else None
    try:
        for snr_index, es_n0_db in enumerate(cfg.snr_points):
            start = time.time()
            row = simulate_point(simulator, snr_index, es_n0_db, cfg.max_frames, cfg.min_bit_errors, executor,
                                 chunk=2 * cfg.threads_hint)
            rows.append(row)
            log(f"Sweep: Es/N0={es_n0_db:.2f} dB, {row.frames} trames, BER pré={row.pre_fec_ber:.3e}, "
                f"post={row.post_fec_ber:.3e}, itérations={row.avg_iterations:.2f} "
                f"({time.time() - start:.1f} s)", level="INFO")
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
    return rows
