#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Simulateur FEC Polar-BCH / BCH-BCH : ligne de commande.

Sous-commandes : ber-sweep, rate-adapt, selftest, noise-record.
Codes de sortie : 0 succès, 1 échec de l'auto-test, 2 erreur de configuration ou de données.
"""
import argparse
import sys
from src.channel import QAM16, awgn, make_rng, capture_noise_record, write_noise_record
from src.exceptions import FecError
from src.simulation import (SweepConfigManager, run_ber_sweep, run_rate_adapt, codec_selftest, CODE_KINDS,
                            DECODERS)
from src.utils.system_utils import log, set_log_level, LOG_LEVELS

EXIT_OK = 0
EXIT_SELFTEST_FAILED = 1
EXIT_FEC_ERROR = 2
# Options propres à la ligne de commande, absentes de SweepConfig
CLI_ONLY_KEYS = ("command", "config", "handler")


def add_sweep_arguments(parser):
    """Options communes à ber-sweep et rate-adapt ; None = valeur du fichier ou défaut."""
    parser.add_argument("--config", help="Fichier 'clé = valeur' (surchargé par les options)")
    parser.add_argument("--code", choices=CODE_KINDS)
    parser.add_argument("--decoder", choices=DECODERS)
    parser.add_argument("--k1", type=int, help="Dimension polaire K1 (polar-bch)")
    parser.add_argument("--k1-range", help="Intervalle K1 lo:hi (rate-adapt)")
    parser.add_argument("--snr", help="Es/N0 en dB, start:stop:step")
    parser.add_argument("--target-ber", type=float)
    parser.add_argument("--alpha", type=float, help="Facteur de mise à jour HSHD (défaut 3)")
    parser.add_argument("--lmax", type=int, help="Itérations maximales (défaut 10)")
    parser.add_argument("--list-size", type=int, help="Taille de liste SCL (défaut 8)")
    parser.add_argument("--max-frames", type=int)
    parser.add_argument("--min-errors", type=int, help="Erreurs post-FEC par point (défaut 100)")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--noise-replay", help="Fichier NOISREC1 à rejouer au lieu de l'AWGN")
    parser.add_argument("--rate-scale", type=float, help="Gb/s par unité de rendement (défaut 100)")
    parser.add_argument("--polarizations", type=int, choices=(1, 2))
    parser.add_argument("--out", help="CSV de résultats")
    parser.add_argument("--threads", type=int)
    parser.add_argument("--row-t", type=int, help="Rayon du code ligne BCH (bch-bch)")
    parser.add_argument("--col-t", type=int, help="Rayon du code colonne BCH")
    parser.add_argument("--demapper", choices=("exact", "maxlog"))
    parser.add_argument("--hrb-threshold", type=float)
    parser.add_argument("--lrb-count", type=int)
    parser.add_argument("--mqtt-broker", help="Broker MQTT pour l'avancement")
    parser.add_argument("--mqtt-port", type=int)


def build_parser():
    parser = argparse.ArgumentParser(prog="fec_sim", description="Simulation Monte Carlo de codes produits FEC")
    parser.add_argument("--log-level", choices=LOG_LEVELS, type=str.upper)
    commands = parser.add_subparsers(dest="command", required=True)

    add_sweep_arguments(commands.add_parser("ber-sweep", help="Courbe BER post-FEC en fonction de Es/N0"))
    add_sweep_arguments(commands.add_parser("rate-adapt", help="Plus haut K1 atteignant la cible BER par SNR"))
    commands.add_parser("selftest", help="Auto-test des codecs sur petits codes")

    record = commands.add_parser("noise-record", help="Enregistre un bruit AWGN simulé au format NOISREC1")
    record.add_argument("--snr", type=float, required=True, help="Es/N0 en dB")
    record.add_argument("--samples", type=int, required=True)
    record.add_argument("--out", required=True)
    record.add_argument("--seed", type=int, default=1)
    return parser


def load_sweep_config(args):
    overrides = {k: v for k, v in vars(args).items() if k not in CLI_ONLY_KEYS}
    cfg = SweepConfigManager.build(args.config, overrides)
    set_log_level(cfg.log_level)
    return cfg


def handle_ber_sweep(args):
    rows = run_ber_sweep(load_sweep_config(args))
    for row in rows:
        print(f"{row.es_n0_db:6.2f} dB  trames={row.frames:<6d} pré={row.pre_fec_ber:.3e}  post={row.post_fec_ber:.3e}")
    return EXIT_OK


def handle_rate_adapt(args):
    rows = run_rate_adapt(load_sweep_config(args))
    for row in rows:
        print(f"{row.es_n0_db:6.2f} dB  K1={row.best_k1:<4d} débit net={row.net_rate:.3f}")
    return EXIT_OK


def handle_selftest(args):
    report = codec_selftest()
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_SELFTEST_FAILED


def handle_noise_record(args):
    if args.samples < 1:
        raise FecError(f"--samples={args.samples} doit être >= 1")
    rng = make_rng(args.seed)
    transmitted = QAM16.points[rng.integers(0, QAM16.points.size, size=args.samples)]
    received = awgn(transmitted, args.snr, rng)
    record = capture_noise_record(received, transmitted)
    write_noise_record(args.out, record)
    print(f"{len(record)} échantillons, puissance {record.source_power:.4e} -> {args.out}")
    return EXIT_OK


def get_command_handlers():
    """Table sous-commande -> fonction."""
    return {
        'ber-sweep': handle_ber_sweep,
        'rate-adapt': handle_rate_adapt,
        'selftest': handle_selftest,
        'noise-record': handle_noise_record,
    }


def main(argv=None):
    """
    Point d'entrée : analyse les options et exécute la sous-commande.
    Returns:
        int: code de sortie.
    """
    args = build_parser().parse_args(argv)
    if args.log_level:
        set_log_level(args.log_level)
    handler = get_command_handlers()[args.command]
    try:
        return handler(args)
    except FecError as e:
        log(f"FecSim: ERREUR - {type(e).__name__}: {e}", level="ERROR")
        return EXIT_FEC_ERROR
    except OSError as e:
        log(f"FecSim: ERREUR fichier - {e}", level="ERROR")
        return EXIT_FEC_ERROR


if __name__ == "__main__":
    sys.exit(main())
