# -*- coding: utf-8 -*-
import csv
import os
from src.exceptions import FecError
from src.utils.system_utils import log
from .sweep_config import SweepRow, RateRow, SWEEP_CSV_HEADER, RATE_CSV_HEADER


class CSVManager:
    """
    Classe pour gérer les fichiers CSV de résultats (balayage BER et adaptation de débit).
    """

    @staticmethod
    def create_csv(csv_path, header):
        """
        Crée (ou écrase) le fichier CSV et écrit la ligne d'en-tête.
        Args:
            csv_path (str): chemin du fichier.
            header (list): noms de colonnes.
        Raises:
            OSError: si le fichier ne peut pas être créé.
        """
        folder = os.path.dirname(csv_path)
        try:
            if folder:
                os.makedirs(folder, exist_ok=True)
            with open(csv_path, "w", newline="", encoding="utf-8") as file:
                csv.writer(file, lineterminator="\n").writerow(header)
            log(f"CSV: Fichier {csv_path} créé.", level="INFO")
        except OSError as e:
            log(f"CSV: ERREUR CRITIQUE - Impossible de créer {csv_path}: {e}", level="ERROR")
            raise

    @staticmethod
    def append_row(csv_path, row):
        """
        Ajoute une ligne de résultat (SweepRow ou RateRow) en fin de fichier.
        """
        try:
            with open(csv_path, "a", newline="", encoding="utf-8") as file:
                csv.writer(file, lineterminator="\n").writerow(row.as_csv_row())
        except OSError as e:
            log(f"CSV: ERREUR - Impossible d'ajouter une ligne à {csv_path}: {e}", level="ERROR")
            raise

    @staticmethod
    def _read(csv_path, header):
        try:
            with open(csv_path, "r", newline="", encoding="utf-8") as file:
                rows = list(csv.reader(file))
        except OSError as e:
            log(f"CSV: Erreur lecture {csv_path}: {e}", level="ERROR")
            raise
        if not rows or rows[0] != header:
            raise FecError(f"{csv_path}: en-tête {rows[0] if rows else None} différent de {header}")
        return rows[1:]

    @staticmethod
    def read_sweep_csv(csv_path):
        """
        Relit un CSV de balayage écrit par append_row.
        Returns:
            list[SweepRow]
        """
        return [
            SweepRow(es_n0_db=float(r[0]), frames=int(r[1]), pre_fec_ber=float(r[2]), post_fec_ber=float(r[3]),
                     avg_iterations=float(r[4]), converged_fraction=float(r[5]))
            for r in CSVManager._read(csv_path, SWEEP_CSV_HEADER)
        ]

    @staticmethod
    def read_rate_csv(csv_path):
        """
        Relit un CSV d'adaptation de débit.
        Returns:
            list[RateRow]
        """
        return [
            RateRow(es_n0_db=float(r[0]), best_k1=int(r[1]), net_rate=float(r[2]))
            for r in CSVManager._read(csv_path, RATE_CSV_HEADER)
        ]
