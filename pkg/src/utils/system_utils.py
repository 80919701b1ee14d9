# -*- coding: utf-8 -*-
"""
Utilitaires système et logging.
"""
import logging
import logging.handlers
import os
import psutil

# Configuration avec dossier logs/
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
LOGS_DIR = os.path.join(PROJECT_ROOT, "logs")
LOG_FILE = os.path.join(LOGS_DIR, "fec_sim.log")
LOG_LEVELS = ["DEEP_DEBUG", "DEBUG", "INFO", "WARNING", "ERROR"]
CURRENT_LOG_LEVEL = "INFO"


def setup_logging():
    """Configuration du logger du projet : fichier tournant dans logs/ + console."""
    logger = logging.getLogger("fec_sim")

    if logger.handlers:
        return logger

    os.makedirs(LOGS_DIR, exist_ok=True)
    logger.setLevel(logging.DEBUG)

    formatter = logging.Formatter('[%(asctime)s] [%(levelname)s] %(message)s', datefmt='%Y-%m-%d %H:%M:%S')

    file_handler = logging.handlers.RotatingFileHandler(
        LOG_FILE,
        maxBytes=10 * 1024 * 1024,  # 10MB
        backupCount=5,
        encoding='utf-8')
    file_handler.setFormatter(formatter)
    file_handler.setLevel(logging.DEBUG)

    console_handler = logging.StreamHandler()
    console_handler.setFormatter(formatter)
    console_handler.setLevel(logging.DEBUG)

    logger.addHandler(file_handler)
    logger.addHandler(console_handler)

    return logger


_logger = setup_logging()


def set_log_level(level):
    """
    Change le niveau de filtrage de log() à chaud.
    Args:
        level (str): Un des niveaux de LOG_LEVELS (insensible à la casse).
    Returns:
        bool: True si le niveau est reconnu, False sinon (niveau inchangé).
    """
    global CURRENT_LOG_LEVEL
    candidate = str(level).upper()
    if candidate not in LOG_LEVELS:
        log(f"SystemUtils: Niveau de log inconnu '{level}', conservation de {CURRENT_LOG_LEVEL}", level="WARNING")
        return False
    CURRENT_LOG_LEVEL = candidate
    return True


def log(*args, level="INFO"):
    """Fonction log avec filtrage par niveau"""
    try:
        current_level_index = LOG_LEVELS.index(CURRENT_LOG_LEVEL)
        message_level_index = LOG_LEVELS.index(level)

        if message_level_index < current_level_index:
            return
    except ValueError:
        pass

    message = " ".join(str(arg) for arg in args)

    # Mapping vers niveaux Python
    if level in ["DEEP_DEBUG", "DEBUG"]:
        _logger.debug(f"[{level}] {message}")
    elif level == "INFO":
        _logger.info(message)
    elif level == "WARNING":
        _logger.warning(message)
    elif level == "ERROR":
        _logger.error(message)
    else:
        _logger.info(message)


def default_thread_count():
    """
    Nombre de workers par défaut pour la simulation des trames.
    Utilise le nombre de coeurs physiques (psutil), à défaut les coeurs logiques.
    Returns:
        int: Nombre de threads (au moins 1).
    """
    try:
        physical = psutil.cpu_count(logical=False)
        if physical:
            return int(physical)
        logical = psutil.cpu_count(logical=True)
        return int(logical) if logical else 1
    except Exception as e:
        log(f"SystemUtils: Erreur inattendue dans default_thread_count: {e}", level="ERROR")
        return 1


def available_memory_mb():
    """
    Mémoire disponible (Mo), journalisée au lancement d'un balayage.
    Returns:
        float | None: Mémoire disponible, ou None si psutil échoue.
    """
    try:
        return psutil.virtual_memory().available / (1024 * 1024)
    except Exception as e:
        log(f"SystemUtils: Lecture mémoire impossible: {e}", level="WARNING")
        return None
