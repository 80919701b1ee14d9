# -*- coding: utf-8 -*-
"""
Package 'utils' : logging du projet et utilitaires système (psutil).
"""

from .system_utils import log, set_log_level, default_thread_count, available_memory_mb, LOG_LEVELS

__all__ = ['log', 'set_log_level', 'default_thread_count', 'available_memory_mb', 'LOG_LEVELS']
