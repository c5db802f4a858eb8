#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Módulo para monitorear tiempo y memoria de las comprobaciones.
"""

import logging
import time
from contextlib import contextmanager

import numpy as np
import psutil

from app.utils.settings import Settings

logger = logging.getLogger(__name__)


class RunMonitor:
    """Historial de duración y memoria residente por comprobación."""

    def __init__(self, history_size=None):
        """
        Inicializa el monitor.

        Args:
            history_size (int): Tamaño del historial a mantener.
        """
        self.history_size = history_size or Settings.MONITOR_HISTORY
        self.process = psutil.Process()
        self.names = []
        self.time_history = []
        self.memory_history = []

    def get_memory_mb(self):
        """Retorna la memoria residente del proceso en MB."""
        return self.process.memory_info().rss / (1024 * 1024)

    def record(self, name, seconds, memory_mb):
        self.names.append(name)
        self.time_history.append(seconds)
        self.memory_history.append(memory_mb)
        if len(self.names) > self.history_size:
            self.names.pop(0)
            self.time_history.pop(0)
            self.memory_history.pop(0)
        logger.debug("%s: %.3f s, %.1f MB", name, seconds, memory_mb)

    @contextmanager
    def track(self, name):
        """Mide el bloque ``with`` y lo añade al historial."""
        start = time.perf_counter()
        try:
            yield
        finally:
            self.record(name, time.perf_counter() - start, self.get_memory_mb())

    def get_summary(self):
        """
        Resumen del historial.

        Returns:
            dict: Número de entradas, tiempo total y medio, memoria máxima y
            la comprobación más lenta.
        """
        if not self.time_history:
            return {'count': 0, 'total': 0.0, 'avg': 0.0, 'max_memory': 0.0, 'slowest': None}
        times = np.array(self.time_history)
        return {
            'count': len(times),
            'total': float(times.sum()),
            'avg': float(np.mean(times)),
            'max_memory': float(np.max(self.memory_history)),
            'slowest': self.names[int(np.argmax(times))],
        }

    def log_summary(self):
        summary = self.get_summary()
        if summary['count']:
            logger.info("%d comprobaciones en %.2f s (media %.3f s, pico %.1f MB, más lenta: %s)",
                        summary['count'], summary['total'], summary['avg'],
                        summary['max_memory'], summary['slowest'])
