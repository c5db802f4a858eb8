#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Módulo para gestionar los parámetros globales de cálculo y verificación.
"""


class Settings:
    """Constantes de la aplicación y parámetros de las suites de verificación."""

    # Semilla de las muestras aleatorias (los informes deben ser reproducibles)
    RANDOM_SEED = 20240611

    # Reescritura
    MAX_STRAIGHTEN_ROUNDS = 10000

    # Apareamiento: lectura de (H_{i,m}, H_{j,n})
    H_FORMS = ("cartan", "diagonal")
    DEFAULT_H_FORM = "cartan"

    # Margen de ventana para las comprobaciones truncadas de la involución
    PADDING_MARGIN = 2

    # Tamaños de las suites
    SCALAR_SAMPLES = 1000
    SCALAR_MAX_DEGREE = 4
    SYMFUNC_MAX_DEGREE = 8
    SYMFUNC_GRAM_DEGREE = 6
    STRAIGHTEN_SAMPLES = 200
    JET_SAMPLES = 100
    ASSOCIATIVITY_SAMPLES = 10
    DIVIDED_POWER_MAX = 4
    PROJECTOR_MAX_T = 3
    KASHIWARA_DEPTH = 3
    PBW_DEGREES = (0, 2)
    PBW_MAX_LETTERS = 3
    PBW_MAX_SEED = 2

    # Historial del monitor de ejecución
    MONITOR_HISTORY = 256

    SUITES = (
        "scalars", "symfunc", "relations", "pairing", "fprime-lemmas",
        "qboson", "projectors", "kashiwara", "bar", "jets", "pbw", "crystal",
    )

    @classmethod
    def is_suite(cls, name):
        """Retorna si el nombre corresponde a una suite conocida."""
        return name in cls.SUITES

    @classmethod
    def check_h_form(cls, h_form):
        """Valida la lectura del apareamiento de H."""
        if h_form not in cls.H_FORMS:
            raise ValueError(f"forma de H desconocida: {h_form}")
        return h_form

    @classmethod
    def padded(cls, window, margin=None):
        """Ventana ampliada hacia abajo por el margen de relleno."""
        margin = cls.PADDING_MARGIN if margin is None else margin
        return window.widened(low=window.dmin - margin)
