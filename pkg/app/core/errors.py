#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Excepciones del motor de cálculo.
"""


class QLoopError(Exception):
    """Error base de la aplicación; la CLI lo convierte en código de salida 2."""


class ScalarError(QLoopError, ArithmeticError):
    """Operación inválida sobre escalares (división por cero, residuo fuera de A)."""


class ConfigError(QLoopError):
    """Archivo de datos de Cartan mal formado o inconsistente."""


class ParseError(QLoopError):
    """Error de sintaxis en un elemento o escalar."""

    def __init__(self, message, position=None):
        """
        Inicializa el error de análisis.

        Args:
            message (str): Descripción del problema.
            position (int): Posición (columna, base 1) donde falló el análisis.
        """
        self.position = position
        if position is not None:
            message = f"{message} (columna {position})"
        super().__init__(message)


class AlgebraError(QLoopError):
    """Letra inválida o reescritura imposible en el álgebra libre."""


class SymfuncError(QLoopError):
    """Grado o partición inválidos en funciones simétricas."""


class WindowError(QLoopError):
    """Ventana vacía o sistema lineal inconsistente dentro de la ventana."""


class NotInZError(QLoopError):
    """El elemento no pertenece al subespacio Z' requerido."""


class NilpotencyError(QLoopError):
    """F' no se anuló dentro de la cota impuesta por el peso."""


class PaddingError(QLoopError):
    """Nivel de un jet insuficiente para multiplicar."""

    def __init__(self, message, required_level):
        self.required_level = required_level
        super().__init__(f"{message}; nivel requerido <= {required_level}")
