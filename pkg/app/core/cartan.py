#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Datos de Cartan, pesos en Q x Z y ventanas de grado de lazo.
"""

import logging
from dataclasses import dataclass

import numpy as np

from app.core.errors import ConfigError, WindowError

logger = logging.getLogger(__name__)


class CartanData:
    """Matriz de Cartan simetrizable con sus simetrizadores."""

    def __init__(self, matrix, symmetrizers):
        """
        Inicializa y valida los datos de Cartan.

        Args:
            matrix: Matriz entera n x n (a_{i,j}).
            symmetrizers: Enteros positivos r_i.

        Raises:
            ConfigError: Si la matriz no es una matriz de Cartan simetrizable.
        """
        self.matrix = np.array(matrix, dtype=int)
        self.symmetrizers = np.array(symmetrizers, dtype=int)
        rank = len(self.symmetrizers)
        if self.matrix.shape != (rank, rank):
            raise ConfigError(
                f"la matriz es {self.matrix.shape} pero hay {rank} simetrizadores")
        if rank == 0:
            raise ConfigError("rango nulo")
        if np.any(self.symmetrizers <= 0):
            raise ConfigError("los simetrizadores deben ser positivos")
        if np.any(np.diag(self.matrix) != 2):
            raise ConfigError("la diagonal de la matriz de Cartan debe ser 2")
        off = self.matrix[~np.eye(rank, dtype=bool)]
        if np.any(off > 0):
            raise ConfigError("entradas fuera de la diagonal positivas")
        if np.any((self.matrix == 0) != (self.matrix.T == 0)):
            raise ConfigError("a_ij = 0 debe equivaler a a_ji = 0")
        self.symmetrized = np.diag(self.symmetrizers) @ self.matrix
        if not np.array_equal(self.symmetrized, self.symmetrized.T):
            raise ConfigError("DA no es simétrica")
        self.rank = rank

    @classmethod
    def type_a(cls, n):
        """Tipo A_n (sl_{n+1}) con simetrizadores unitarios."""
        matrix = 2 * np.eye(n, dtype=int)
        for k in range(n - 1):
            matrix[k, k + 1] = matrix[k + 1, k] = -1
        return cls(matrix, [1] * n)

    @classmethod
    def from_text(cls, text):
        """
        Lee el formato ``rank n`` / ``row ...`` / ``sym ...``.

        Args:
            text (str): Contenido del archivo; admite comentarios con '#'.

        Returns:
            CartanData validado.
        """
        rank = None
        rows = []
        sym = None
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            keyword, *values = line.split()
            try:
                numbers = [int(value) for value in values]
            except ValueError:
                raise ConfigError(f"línea {number}: se esperaban enteros") from None
            if keyword == "rank":
                if len(numbers) != 1 or numbers[0] < 1:
                    raise ConfigError(f"línea {number}: rango inválido")
                rank = numbers[0]
            elif keyword == "row":
                rows.append(numbers)
            elif keyword == "sym":
                sym = numbers
            else:
                raise ConfigError(f"línea {number}: palabra clave desconocida '{keyword}'")
        if rank is None:
            raise ConfigError("falta la línea 'rank'")
        if len(rows) != rank or any(len(row) != rank for row in rows):
            raise ConfigError(f"se esperaban {rank} filas de longitud {rank}")
        if sym is None:
            sym = [1] * rank
        if len(sym) != rank:
            raise ConfigError(f"se esperaban {rank} simetrizadores")
        return cls(rows, sym)

    def nodes(self):
        """Nodos numerados desde 1."""
        return range(1, self.rank + 1)

    def check_node(self, i):
        if not 1 <= i <= self.rank:
            raise ConfigError(f"nodo {i} fuera de rango (rango {self.rank})")

    def a(self, i, j):
        return int(self.matrix[i - 1, j - 1])

    def b(self, i, j):
        """Entrada b_{i,j} = r_i a_{i,j} de la forma simétrica."""
        return int(self.symmetrized[i - 1, j - 1])

    def r(self, i):
        return int(self.symmetrizers[i - 1])

    def form(self, q1, q2):
        """Forma (q1, q2) sobre la parte Q de dos pesos."""
        return int(np.array(q1) @ self.symmetrized @ np.array(q2))

    def alpha(self, i):
        """Raíz simple alpha_i como vector entero."""
        vector = [0] * self.rank
        vector[i - 1] = 1
        return tuple(vector)

    def to_text(self):
        lines = [f"rank {self.rank}"]
        lines += ["row " + " ".join(str(int(x)) for x in row) for row in self.matrix]
        lines.append("sym " + " ".join(str(int(r)) for r in self.symmetrizers))
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        return (isinstance(other, CartanData)
                and np.array_equal(self.matrix, other.matrix)
                and np.array_equal(self.symmetrizers, other.symmetrizers))

    def __hash__(self):
        return hash((self.matrix.tobytes(), self.symmetrizers.tobytes()))

    def __repr__(self):
        return f"CartanData(rank={self.rank})"


def load_cartan(path):
    """Carga datos de Cartan desde un archivo."""
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigError(f"no se puede leer {path}: {exc}") from exc
    cartan = CartanData.from_text(text)
    logger.info("Datos de Cartan de rango %d cargados desde %s", cartan.rank, path)
    return cartan


@dataclass(frozen=True, order=True)
class Weight:
    """Peso (parte en Q, grado de lazo)."""

    qpart: tuple
    loopdeg: int

    @classmethod
    def zero(cls, rank):
        return cls((0,) * rank, 0)

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.qpart, other.qpart)),
                      self.loopdeg + other.loopdeg)

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.qpart, other.qpart)),
                      self.loopdeg - other.loopdeg)

    @property
    def height(self):
        """|alpha_0| = suma de los valores absolutos de las coordenadas."""
        return sum(abs(n) for n in self.qpart)

    def is_positive(self):
        return all(n >= 0 for n in self.qpart)

    def to_text(self):
        return "(" + ",".join(str(n) for n in self.qpart) + f";{self.loopdeg})"


@dataclass(frozen=True)
class Window:
    """Intervalo [dmin, dmax] de grados de lazo admitidos."""

    dmin: int
    dmax: int

    def __post_init__(self):
        if self.dmin > self.dmax:
            raise WindowError(f"ventana vacía [{self.dmin},{self.dmax}]")

    def degrees(self):
        return range(self.dmin, self.dmax + 1)

    def contains(self, degree):
        return self.dmin <= degree <= self.dmax

    def widened(self, low=None, high=None):
        """Ventana que además cubre [low, high]."""
        dmin = self.dmin if low is None else min(self.dmin, low)
        dmax = self.dmax if high is None else max(self.dmax, high)
        return Window(dmin, dmax)

    def to_text(self):
        return f"[{self.dmin},{self.dmax}]"
