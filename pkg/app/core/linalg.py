#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Álgebra lineal exacta sobre K = Q(v).

Eliminación gaussiana con pivote de menor valoración en v = 0, sustitución
hacia atrás con variables libres nulas, un espacio de filas incremental que
registra combinaciones y la triangulación sobre el anillo local A.
"""

import logging
from dataclasses import dataclass, field

from app.core.scalars import ONE, ZERO, in_A, unit_part, val0

logger = logging.getLogger(__name__)


def _pivot_key(entry, index):
    return (val0(entry), index)


def form_echelon(matrix, rhs=None):
    """
    Lleva ``matrix`` (lista de filas, modificada en el sitio) a forma escalonada.

    Args:
        matrix (list): Filas de escalares.
        rhs (list): Término independiente opcional, permutado y reducido a la par.

    Returns:
        Lista de columnas libres.
    """
    free_vars = []
    n_rows = len(matrix)
    if not n_rows:
        return free_vars
    n_cols = len(matrix[0])
    piv_r = 0
    for piv_c in range(n_cols):
        candidates = [r for r in range(piv_r, n_rows) if matrix[r][piv_c]]
        if not candidates:
            free_vars.append(piv_c)
            continue
        best = min(candidates, key=lambda r: _pivot_key(matrix[r][piv_c], r))
        if best != piv_r:
            matrix[piv_r], matrix[best] = matrix[best], matrix[piv_r]
            if rhs is not None:
                rhs[piv_r], rhs[best] = rhs[best], rhs[piv_r]
        fp = matrix[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = matrix[r][piv_c]
            if not fr:
                continue
            frp = fr / fp
            for c in range(piv_c, n_cols):
                if matrix[piv_r][c]:
                    matrix[r][c] -= matrix[piv_r][c] * frp
            if rhs is not None:
                rhs[r] -= rhs[piv_r] * frp
        piv_r += 1
        if piv_r == n_rows:
            free_vars.extend(range(piv_c + 1, n_cols))
            break
    return free_vars


def back_substitution(matrix, rhs, free_vars):
    """
    Resuelve el sistema escalonado; las variables libres valen cero.

    Returns:
        Lista solución, o None si el sistema es inconsistente.
    """
    n_rows = len(matrix)
    n_cols = len(matrix[0]) if n_rows else 0
    rank = n_cols - len(free_vars)
    for r in range(rank, n_rows):
        if rhs[r]:
            return None
    free = set(free_vars)
    piv_cols = [c for c in range(n_cols) if c not in free]
    solution = [ZERO] * n_cols
    for r in range(len(piv_cols) - 1, -1, -1):
        piv_c = piv_cols[r]
        s = -rhs[r]
        for c in range(piv_c + 1, n_cols):
            if matrix[r][c] and solution[c]:
                s += matrix[r][c] * solution[c]
        solution[piv_c] = -s / matrix[r][piv_c]
    return solution


def solve(matrix, rhs):
    """Solución de matrix * x = rhs (copia los datos); None si no existe."""
    if not matrix:
        return []
    work = [list(row) for row in matrix]
    target = list(rhs)
    free_vars = form_echelon(work, target)
    return back_substitution(work, target, free_vars)


def rank(matrix):
    """Rango de una matriz de escalares."""
    if not matrix or not matrix[0]:
        return 0
    work = [list(row) for row in matrix]
    free_vars = form_echelon(work)
    return len(work[0]) - len(free_vars)


class RowSpace:
    """
    Espacio generado por vectores añadidos uno a uno.

    Cada fila almacenada guarda su expresión como combinación de los vectores
    originales, de modo que ``coordinates`` devuelve coeficientes respecto de
    las etiquetas con las que se añadieron.
    """

    def __init__(self):
        self.rows = []
        self.labels = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, vector):
        """Retorna (residuo, combinación) con vector = residuo + sum combo*original."""
        residual = list(vector)
        combo = {}
        for pivot, row, row_combo in self.rows:
            entry = residual[pivot]
            if not entry:
                continue
            factor = entry / row[pivot]
            residual = [a - factor * b if b else a for a, b in zip(residual, row)]
            for label, value in row_combo.items():
                combo[label] = combo.get(label, ZERO) + factor * value
        return residual, {k: c for k, c in combo.items() if c}

    def add(self, vector, label):
        """
        Añade un vector si es independiente de los anteriores.

        Returns:
            True si el vector amplió el espacio.
        """
        residual, combo = self.reduce(vector)
        nonzero = [c for c, entry in enumerate(residual) if entry]
        if not nonzero:
            return False
        pivot = min(nonzero, key=lambda c: _pivot_key(residual[c], c))
        row_combo = {k: -c for k, c in combo.items()}
        row_combo[label] = row_combo.get(label, ZERO) + ONE
        self.rows.append((pivot, residual, row_combo))
        self.labels.append(label)
        return True

    def coordinates(self, vector):
        """Coeficientes respecto de las etiquetas, o None si el vector no está en el espacio."""
        residual, combo = self.reduce(vector)
        if any(residual):
            return None
        return combo


@dataclass
class TriangularForm:
    """Forma escalonada de un A-módulo generado por filas."""

    rows: list = field(default_factory=list)
    pivots: list = field(default_factory=list)
    pivot_valuations: list = field(default_factory=list)

    @property
    def integral(self):
        """True si todas las entradas están en A."""
        return all(in_A(entry) for row in self.rows for entry in row if entry)

    @property
    def unit_pivots(self):
        return all(e == 0 for e in self.pivot_valuations)

    @property
    def rank(self):
        return len(self.rows)


def triangularize_over_A(vectors):
    """
    Base escalonada del A-módulo generado por ``vectors``.

    En cada columna se elige como pivote la entrada de menor valoración; se
    normaliza a v^e dividiendo por su parte unitaria y se eliminan las demás
    filas con multiplicadores de valoración >= 0 (combinaciones sobre A).
    """
    remaining = [list(vec) for vec in vectors if any(vec)]
    form = TriangularForm()
    if not remaining:
        return form
    n_cols = len(remaining[0])
    for col in range(n_cols):
        candidates = [k for k, row in enumerate(remaining) if row[col]]
        if not candidates:
            continue
        best = min(candidates, key=lambda k: _pivot_key(remaining[k][col], k))
        order, unit = unit_part(remaining[best][col])
        pivot_row = [entry / unit if entry else entry for entry in remaining[best]]
        survivors = []
        for k, row in enumerate(remaining):
            if k == best:
                continue
            if row[col]:
                factor = row[col] / pivot_row[col]
                row = [a - factor * b if b else a for a, b in zip(row, pivot_row)]
            if any(row):
                survivors.append(row)
        form.rows.append(pivot_row)
        form.pivots.append(col)
        form.pivot_valuations.append(order)
        remaining = survivors
        if not remaining:
            break
    logger.debug("Triangulación sobre A: rango %d", form.rank)
    return form
