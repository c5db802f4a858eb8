#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Funciones simétricas por nodo en la base de sumas de potencias.

H(i,s) corresponde a p_s; xi, chi y theta son los coeficientes de las series
exponenciales exp(sum a_s p_s z^s) con a_s = 1/[s], -1/[s] y (v^-1 - v), y
los elementos de Schur b(i, lambda) se obtienen por Jacobi-Trudi en xi.
"""

import logging
from functools import lru_cache
from itertools import permutations
from math import factorial

from sympy.combinatorics import Permutation
from sympy.utilities.iterables import partitions

from app.core.errors import SymfuncError
from app.core.scalars import K, ONE, ZERO, qint, scalar, v

logger = logging.getLogger(__name__)


def _as_partition(multiplicities):
    """Convierte {parte: multiplicidad} en tupla decreciente."""
    parts = []
    for part in sorted(multiplicities, reverse=True):
        parts.extend([part] * multiplicities[part])
    return tuple(parts)


def _multiplicities(partition):
    counts = {}
    for part in partition:
        counts[part] = counts.get(part, 0) + 1
    return counts


def partitions_of(n):
    """Particiones de n como tuplas decrecientes (la vacía para n = 0)."""
    if n < 0:
        return []
    if n == 0:
        return [()]
    return [_as_partition(dict(p)) for p in partitions(n)]


class SymElement:
    """Combinación lineal de monomios p_lambda de un nodo fijo."""

    __slots__ = ("node", "coeffs")

    def __init__(self, node, coeffs=None):
        """
        Inicializa el elemento.

        Args:
            node (int): Nodo de Dynkin.
            coeffs (dict): {partición: escalar}; se descartan los ceros.
        """
        self.node = node
        self.coeffs = {}
        for partition, coeff in (coeffs or {}).items():
            partition = tuple(sorted(partition, reverse=True))
            if any(part < 1 for part in partition):
                raise SymfuncError(f"parte no positiva en {partition}")
            coeff = scalar(coeff)
            if coeff:
                self.coeffs[partition] = self.coeffs.get(partition, ZERO) + coeff
        self.coeffs = {p: c for p, c in self.coeffs.items() if c}

    @classmethod
    def one(cls, node):
        return cls(node, {(): ONE})

    def _check(self, other):
        if self.node != other.node:
            raise SymfuncError("operación entre nodos distintos")

    def __add__(self, other):
        self._check(other)
        coeffs = dict(self.coeffs)
        for partition, coeff in other.coeffs.items():
            coeffs[partition] = coeffs.get(partition, ZERO) + coeff
        return SymElement(self.node, coeffs)

    def __neg__(self):
        return SymElement(self.node, {p: -c for p, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, SymElement):
            other = scalar(other)
            return SymElement(self.node, {p: c * other for p, c in self.coeffs.items()})
        self._check(other)
        coeffs = {}
        for p1, c1 in self.coeffs.items():
            for p2, c2 in other.coeffs.items():
                key = tuple(sorted(p1 + p2, reverse=True))
                coeffs[key] = coeffs.get(key, ZERO) + c1 * c2
        return SymElement(self.node, coeffs)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymElement):
            return NotImplemented
        return self.node == other.node and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def degree_parts(self):
        """Grados |lambda| presentes."""
        return sorted({sum(p) for p in self.coeffs})

    def __repr__(self):
        return f"SymElement({self.node}, {self.coeffs})"


@lru_cache(maxsize=None)
def _exp_coefficient(kind, s):
    """Coeficientes {lambda: escalar} del grado s de exp(sum a_k p_k z^k)."""
    if s < 0:
        raise SymfuncError(f"grado negativo: {s}")
    if kind == "xi":
        weight = lambda k: ONE / qint(k)
    elif kind == "chi":
        weight = lambda k: -ONE / qint(k)
    else:
        weight = lambda k: ONE / v - v
    coeffs = {}
    for partition in partitions_of(s):
        coeff = ONE
        for part, mult in _multiplicities(partition).items():
            coeff *= weight(part) ** mult / K(factorial(mult))
        coeffs[partition] = coeff
    return coeffs


def xi_coeff(i, s):
    """Coeficiente de grado s de xi_i(z) = exp(sum H_s z^s / [s])."""
    return SymElement(i, _exp_coefficient("xi", s))


def chi_coeff(i, s):
    """Coeficiente de grado s de chi_i(z) = exp(-sum H_s z^s / [s])."""
    return SymElement(i, _exp_coefficient("chi", s))


def theta_coeff(i, s):
    """Coeficiente de grado s de theta_i(z) = exp((v^-1 - v) sum H_s z^s)."""
    return SymElement(i, _exp_coefficient("theta", s))


def power_sum(i, partition):
    """Monomio p_lambda."""
    return SymElement(i, {tuple(partition): ONE})


def check_partition(partition):
    """
    Valida una partición.

    Raises:
        SymfuncError: Si las partes no son positivas o no decrecen.
    """
    partition = tuple(partition)
    if any(part < 1 for part in partition):
        raise SymfuncError(f"partición con partes no positivas: {list(partition)}")
    if any(a < b for a, b in zip(partition, partition[1:])):
        raise SymfuncError(f"partición no decreciente: {list(partition)}")
    return partition


@lru_cache(maxsize=None)
def _schur_coeffs(partition):
    size = len(partition)
    if not size:
        return {(): ONE}
    total = SymElement(0)
    for perm in permutations(range(size)):
        term = SymElement.one(0) * Permutation(list(perm)).signature()
        for row, col in enumerate(perm):
            degree = partition[row] - row + col
            if degree < 0:
                term = SymElement(0)
                break
            term = term * SymElement(0, _exp_coefficient("xi", degree))
        total = total + term
    return total.coeffs


def schur(i, partition):
    """
    Elemento de Schur b(i, lambda) = det(xi_{lambda_r - r + c}).

    Args:
        i (int): Nodo.
        partition: Partición (vacía -> 1).

    Returns:
        SymElement en la base de sumas de potencias.
    """
    partition = check_partition(partition)
    return SymElement(i, _schur_coeffs(partition))


def h_norm(m, b=2):
    """Norma (H_m, H_m) = [m b] / (m (v^-1 - v))."""
    return qint(m * b) / (K(m) * (ONE / v - v))


def z_factor(partition, b=2):
    """Producto de normas y factoriales de multiplicidad de p_lambda."""
    result = ONE
    for part, mult in _multiplicities(partition).items():
        result *= h_norm(part, b) ** mult * K(factorial(mult))
    return result


def pair_H(x, y, b=None):
    """
    Forma diagonal sobre sumas de potencias.

    Args:
        x (SymElement): Primer argumento.
        y (SymElement): Segundo argumento.
        b (int): Valor de b_{i,j} que reemplaza al 2 de la norma; si es None
            se usa la lectura diagonal (nodos distintos se anulan).

    Returns:
        Escalar (p_lambda, p_mu) = delta * prod [m b]/(m(v^-1-v)) * prod k!.
    """
    if b is None:
        if x.node != y.node:
            return ZERO
        b = 2
    total = ZERO
    for partition, coeff in x.coeffs.items():
        other = y.coeffs.get(partition)
        if other is None:
            continue
        total += coeff * other * z_factor(partition, b)
    return total
