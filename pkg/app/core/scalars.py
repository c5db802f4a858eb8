#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Aritmética exacta en el cuerpo Q(v) de funciones racionales.

Los escalares son elementos de ``K = ZZ(v)`` de sympy, que se mantienen
siempre reducidos (numerador y denominador coprimos, denominador con
coeficiente principal positivo). Aquí viven además la involución v -> 1/v,
los q-enteros y la valoración en v = 0 que define el anillo local A.
"""

import math

from sympy import Rational
from sympy.polys.domains import ZZ
from sympy.polys.fields import field

from app.core.errors import ScalarError

K, v = field("v", ZZ)
ONE = K.one
ZERO = K.zero
RING = K.ring


def scalar(value):
    """
    Convierte un entero (o un escalar) en elemento de K.

    Args:
        value: Entero o elemento de K.

    Returns:
        Elemento de K.
    """
    if isinstance(value, int):
        return K(value)
    return value


def vpow(exponent):
    """Retorna v^exponent (exponente entero, posiblemente negativo)."""
    if exponent >= 0:
        return v ** exponent
    return ONE / v ** (-exponent)


def divide(a, b):
    """
    Divide dos escalares.

    Raises:
        ScalarError: Si el divisor es cero.
    """
    b = scalar(b)
    if not b:
        raise ScalarError("división por cero")
    return scalar(a) / b


def _laurent_split(poly):
    """Separa un polinomio en (exponente mínimo, {exponente: coeficiente})."""
    terms = {monom[0]: coeff for monom, coeff in poly.items()}
    low = min(terms)
    return low, terms


def _from_laurent(terms):
    """Construye un escalar desde un diccionario {exponente: coeficiente}."""
    if not terms:
        return ZERO
    low = min(terms)
    shift = -low if low < 0 else 0
    poly = RING({(e + shift,): c for e, c in terms.items()})
    return K((poly, RING(1))) / vpow(shift)


def qint(l, power=1):
    """
    q-entero [l]_{v^power} = (v^{-l p} - v^{l p}) / (v^{-p} - v^{p}).

    Args:
        l (int): Entero (puede ser negativo).
        power (int): Exponente p de la variable (v_i = v^{r_i}).

    Returns:
        Polinomio de Laurent simétrico.
    """
    if l == 0:
        return ZERO
    sign = 1 if l > 0 else -1
    # [l] = v^{-(l-1)p} + v^{-(l-3)p} + ... + v^{(l-1)p}
    terms = {p * power: sign for p in range(-(abs(l) - 1), abs(l), 2)}
    return _from_laurent(terms)


def qfact(l, power=1):
    """Factorial cuántico [l]! = [l][l-1]...[1]."""
    if l < 0:
        raise ScalarError(f"factorial cuántico de un entero negativo: {l}")
    result = ONE
    for k in range(2, l + 1):
        result *= qint(k, power)
    return result


def qbinom(r, k, power=1):
    """Binomial cuántico; nulo fuera de 0 <= k <= r."""
    if k < 0 or r < 0 or k > r:
        return ZERO
    return qfact(r, power) / (qfact(k, power) * qfact(r - k, power))


def _reverse(poly):
    """p(1/v) como (polinomio invertido, grado)."""
    low, terms = _laurent_split(poly)
    top = max(terms)
    return {top - e: c for e, c in terms.items()}, top


def bar_scalar(a):
    """
    Sustitución v -> 1/v.

    Args:
        a: Escalar.

    Returns:
        Escalar conjugado; la operación es una involución.
    """
    a = scalar(a)
    if not a:
        return ZERO
    num, num_deg = _reverse(a.numer)
    den, den_deg = _reverse(a.denom)
    return _from_laurent(num) / _from_laurent(den) * vpow(den_deg - num_deg)


def val0(a):
    """Orden de anulación en v = 0 (``math.inf`` para el cero)."""
    a = scalar(a)
    if not a:
        return math.inf
    return _laurent_split(a.numer)[0] - _laurent_split(a.denom)[0]


def in_A(a):
    """True si el escalar no tiene polo en v = 0."""
    return val0(a) >= 0


def residue(a):
    """
    Valor en v = 0 de un elemento de A, como racional de sympy.

    Raises:
        ScalarError: Si el escalar tiene polo en v = 0.
    """
    order = val0(a)
    if order < 0:
        raise ScalarError("el escalar tiene un polo en v = 0")
    if order > 0:
        return Rational(0)
    num_low, num = _laurent_split(a.numer)
    den_low, den = _laurent_split(a.denom)
    return Rational(int(num[num_low]), int(den[den_low]))


def unit_part(a):
    """Retorna (e, u) con a = v^e * u y u de valoración cero."""
    order = val0(a)
    if order == math.inf:
        raise ScalarError("el cero no tiene parte unitaria")
    return order, a / vpow(order)


def _format_laurent(terms):
    """Texto de un polinomio de Laurent en orden creciente de exponentes."""
    pieces = []
    for exp in sorted(terms):
        coeff = int(terms[exp])
        if not coeff:
            continue
        magnitude = abs(coeff)
        if exp == 0:
            body = str(magnitude)
        else:
            power = "v" if exp == 1 else f"v^{exp}"
            body = power if magnitude == 1 else f"{magnitude}*{power}"
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(pieces) if pieces else "0"


def format_scalar(a):
    """
    Forma canónica textual: ``(num)`` o ``(num)/(den)``.

    La potencia de v del denominador se pasa al numerador, de modo que el
    denominador tiene grado de Laurent mínimo cero.
    """
    a = scalar(a)
    if not a:
        return "(0)"
    num_low, num = _laurent_split(a.numer)
    den_low, den = _laurent_split(a.denom)
    numerator = {e - den_low: c for e, c in num.items()}
    denominator = {e - den_low: c for e, c in den.items()}
    if denominator == {0: 1}:
        return f"({_format_laurent(numerator)})"
    return f"({_format_laurent(numerator)})/({_format_laurent(denominator)})"
