#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Filtración por pendientes, jets de la completación e involución barra truncada.

Con letras E de un solo nodo el jet es exacto: en la base de palabras no
decrecientes W_m[alpha] es el subespacio de las palabras cuya primera letra
E tiene grado <= m. Con varios nodos los productos que generan W_m[alpha] y
los representantes se toman entre palabras de la ventana. La barra descarta
las palabras con letras E por debajo de dmin.
"""

import logging
from dataclasses import dataclass

from sympy import Rational, oo

from app.core.algebra import E, THETA, XI, Element, Letter, accumulate
from app.core.cartan import Weight
from app.core.errors import PaddingError, WindowError
from app.core.linalg import RowSpace
from app.core.loopalg import (
    expand_symmetric, normal_order_xi, sort_commuting, straighten_rank1, sym_to_element,
)
from app.core.scalars import ONE, bar_scalar, vpow
from app.core.symfunc import theta_coeff

logger = logging.getLogger(__name__)


def slope(weight):
    """mu(alpha) = d / |alpha_0|; +oo cuando alpha_0 = 0."""
    if weight.height == 0:
        return oo
    return Rational(weight.loopdeg, weight.height)


def _sub_qparts(qpart):
    if not qpart:
        yield ()
        return
    for first in range(qpart[0] + 1):
        for tail in _sub_qparts(qpart[1:]):
            yield (first,) + tail


def filtration_weights(ctx, weight, m):
    """Pesos beta != 0, beta <= alpha, con mu(beta) <= m (incluido beta = alpha)."""
    window = ctx.window
    betas = []
    for qpart in _sub_qparts(weight.qpart):
        height = sum(qpart)
        if not height:
            continue
        rest = weight.height - height
        for degree in range(height * window.dmin, height * window.dmax + 1):
            beta = Weight(qpart, degree)
            if slope(beta) > m:
                continue
            if rest == 0 and degree > weight.loopdeg:
                continue
            betas.append(beta)
    return betas


def w_filtration_span(ctx, weight, m):
    """
    Productos de palabras de la ventana que generan W_m[alpha].

    Basta tomar a la izquierda palabras puras en E: e h y = e (h y) y el
    peso de e tiene pendiente <= mu(beta).

    Returns:
        Lista ordenada de palabras e*y con e en E, wt(e) = beta, mu(beta) <= m.
    """
    words = set()
    for beta in filtration_weights(ctx, weight, m):
        lefts = ctx.window_words(beta)
        if not lefts:
            continue
        rights = ctx.window_words(weight - beta, with_h=True)
        for left in lefts:
            for right in rights:
                words.add(left + right)
    return sorted(words, key=lambda word: (len(word), tuple(l.sort_key() for l in word)))


@dataclass
class Jet:
    """Clase de un elemento módulo W_m[alpha], con su ventana."""

    weight: Weight
    level: object
    value: Element
    window: object

    def header(self):
        return (f"weight={self.weight.to_text()} level={self.level} "
                f"window={self.window.to_text()}")

    def to_text(self):
        return f"{self.header()}\n{self.value}\n"


def _build_jet_space(ctx, weight, m):
    tests = ctx.window_words(weight, with_h=True)
    space = RowSpace()
    spanning = w_filtration_span(ctx, weight, m)
    for k, word in enumerate(spanning):
        space.add([ctx.pair_words(word, test) for test in tests], ("W", k))
    filtration_rank = len(space)
    for word in tests:
        space.add([ctx.pair_words(word, test) for test in tests], ("C", word))
    return tests, space, filtration_rank


def _jet_space(ctx, weight, m):
    return ctx.cached(("jet", ctx.window, weight, m),
                      lambda: _build_jet_space(ctx, weight, m))


def _in_filtration(monomial, m):
    """True si algún prefijo de letras E tiene pendiente <= m."""
    total = 0
    for count, letter in enumerate(monomial, start=1):
        if letter.kind != E:
            return False
        total += letter.index
        if total <= m * count:
            return True
    return False


def drop_filtered(x, m):
    """Descarta los monomios que ya están en W_m por un prefijo en E."""
    return Element({mono: c for mono, c in x.items() if not _in_filtration(mono, m)})


def _straight_jet(cartan, x, m, node):
    """Jet exacto con letras E de un solo nodo (o ninguna)."""
    ordered = drop_filtered(normal_order_xi(drop_filtered(x, m), cartan), m)
    if node is not None:
        ordered = drop_filtered(
            straighten_rank1(ordered, node, cartan, ascending=True), m)
    return canonical(ordered)


def jet(ctx, x, m, weight=None):
    """
    jet_m(x): parte de x en un complemento de W_m[alpha].

    Con un solo nodo en las letras E el complemento son las palabras no
    decrecientes con primera letra de grado > m, con colas en sumas de
    potencias. Con varios nodos se elige entre las palabras de la ventana que
    cubre x; si W_m[alpha] es vacío el jet es x.

    Args:
        ctx (PairingContext): Contexto.
        x (Element): Elemento homogéneo.
        m: Nivel (entero o racional).
        weight (Weight): Peso a declarar cuando x es cero.

    Raises:
        WindowError: Si x no está en el espacio generado por la ventana.
    """
    if weight is None:
        weight = x.weight(ctx.rank) if x else Weight.zero(ctx.rank)
    nodes = {letter.node for letter in x.letters() if letter.kind == E}
    if len(nodes) <= 1:
        value = _straight_jet(ctx.cartan, x, m, next(iter(nodes), None))
        return Jet(weight, m, value, ctx.covering_window(x))
    x = expand_symmetric(drop_filtered(x, m))
    ctx = ctx.widened(ctx.covering_window(x))
    if not x or ctx.is_zero(x):
        return Jet(weight, m, Element(), ctx.window)
    tests, space, filtration_rank = _jet_space(ctx, weight, m)
    if not filtration_rank:
        return Jet(weight, m, x, ctx.window)
    vector = [ctx.pair(Element.monomial(test), x) for test in tests]
    combo = space.coordinates(vector)
    if combo is None:
        raise WindowError(f"el elemento no está en la ventana {ctx.window.to_text()}")
    value = Element()
    for label, coeff in combo.items():
        if label[0] == "C":
            accumulate(value.terms, label[1], coeff)
    logger.debug("jet nivel %s: rango de W %d", m, filtration_rank)
    return Jet(weight, m, value, ctx.window)


def r_m(ctx, x, m):
    """r_m(x) = x - jet_m(x)."""
    return expand_symmetric(x) - jet(ctx, x, m).value


def padding_level(weight, n):
    """
    Nivel máximo del segundo factor de un producto de jets al nivel n.

    Si el primer factor tiene peso (alpha_0; d), a * e * u con mu(e) <= p
    está en W_n cuando d + p <= n (|alpha_0| + 1), es decir
    p <= n - max(0, d - n |alpha_0|).
    """
    return n - max(0, weight.loopdeg - n * weight.height)


def jet_multiply(ctx, a, b, n):
    """
    Producto de jets al nivel n.

    Raises:
        PaddingError: Si a.level > n o b.level > padding_level(wt(a), n).
    """
    if a.level > n:
        raise PaddingError("nivel del primer factor insuficiente", n)
    required = padding_level(a.weight, n)
    if b.level > required:
        raise PaddingError("nivel del segundo factor insuficiente", required)
    return jet(ctx, a.value * b.value, n, weight=a.weight + b.weight)


# ----------------------------------------------------------------------
# Involución barra
# ----------------------------------------------------------------------

def _compositions(total):
    """Composiciones de total en partes positivas."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for tail in _compositions(total - first):
            yield (first,) + tail


def bar_generator(ctx, i, l):
    """
    phi(E_{i,l}) truncado a E_{i,l-s} con l - s >= dmin.

    Cada composición (l_1, ..., l_t) de s aporta
    (-1)^t (v^{-l_t} - v^{l_t}) v^{-(l_1 + ... + l_{t-1})} E_{i,l-s} xi_{l_1} ... xi_{l_t},
    con las letras xi ordenadas.
    """
    ctx.cartan.check_node(i)
    terms = {(Letter(E, i, l),): ONE}
    for total in range(1, l - ctx.window.dmin + 1):
        head = Letter(E, i, l - total)
        for parts in _compositions(total):
            last = parts[-1]
            coeff = (vpow(-last) - vpow(last)) * vpow(-(total - last)) * (-1) ** len(parts)
            xis = tuple(sorted((Letter(XI, i, p) for p in parts), key=Letter.sort_key))
            accumulate(terms, (head,) + xis, coeff)
    return Element(terms)


def truncate(ctx, x):
    """Descarta los monomios con letras E de grado menor que dmin."""
    dmin = ctx.window.dmin
    return Element({m: c for m, c in x.items()
                    if all(l.kind != E or l.index >= dmin for l in m)})


def bar_element(ctx, x):
    """
    phi(x): semilineal, multiplicativa; fija H, xi, chi y b, y conjuga los
    coeficientes de theta en sumas de potencias.
    """
    cache = {}
    result = Element()
    for monomial, coeff in x.items():
        term = Element.one(bar_scalar(coeff))
        for letter in monomial:
            if letter not in cache:
                if letter.kind == E:
                    cache[letter] = bar_generator(ctx, letter.node, letter.index)
                elif letter.kind == THETA:
                    cache[letter] = sym_to_element(
                        theta_coeff(letter.node, letter.index)).map_coefficients(bar_scalar)
                else:
                    cache[letter] = Element.monomial((letter,))
            term = truncate(ctx, term * cache[letter])
        result = result + term
    return result


def relation_level(dmin, top):
    """
    Nivel de jet al que el truncamiento en dmin no afecta a phi(x y).

    Para x, y generadores con grado de x <= top, las palabras descartadas
    empiezan por E_a con a < dmin o tienen un prefijo E_a P E_b con
    b < dmin, de pendiente <= (top + dmin - 1) / 2: ambas están en W_m.
    """
    return max(dmin - 1, Rational(top + dmin - 1, 2))


def canonical(x):
    """Letras simétricas en sumas de potencias y bloques conmutativos ordenados."""
    return sort_commuting(expand_symmetric(x))


def e1_current(ctx, i, l):
    """Coeficiente sum_{t >= 0} v^t E_{i,l-t} xi_{i,t} de E_i(z) xi_i(vz), truncado."""
    terms = {}
    for t in range(0, l - ctx.window.dmin + 1):
        word = (Letter(E, i, l - t),) + ((Letter(XI, i, t),) if t else ())
        accumulate(terms, word, vpow(t))
    return Element(terms)


def currents_residual(ctx, i, l):
    """
    Coeficiente de z^l en phi(E_i(z)) theta_i(z) - E_i(z), en forma canónica.

    Los factores theta_{i,t} recorren t <= l - dmin para que toda palabra con
    letras E en la ventana quede completa.
    """
    total = Element()
    for t in range(0, l - ctx.window.dmin + 1):
        theta = Element.generator(THETA, i, t)
        total = total + truncate(ctx, bar_generator(ctx, i, l - t) * theta)
    return canonical(total - Element.E(i, l))
