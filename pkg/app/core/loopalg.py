#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Relaciones del álgebra de lazos cuántica sobre el álgebra libre.

Incluye la expansión de letras simétricas en palabras de H, la ordenación
normal H-después-de-E, los residuos de las relaciones cuadrática y de Serre
y el enderezamiento de un solo nodo hacia la forma de potencias divididas.
"""

import logging
from functools import lru_cache
from itertools import permutations

from app.core.algebra import (
    CHI, E, H, SCHUR, THETA, XI, Element, Letter, accumulate,
)
from app.core.errors import AlgebraError
from app.core.scalars import ONE, ZERO, K, qbinom, qfact, qint, vpow
from app.core.symfunc import chi_coeff, power_sum, schur, theta_coeff, xi_coeff
from app.utils.settings import Settings

logger = logging.getLogger(__name__)


def sym_of_letter(letter):
    """SymElement asociado a una letra simétrica."""
    if letter.kind == H:
        return power_sum(letter.node, (letter.index,))
    if letter.kind == THETA:
        return theta_coeff(letter.node, letter.index)
    if letter.kind == XI:
        return xi_coeff(letter.node, letter.index)
    if letter.kind == CHI:
        return chi_coeff(letter.node, letter.index)
    if letter.kind == SCHUR:
        return schur(letter.node, letter.index)
    raise AlgebraError(f"la letra {letter.kind} no es simétrica")


def sym_to_element(sym):
    """Palabras de H (ordenadas canónicamente) para un SymElement."""
    terms = {}
    for partition, coeff in sym.coeffs.items():
        word = tuple(sorted((Letter(H, sym.node, part) for part in partition),
                            key=Letter.sort_key))
        accumulate(terms, word, coeff)
    result = Element()
    result.terms = terms
    return result


def expand_symmetric(x, kinds=(THETA, XI, CHI, SCHUR)):
    """
    Sustituye las letras simétricas indicadas por su desarrollo en H.

    Args:
        x (Element): Elemento.
        kinds: Tipos de letra a desarrollar.

    Returns:
        Element donde sólo quedan E, H y los tipos no desarrollados.
    """
    result = Element()
    cache = {}
    for monomial, coeff in x.items():
        if not any(letter.kind in kinds for letter in monomial):
            result = result + Element.monomial(monomial, coeff)
            continue
        term = Element.one(coeff)
        for letter in monomial:
            if letter.kind in kinds:
                if letter not in cache:
                    cache[letter] = sym_to_element(sym_of_letter(letter))
                term = term * cache[letter]
            else:
                term = term * Element.monomial((letter,))
        result = result + term
    return result


def _split_E_prefix(monomial):
    """Longitud del prefijo de letras E."""
    for position, letter in enumerate(monomial):
        if letter.kind != E:
            return position
    return len(monomial)


def sort_commuting(x):
    """Ordena los bloques maximales de letras simétricas (conmutan entre sí)."""
    terms = {}
    for monomial, coeff in x.items():
        word, run = [], []
        for letter in monomial:
            if letter.kind == E:
                word.extend(sorted(run, key=Letter.sort_key))
                run = []
                word.append(letter)
            else:
                run.append(letter)
        word.extend(sorted(run, key=Letter.sort_key))
        accumulate(terms, tuple(word), coeff)
    result = Element()
    result.terms = terms
    return result


@lru_cache(maxsize=None)
def xi_shift_coeff(b, t):
    """
    g_t de xi_i(z) E_j(w) = g(zw) E_j(w) xi_i(z), con b = b_ij.

    Es xi_t evaluado en p_s = [s b]/s, de modo que
    xi_{i,k} E_{j,y} = sum_t g_t E_{j,y+t} xi_{i,k-t}.
    """
    total = ZERO
    for partition, coeff in xi_coeff(1, t).coeffs.items():
        for part in partition:
            coeff *= qint(part * b) / K(part)
        total += coeff
    return total


def _normal_order(pending, cartan):
    result = {}
    while pending:
        monomial, coeff = pending.popitem()
        position = None
        for k in range(len(monomial) - 1):
            if monomial[k].kind in (H, XI) and monomial[k + 1].kind == E:
                position = k
                break
        if position is None:
            cut = _split_E_prefix(monomial)
            tail = tuple(sorted(monomial[cut:], key=Letter.sort_key))
            accumulate(result, monomial[:cut] + tail, coeff)
            continue
        s, e = monomial[position], monomial[position + 1]
        head, rest = monomial[:position], monomial[position + 2:]
        b = cartan.b(s.node, e.node)
        if s.kind == H:
            accumulate(pending, head + (e, s) + rest, coeff)
            factor = qint(s.index * b) / K(s.index)
            if factor:
                merged = Letter(E, e.node, e.index + s.index)
                accumulate(pending, head + (merged,) + rest, coeff * factor)
            continue
        for t in range(s.index + 1):
            factor = xi_shift_coeff(b, t)
            if not factor:
                continue
            left = () if t == s.index else (Letter(XI, s.node, s.index - t),)
            merged = Letter(E, e.node, e.index + t)
            accumulate(pending, head + (merged,) + left + rest, coeff * factor)
    out = Element()
    out.terms = result
    return out


def normal_order_H(x, cartan):
    """
    Reescribe cada monomio como (palabra en E)(palabra en H).

    Las letras theta, xi, chi y b se desarrollan primero en sumas de
    potencias; después se aplica [H_{i,s}, E_{j,l}] = [s b_ij]/s E_{j,s+l}.
    """
    return _normal_order(dict(expand_symmetric(x).terms), cartan)


def normal_order_xi(x, cartan):
    """
    Como normal_order_H pero conservando las letras xi.

    Las xi cruzan las E con xi_shift_coeff; la cola queda en letras H y xi
    ordenadas, sin desarrollar.
    """
    return _normal_order(dict(expand_symmetric(x, kinds=(THETA, CHI, SCHUR)).terms),
                         cartan)


def quadratic_residual(cartan, i, j, l, m):
    """
    Residuo de la relación cuadrática:
    v^b E_{i,l+1}E_{j,m} - E_{j,m}E_{i,l+1} - E_{i,l}E_{j,m+1} + v^b E_{j,m+1}E_{i,l}.
    """
    cartan.check_node(i)
    cartan.check_node(j)
    twist = vpow(cartan.b(i, j))
    return (Element.E(i, l + 1) * Element.E(j, m) * twist
            - Element.E(j, m) * Element.E(i, l + 1)
            - Element.E(i, l) * Element.E(j, m + 1)
            + Element.E(j, m + 1) * Element.E(i, l) * twist)


def serre_words(cartan, i, j, degrees, lprime):
    """
    Términos (coeficiente, palabra) del residuo de Serre antes de agrupar.

    Raises:
        AlgebraError: Si i = j o la longitud de ``degrees`` no es 1 - a_ij.
    """
    if i == j:
        raise AlgebraError("la relación de Serre requiere nodos distintos")
    cartan.check_node(i)
    cartan.check_node(j)
    r = 1 - cartan.a(i, j)
    degrees = tuple(degrees)
    if len(degrees) != r:
        raise AlgebraError(f"se esperaban {r} grados y se recibieron {len(degrees)}")
    words = []
    for sigma in permutations(range(r)):
        ordered = [Letter(E, i, degrees[s]) for s in sigma]
        for k in range(r + 1):
            coeff = qbinom(r, k, cartan.r(i)) * (-1) ** k
            words.append((coeff, tuple(ordered[:k]) + (Letter(E, j, lprime),)
                          + tuple(ordered[k:])))
    return words


def serre_residual(cartan, i, j, degrees, lprime):
    """Suma simetrizada de la relación de Serre de lazo como Element."""
    terms = {}
    for coeff, word in serre_words(cartan, i, j, degrees, lprime):
        accumulate(terms, word, coeff)
    result = Element()
    result.terms = terms
    return result


def theta_commutator_residual(cartan, i, l, j, n):
    """
    theta_{i,l}E_{j,n} - E_{j,n}theta_{i,l}
      - sum_{t=1}^{l} v^{-(t-1)b}(v^{-b} - v^{b}) E_{j,n+t} theta_{i,l-t}.
    """
    b = cartan.b(i, j)
    theta = lambda s: Element.generator(THETA, i, s)
    residual = theta(l) * Element.E(j, n) - Element.E(j, n) * theta(l)
    for t in range(1, l + 1):
        coeff = vpow(-(t - 1) * b) * (vpow(-b) - vpow(b))
        residual = residual - Element.E(j, n + t) * theta(l - t) * coeff
    return residual


def _check_single_node(x, i):
    for monomial in x.terms:
        cut = _split_E_prefix(monomial)
        for letter in monomial[:cut]:
            if letter.node != i:
                raise AlgebraError(
                    f"letras E de nodos mezclados ({letter.node} y {i})")
        if any(letter.kind == E for letter in monomial[cut:]):
            raise AlgebraError("letra E tras una letra H; aplique normal_order_H")


def straighten_rank1(x, i, cartan, max_rounds=None, ascending=False):
    """
    Endereza palabras en E de un solo nodo hacia grados no crecientes.

    Con ``ascending`` el orden buscado es el no decreciente: si a > b,
    E_a E_b = v^-c E_b E_a + v^-c E_{a-1} E_{b+1} - E_{b+1} E_{a-1}
    (sólo el primer término si a = b + 1), con c = b_ii. La primera letra
    nunca crece al reescribir.

    Args:
        x (Element): Elemento con letras E del nodo i seguidas de una cola
            simétrica que no se modifica.
        i (int): Nodo.
        cartan (CartanData): Datos de Cartan.
        max_rounds (int): Límite de rondas de reescritura.
        ascending (bool): Enderezar hacia grados no decrecientes.

    Returns:
        Element cuyos prefijos E tienen grados monótonos.

    Raises:
        AlgebraError: Con letras de nodos mezclados o si no se alcanza el
            punto fijo.
    """
    _check_single_node(x, i)
    max_rounds = max_rounds or Settings.MAX_STRAIGHTEN_ROUNDS
    twist = vpow(cartan.b(i, i))
    untwist = vpow(-cartan.b(i, i))
    current = dict(x.terms)
    for _ in range(max_rounds):
        changed = False
        following = {}
        for monomial, coeff in current.items():
            cut = _split_E_prefix(monomial)
            degrees = [letter.index for letter in monomial[:cut]]
            if ascending:
                k = next((p for p in range(cut - 1) if degrees[p] > degrees[p + 1]), None)
            else:
                k = next((p for p in range(cut - 1) if degrees[p] < degrees[p + 1]), None)
            if k is None:
                accumulate(following, monomial, coeff)
                continue
            changed = True
            a, b = degrees[k], degrees[k + 1]
            word = lambda d1, d2: (monomial[:k] + (Letter(E, i, d1), Letter(E, i, d2))
                                   + monomial[k + 2:])
            if ascending:
                accumulate(following, word(b, a), coeff * untwist)
                if a > b + 1:
                    accumulate(following, word(a - 1, b + 1), coeff * untwist)
                    accumulate(following, word(b + 1, a - 1), -coeff)
                continue
            accumulate(following, word(b, a), coeff * twist)
            if b > a + 1:
                accumulate(following, word(b - 1, a + 1), -coeff)
                accumulate(following, word(a + 1, b - 1), coeff * twist)
        current = following
        if not changed:
            result = Element()
            result.terms = current
            return result
    raise AlgebraError(f"el enderezamiento no terminó en {max_rounds} rondas")


def divided_power_form(x, i, cartan):
    """
    Coordenadas en la base de potencias divididas.

    Returns:
        dict {((n1, s1), ..., (nk, sk)), cola): escalar} con n1 > ... > nk,
        donde E_n^s = [s]_{v_i}! E_n^{(s)}.
    """
    straight = straighten_rank1(x, i, cartan)
    power = cartan.r(i)
    coords = {}
    for monomial, coeff in straight.items():
        cut = _split_E_prefix(monomial)
        runs = []
        for letter in monomial[:cut]:
            if runs and runs[-1][0] == letter.index:
                runs[-1][1] += 1
            else:
                runs.append([letter.index, 1])
        factor = ONE
        for _, count in runs:
            factor *= qfact(count, power)
        key = (tuple((n, s) for n, s in runs), monomial[cut:])
        accumulate(coords, key, coeff * factor)
    return coords


def divided_power_word(i, runs, power=1):
    """E_{n1}^{(s1)} ... E_{nk}^{(sk)} como Element."""
    word, denominator = [], ONE
    for degree, count in runs:
        word.extend([Letter(E, i, degree)] * count)
        denominator *= qfact(count, power)
    return Element.monomial(word, ONE / denominator)
