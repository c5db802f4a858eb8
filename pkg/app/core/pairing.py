#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Coproducto Delta', apareamiento de Hopf, operadores F' y prueba de anulación.

El apareamiento se calcula sobre palabras en E y H (las letras theta, xi,
chi y b se desarrollan antes en sumas de potencias) pelando la primera letra
del argumento derecho: (x, y1 resto) = (Delta'(x), y1 (x) resto).
"""

import logging
from enum import Enum
from itertools import combinations, product

from sympy.utilities.iterables import multiset_permutations

from app.core.algebra import (
    CHI, E, H, SCHUR, THETA, XI, Element, Letter, TensorElement, accumulate,
    letter_weight, make_letter, tensor_multiply, weight_of,
)
from app.core.cartan import Weight, Window
from app.core.errors import AlgebraError, WindowError
from app.core.linalg import solve
from app.core.loopalg import expand_symmetric, normal_order_H, straighten_rank1, sym_to_element
from app.core.scalars import ONE, ZERO, qint, v, vpow
from app.core.symfunc import partitions_of, theta_coeff
from app.utils.settings import Settings

logger = logging.getLogger(__name__)

# (E_{i,k}, E_{i,k}) = 1 / (v^-2 - 1)
E_NORM = ONE / (ONE / v ** 2 - ONE)
FPRIME_FACTOR = ONE / v ** 2 - ONE


class Verdict(Enum):
    """Resultado de la prueba de anulación en ventana."""

    NONZERO = "Nonzero"
    PRESUMED_ZERO = "PresumedZero"


def _weak_compositions(total, parts):
    """Tuplas de ``parts`` enteros >= 0 que suman ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for tail in _weak_compositions(total - first, parts - 1):
            yield (first,) + tail


def _bounded_compositions(total, parts, low, high):
    """Tuplas de ``parts`` enteros en [low, high] que suman ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(max(low, total - high * (parts - 1)),
                       min(high, total - low * (parts - 1)) + 1):
        for tail in _bounded_compositions(total - first, parts - 1, low, high):
            yield (first,) + tail


def counit(x):
    """Counidad: coeficiente de la palabra vacía (theta, xi, chi de grado 0 son 1)."""
    return x.coefficient(())


class PairingContext:
    """
    Datos de Cartan, ventana y lectura de (H, H) para el apareamiento.

    La memoria de pares de palabras no depende de la ventana y se comparte
    entre un contexto y sus versiones ampliadas.
    """

    def __init__(self, cartan, window, h_form=None, memo=None, spaces=None):
        """
        Inicializa el contexto.

        Args:
            cartan (CartanData): Datos de Cartan.
            window (Window): Ventana de grados de lazo.
            h_form (str): "cartan" o "diagonal".
            memo (dict): Memoria compartida de apareamientos de palabras.
            spaces (dict): Memoria compartida de espacios por ventana.
        """
        self.cartan = cartan
        self.window = window
        self.h_form = Settings.check_h_form(h_form or Settings.DEFAULT_H_FORM)
        self._memo = {} if memo is None else memo
        self._spaces = {} if spaces is None else spaces
        self._splits = {}
        self._theta = {}

    def widened(self, window):
        """Contexto con otra ventana que conserva la memoria de apareamientos."""
        if window == self.window:
            return self
        return PairingContext(self.cartan, window, self.h_form, self._memo, self._spaces)

    def cached(self, key, build):
        """Valor memorizado bajo ``key`` (la clave debe incluir la ventana)."""
        if key not in self._spaces:
            self._spaces[key] = build()
        return self._spaces[key]

    @property
    def rank(self):
        return self.cartan.rank

    # ------------------------------------------------------------------
    # Coproducto
    # ------------------------------------------------------------------

    def _letter_coproduct(self, letter):
        if letter.kind == E:
            terms = {((letter,), ()): ONE}
            for t in range(0, letter.index - self.window.dmin + 1):
                theta = make_letter(THETA, letter.node, t)
                left = () if theta is None else (theta,)
                accumulate(terms, (left, (Letter(E, letter.node, letter.index - t),)), ONE)
            result = TensorElement()
            result.terms = terms
            return result
        if letter.kind == H:
            return TensorElement({((letter,), ()): ONE, ((), (letter,)): ONE})
        if letter.kind in (THETA, XI, CHI):
            terms = {}
            for t in range(letter.index + 1):
                pieces = []
                for degree in (letter.index - t, t):
                    piece = make_letter(letter.kind, letter.node, degree)
                    pieces.append(() if piece is None else (piece,))
                accumulate(terms, tuple(pieces), ONE)
            result = TensorElement()
            result.terms = terms
            return result
        raise AlgebraError(f"coproducto no definido para la letra {letter.kind}")

    def coproduct(self, x):
        """
        Delta'(x) como producto torcido de los coproductos de las letras.

        La cola sum_t theta_t (x) E_{n-t} se trunca en n - t >= dmin; las
        letras b se desarrollan antes en sumas de potencias (primitivas).
        """
        x = expand_symmetric(x, kinds=(SCHUR,))
        result = TensorElement()
        for monomial, coeff in x.items():
            term = TensorElement.one()
            for letter in monomial:
                term = tensor_multiply(term, self._letter_coproduct(letter), self.cartan)
            result = result + term.scale(coeff)
        return result

    def _theta_element(self, node, t):
        key = (node, t)
        if key not in self._theta:
            self._theta[key] = sym_to_element(theta_coeff(node, t))
        return self._theta[key]

    def _split_coproduct(self, word, target):
        """
        Términos de Delta'(word) cuyo factor izquierdo tiene peso ``target``.

        Returns:
            dict {(palabra izquierda, palabra derecha): escalar}, con las
            theta del factor izquierdo desarrolladas en palabras de H.
        """
        key = (word, target)
        if key in self._splits:
            return self._splits[key]
        e_pos = [k for k, letter in enumerate(word) if letter.kind == E]
        h_pos = [k for k, letter in enumerate(word) if letter.kind == H]
        if len(e_pos) + len(h_pos) != len(word):
            raise AlgebraError("desarrolle las letras simétricas antes de aparear")
        need = target.qpart
        terms = {}
        for chosen in combinations(e_pos, sum(need)):
            counts = [0] * self.rank
            for k in chosen:
                counts[word[k].node - 1] += 1
            if tuple(counts) != tuple(need):
                continue
            chosen_set = set(chosen)
            rest_e = [k for k in e_pos if k not in chosen_set]
            exponent = 0
            for q in chosen:
                for k in rest_e:
                    if k < q:
                        exponent -= self.cartan.b(word[k].node, word[q].node)
            twist = vpow(exponent)
            chosen_degree = sum(word[k].index for k in chosen)
            for goes_left in product((False, True), repeat=len(h_pos)):
                h_left = {k for k, left in zip(h_pos, goes_left) if left}
                slack = target.loopdeg - chosen_degree - sum(word[k].index for k in h_left)
                if slack < 0 or (slack and not rest_e):
                    continue
                for slots in _weak_compositions(slack, len(rest_e)):
                    shift = dict(zip(rest_e, slots))
                    left = Element.one(twist)
                    right = []
                    for k, letter in enumerate(word):
                        if k in chosen_set or k in h_left:
                            left = left * Element.monomial((letter,))
                        elif k in shift:
                            t = shift[k]
                            if t:
                                left = left * self._theta_element(letter.node, t)
                            right.append(Letter(E, letter.node, letter.index - t))
                        else:
                            right.append(letter)
                    right = tuple(right)
                    for monomial, coeff in left.items():
                        accumulate(terms, (monomial, right), coeff)
        self._splits[key] = terms
        return terms

    # ------------------------------------------------------------------
    # Apareamiento
    # ------------------------------------------------------------------

    def _pair_letters(self, a, b):
        if a.kind != b.kind or a.index != b.index:
            return ZERO
        if a.kind == E:
            return E_NORM if a.node == b.node else ZERO
        m = a.index
        if self.h_form == "diagonal":
            if a.node != b.node:
                return ZERO
            factor = 2
        else:
            factor = self.cartan.b(a.node, b.node)
        if not factor:
            return ZERO
        return qint(m * factor) / (ONE * m * (ONE / v - v))

    def pair_words(self, x, y):
        """Apareamiento de dos palabras en E y H (memorizado)."""
        key = (x, y)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        if weight_of(x, self.rank) != weight_of(y, self.rank):
            value = ZERO
        elif not x and not y:
            value = ONE
        elif len(x) == 1 and len(y) == 1:
            value = self._pair_letters(x[0], y[0])
        elif len(y) == 1:
            value = self.pair_words(y, x)
        else:
            head, rest = y[0], y[1:]
            value = ZERO
            target = letter_weight(head, self.rank)
            for (left, right), coeff in self._split_coproduct(x, target).items():
                first = self.pair_words(left, (head,))
                if first:
                    second = self.pair_words(right, rest)
                    if second:
                        value += coeff * first * second
        self._memo[key] = value
        return value

    def pair(self, x, y):
        """
        Apareamiento de Hopf (x, y) extendido bilinealmente.

        Args:
            x (Element): Primer argumento.
            y (Element): Segundo argumento.

        Returns:
            Escalar; pares de pesos distintos dan cero.
        """
        x = expand_symmetric(x)
        y = expand_symmetric(y)
        total = ZERO
        for m1, c1 in x.items():
            for m2, c2 in y.items():
                value = self.pair_words(m1, m2)
                if value:
                    total += c1 * c2 * value
        return total

    def gram(self, rows, cols):
        """Matriz de Gram [[(r, c)]] de dos familias de elementos."""
        return [[self.pair(row, col) for col in cols] for row in rows]

    # ------------------------------------------------------------------
    # Operadores F'
    # ------------------------------------------------------------------

    @staticmethod
    def _require_E_only(x, operation):
        if not x.is_pure_E():
            raise AlgebraError(f"{operation} requiere palabras sólo en E")

    def fprime(self, i, n, x):
        """
        F'_{i,n}(x) = sum (v^-2 - 1)(E_{i,n}, x_(1)) x_(2).

        Raises:
            AlgebraError: Si x contiene letras distintas de E.
        """
        self.cartan.check_node(i)
        self._require_E_only(x, "F'")
        generator = (Letter(E, i, n),)
        target = letter_weight(generator[0], self.rank)
        terms = {}
        for monomial, coeff in x.items():
            for (left, right), split in self._split_coproduct(monomial, target).items():
                value = self.pair_words(generator, left)
                if value:
                    accumulate(terms, right, coeff * split * value * FPRIME_FACTOR)
        result = Element()
        result.terms = terms
        return result

    def fprime_power(self, i, n, x, power):
        """F'_{i,n} aplicado ``power`` veces."""
        for _ in range(power):
            if not x:
                break
            x = self.fprime(i, n, x)
        return x

    # ------------------------------------------------------------------
    # Palabras de la ventana y prueba de anulación
    # ------------------------------------------------------------------

    def window_words(self, weight, window=None, with_h=False):
        """
        Palabras de peso ``weight`` con grados de E en la ventana.

        Args:
            weight (Weight): Peso.
            window (Window): Ventana (por defecto la del contexto).
            with_h (bool): Añadir colas de H ordenadas que completan el grado.

        Returns:
            Lista ordenada de palabras.
        """
        window = window or self.window
        if not weight.is_positive():
            return []
        nodes = []
        for node, count in enumerate(weight.qpart, start=1):
            nodes.extend([node] * count)
        length = len(nodes)
        arrangements = list(multiset_permutations(nodes)) if nodes else [[]]
        if not with_h:
            totals = [(weight.loopdeg, ())]
        else:
            top = min(length * window.dmax, weight.loopdeg)
            totals = [(s, h) for s in range(length * window.dmin, top + 1)
                      for h in self._h_words(weight.loopdeg - s)]
        words = set()
        for total, h_word in totals:
            if not length and total:
                continue
            for degrees in _bounded_compositions(total, length, window.dmin, window.dmax):
                for arrangement in arrangements:
                    words.add(tuple(Letter(E, node, degree)
                                    for node, degree in zip(arrangement, degrees)) + h_word)
        return sorted(words, key=lambda word: tuple(l.sort_key() for l in word))

    def _h_words(self, degree):
        words = set()
        for partition in partitions_of(degree):
            for nodes in product(self.cartan.nodes(), repeat=len(partition)):
                words.add(tuple(sorted((Letter(H, node, part)
                                        for node, part in zip(nodes, partition)),
                                       key=Letter.sort_key)))
        return sorted(words, key=lambda word: tuple(l.sort_key() for l in word))

    def is_zero_windowed(self, x):
        """
        Aparea x con todas las palabras de la ventana de su peso.

        Returns:
            Verdict.NONZERO si algún apareamiento no se anula (afirmación
            segura); Verdict.PRESUMED_ZERO en otro caso (relativo a la ventana).
        """
        x = expand_symmetric(x)
        with_h = any(letter.kind == H for letter in x.letters())
        for weight, part in x.homogeneous_parts(self.rank).items():
            for word in self.window_words(weight, with_h=with_h):
                if self.pair(Element.monomial(word), part):
                    logger.debug("Testigo no nulo: %s", word)
                    return Verdict.NONZERO
        return Verdict.PRESUMED_ZERO

    def covering_window(self, x):
        """Ventana del contexto ampliada a los grados de E presentes en x."""
        degrees = x.E_degrees()
        if not degrees:
            return self.window
        return self.window.widened(min(degrees), max(degrees))

    def is_zero(self, x):
        """
        Prueba de anulación en el cociente.

        Con letras E de un solo nodo es exacta (ordenación normal y
        enderezamiento); en otro caso usa el apareamiento en la ventana que
        cubre los grados de x.
        """
        x = expand_symmetric(x)
        e_nodes = {letter.node for letter in x.letters() if letter.kind == E}
        if len(e_nodes) <= 1:
            ordered = normal_order_H(x, self.cartan)
            if not e_nodes:
                return not ordered
            return not straighten_rank1(ordered, e_nodes.pop(), self.cartan)
        context = self.widened(self.covering_window(x))
        return context.is_zero_windowed(x) is Verdict.PRESUMED_ZERO

    # ------------------------------------------------------------------
    # Descomposición W' + Z'
    # ------------------------------------------------------------------

    def decompose_Z(self, i, k, x):
        """
        Escribe x = w + z con w en W'_{i,k} y z en Z'_{i,k}.

        w es combinación de palabras E_{i,m} u con dmin <= m <= k y u en la
        ventana; z se anula bajo F'_{i,m} para esos m, lo que se impone
        apareando con las palabras E_{i,m} t de la ventana extendida
        [2 dmin - k, dmax].

        Returns:
            Tupla (w, z) de Element.

        Raises:
            WindowError: Si el sistema lineal es inconsistente en la ventana.
        """
        self.cartan.check_node(i)
        self._require_E_only(x, "decompose_Z")
        if not x or k < self.window.dmin:
            return Element(), x
        weight = x.weight(self.rank)
        if weight.qpart[i - 1] == 0:
            return Element(), x
        alpha = self.cartan.alpha(i)
        dmin, dmax = self.window.dmin, self.window.dmax
        test_window = Window(2 * dmin - k, max(dmax, 2 * dmin - k))
        unknowns, tests = [], []
        for m in range(dmin, k + 1):
            head = (Letter(E, i, m),)
            rest = weight - Weight(alpha, m)
            unknowns.extend(head + u for u in self.window_words(rest))
            tests.extend(head + t for t in self.window_words(rest, window=test_window))
        rhs = [self.pair(Element.monomial(test), x) for test in tests]
        if not unknowns:
            if any(rhs):
                raise WindowError(
                    f"x no se descompone en la ventana {self.window.to_text()}")
            return Element(), x
        matrix = [[self.pair_words(test, u) for u in unknowns] for test in tests]
        solution = solve(matrix, rhs) if tests else [ZERO] * len(unknowns)
        if solution is None:
            raise WindowError(
                f"sistema inconsistente para decompose_Z({i},{k}) en la ventana "
                f"{self.window.to_text()}; amplíe la ventana")
        w = Element()
        w.terms = {}
        for word, coeff in zip(unknowns, solution):
            if coeff:
                accumulate(w.terms, word, coeff)
        logger.debug("decompose_Z(%d,%d): %d incógnitas, %d ecuaciones",
                     i, k, len(unknowns), len(tests))
        return w, x - w

    def z_part(self, i, k, x):
        """Componente en Z'_{i,k}."""
        return self.decompose_Z(i, k, x)[1]
