#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Lectura y escritura de escalares y elementos.

Gramática de elementos::

    element := ['-'] term (('+' | '-') term)*
    term    := coeff '*' word | word | coeff
    word    := gen+
    gen     := E(i,l) | H(i,s) | xi(i,s) | chi(i,s) | theta(i,s) | b(i,[parts])

Un coeficiente es un producto/cociente de átomos (entero, v, v^k o una
expresión entre paréntesis), de modo que ``2 - 3 * E(1,0)`` se lee como
2 - 3 E(1,0).
"""

import pyparsing as pp

from app.core.algebra import SCHUR, Element, make_letter, monomial_key
from app.core.errors import AlgebraError, ParseError, SymfuncError
from app.core.scalars import ONE, K, divide, format_scalar, vpow

_grammar = {}


def _minus():
    minus = pp.Literal("-") | pp.Literal(chr(0x2212))
    minus.set_parse_action(lambda t: ["-"])
    return minus


def _fold_sum(tokens):
    items = tokens[0]
    value = items[0]
    for op, operand in zip(items[1::2], items[2::2]):
        value = value + operand if op == "+" else value - operand
    return value


def _fold_product(tokens):
    items = tokens[0]
    value = items[0]
    for op, operand in zip(items[1::2], items[2::2]):
        value = value * operand if op == "*" else divide(value, operand)
    return value


def _build_grammar():
    integer = pp.Word(pp.nums)
    signed = pp.Combine(pp.Optional(_minus()) + integer)
    number = integer.copy().set_parse_action(lambda t: K(int(t[0])))
    power = (pp.Suppress("v") + pp.Optional(pp.Suppress("^") + signed, "1"))
    power.set_parse_action(lambda t: vpow(int(t[0])))
    scalar = pp.Forward()
    atom = number | power | (pp.Suppress("(") + scalar + pp.Suppress(")"))
    scalar <<= pp.infix_notation(atom, [
        (_minus(), 1, pp.OpAssoc.RIGHT, lambda t: -t[0][1]),
        (pp.one_of("* /"), 2, pp.OpAssoc.LEFT, _fold_product),
        (pp.one_of("+ -") | _minus(), 2, pp.OpAssoc.LEFT, _fold_sum),
    ])

    coeff = atom + pp.ZeroOrMore(pp.one_of("* /") + atom)
    coeff.set_parse_action(lambda t: _fold_product([t]))

    name = pp.one_of("theta chi xi E H b")
    parts = pp.Group(pp.Suppress("[") + pp.Optional(pp.DelimitedList(signed)) + pp.Suppress("]"))
    index = signed | parts
    gen = pp.Group(name + pp.Suppress("(") + signed + pp.Suppress(",") + index + pp.Suppress(")"))
    word = pp.Group(pp.OneOrMore(gen))
    term = pp.Group(coeff + pp.Suppress("*") + word) | pp.Group(word) | pp.Group(coeff)

    first = pp.Group(pp.Optional(_minus(), "+") + term)
    other = pp.Group((pp.Literal("+") | _minus()) + term)
    element = first + pp.ZeroOrMore(other)
    return scalar, element


def _grammars():
    if not _grammar:
        _grammar["scalar"], _grammar["element"] = _build_grammar()
    return _grammar["scalar"], _grammar["element"]


def parse_scalar(text):
    """
    Lee un escalar como ``(1 - v^2)/(v^3)``.

    Raises:
        ParseError: Con la columna del error.
    """
    scalar, _ = _grammars()
    try:
        return scalar.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        raise ParseError(f"escalar inválido: {exc.msg}", exc.col) from None


def _letter(tokens, rank):
    kind, node, index = tokens[0], int(tokens[1]), tokens[2]
    if rank is not None and not 1 <= node <= rank:
        raise ParseError(f"nodo {node} fuera de rango (rango {rank})")
    if kind == SCHUR:
        if isinstance(index, str):
            raise ParseError("b requiere una partición entre corchetes")
        index = tuple(int(p) for p in index)
    elif not isinstance(index, str):
        raise ParseError(f"{kind} requiere un grado entero")
    try:
        return make_letter(kind, node, index)
    except (AlgebraError, SymfuncError) as exc:
        raise ParseError(str(exc)) from None


def parse_element(text, cartan=None):
    """
    Lee un elemento según la gramática del módulo.

    Args:
        text (str): Texto del elemento.
        cartan (CartanData): Si se da, valida los nodos contra su rango.

    Returns:
        Element.

    Raises:
        ParseError: Error de sintaxis (con columna) o nodo fuera de rango.
    """
    _, element = _grammars()
    try:
        parsed = element.parse_string(text, parse_all=True)
    except pp.ParseBaseException as exc:
        raise ParseError(f"elemento inválido: {exc.msg}", exc.col) from None
    rank = cartan.rank if cartan is not None else None
    result = Element()
    for sign, term in parsed:
        coeff, word = ONE, []
        for piece in term:
            if isinstance(piece, pp.ParseResults):
                for gen in piece:
                    letter = _letter(gen, rank)
                    if letter is not None:
                        word.append(letter)
            else:
                coeff = piece
        if sign == "-":
            coeff = -coeff
        result = result + Element.monomial(word, coeff)
    return result


def _letter_text(letter):
    if letter.kind == SCHUR:
        return f"b({letter.node},[{','.join(str(p) for p in letter.index)}])"
    return f"{letter.kind}({letter.node},{letter.index})"


def word_text(word):
    return "".join(_letter_text(letter) for letter in word) if word else "1"


def _term_text(coeff, body):
    return body if coeff == ONE else f"{format_scalar(coeff)} * {body}"


def serialize(x):
    """Texto canónico: monomios ordenados y escalares en forma canónica."""
    if not x:
        return "0"
    return " + ".join(_term_text(x.coefficient(m), word_text(m)) for m in x.monomials())


def serialize_tensor(t):
    """Texto de un TensorElement: ``(c) * izquierda (x) derecha``."""
    if not t:
        return "0"
    pairs = sorted(t.terms, key=lambda pair: (monomial_key(pair[0]), monomial_key(pair[1])))
    return " + ".join(
        _term_text(t.terms[pair], f"{word_text(pair[0])} (x) {word_text(pair[1])}")
        for pair in pairs)
