# -*- coding: utf-8 -*-

import numpy as np
import pytest

from app.core.algebra import SCHUR, Element, Letter
from app.core.errors import ParseError
from app.core.scalars import ONE, K, v, vpow
from app.utils.parser import parse_element, parse_scalar, serialize

E0, E1 = Element.E(1, 0), Element.E(1, 1)


def test_parse_word():
    assert parse_element("E(1,0)E(1,1)") == E0 * E1


def test_canonical_serialization():
    assert serialize(parse_element("(1-v^2)/(1) * E(1,0)")) == "(1 - v^2) * E(1,0)"
    assert serialize(Element()) == "0"
    assert serialize(Element.one()) == "1"


def test_signs_and_coefficients():
    assert parse_element("2 - 3 * E(1,0)") == Element.one(K(2)) - E0 * 3
    assert parse_element("-E(1,0) + v^-1 * E(1,1)") == -E0 + E1 * vpow(-1)


def test_unit_letters_and_schur():
    assert parse_element("theta(1,0)") == Element.one()
    assert parse_element("b(1,[2,1])").terms == {(Letter(SCHUR, 1, (2, 1)),): ONE}


def test_node_out_of_range(a2):
    with pytest.raises(ParseError):
        parse_element("E(3,0)", a2)


@pytest.mark.parametrize("text", ["E(1,0", "E(1,[1])", "b(1,2)", "H(1,0)", "foo"])
def test_invalid_elements(text):
    with pytest.raises(ParseError):
        parse_element(text)


def test_syntax_error_has_position():
    with pytest.raises(ParseError) as info:
        parse_element("E(1,0) +")
    assert info.value.position is not None


def test_parse_scalar():
    assert parse_scalar("v^-2") == vpow(-2)
    assert parse_scalar("(1 - v^2)/(v^3)") == (ONE - v ** 2) / v ** 3
    assert parse_scalar("-v") == -v


@pytest.mark.parametrize("x", [
    E0 * E1 * (ONE - v ** 2),
    E0 * vpow(-3) - E1 * (ONE / (ONE + v)),
    Element.one(K(2) * v ** 3) + E0 * E0,
    Element.generator("H", 1, 2) * E0 * (ONE / (vpow(-2) - ONE)),
])
def test_round_trip(x):
    assert parse_element(serialize(x)) == x


def _corpus(size, seed=7):
    rng = np.random.default_rng(seed)
    letters = [Element.E(i, d) for i in (1, 2) for d in range(-2, 3)]
    letters += [Element.generator("H", i, s) for i in (1, 2) for s in (1, 2)]
    letters += [Element.generator("xi", 1, 1), Element.generator("xi", 2, 2)]
    coefficients = [ONE, -ONE, K(3), vpow(-2), ONE - v ** 2, ONE / (ONE + v), v / (ONE - v ** 3)]
    corpus = []
    for _ in range(size):
        x = Element()
        for _ in range(int(rng.integers(1, 4))):
            term = Element.one(coefficients[int(rng.integers(len(coefficients)))])
            for _ in range(int(rng.integers(0, 4))):
                term = term * letters[int(rng.integers(len(letters)))]
            x = x + term
        corpus.append(x)
    return corpus


def test_round_trip_corpus(a2):
    corpus = _corpus(200)
    assert len(corpus) == 200
    for x in corpus:
        assert parse_element(serialize(x), a2) == x
