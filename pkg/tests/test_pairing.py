# -*- coding: utf-8 -*-

import pytest

from app.core.algebra import H, THETA, Element, Letter, E
from app.core.cartan import Weight, Window
from app.core.errors import AlgebraError
from app.core.linalg import rank
from app.core.loopalg import quadratic_residual
from app.core.pairing import PairingContext, Verdict, counit
from app.core.scalars import ONE, vpow


E0, E1 = Element.E(1, 0), Element.E(1, 1)


def test_generator_norm(ctx, c):
    assert ctx.pair(E0, E0) == c
    assert not ctx.pair(E0, E1)


def test_two_letter_gram(ctx, c):
    assert ctx.pair(E1 * E0, E1 * E0) == vpow(-4) * c ** 2
    assert ctx.pair(E0 * E1, E1 * E0) == vpow(-2) * c ** 2
    gram = ctx.gram([E1 * E0, E0 * E1], [E1 * E0, E0 * E1])
    assert rank(gram) == 1


def test_symmetry(ctx):
    words = [E1 * E0, E0 * E1, Element.E(1, 2) * Element.E(1, -1)]
    for x in words:
        for y in words:
            assert ctx.pair(x, y) == ctx.pair(y, x)


def test_theta_against_generator(ctx, c):
    x = Element.generator(THETA, 1, 1) * E0
    assert ctx.pair(x, E1) == (vpow(-2) - vpow(2)) * c


def test_h_forms_differ_across_nodes(a2):
    h1, h2 = Element.generator(H, 1, 1), Element.generator(H, 2, 1)
    cartan_form = PairingContext(a2, Window(0, 1))
    diagonal = PairingContext(a2, Window(0, 1), h_form="diagonal")
    assert cartan_form.pair(h1, h2)
    assert not diagonal.pair(h1, h2)


def test_invalid_h_form(sl2):
    with pytest.raises(ValueError):
        PairingContext(sl2, Window(0, 1), h_form="other")


def test_coproduct_of_generator(ctx):
    delta = ctx.coproduct(E0)
    assert len(delta.terms) == 4
    assert delta.terms[((Letter(E, 1, 0),), ())] == ONE
    assert delta.terms[((), (Letter(E, 1, 0),))] == ONE
    assert delta.terms[((Letter(THETA, 1, 2),), (Letter(E, 1, -2),))] == ONE


def test_coproduct_of_theta(ctx):
    delta = ctx.coproduct(Element.generator(THETA, 1, 1))
    assert set(delta.terms) == {((Letter(THETA, 1, 1),), ()), ((), (Letter(THETA, 1, 1),))}


def test_counit():
    assert counit(Element.one(vpow(3)) + E0) == vpow(3)
    assert not counit(E0)


def test_fprime_values(ctx):
    assert not ctx.fprime(1, 0, Element.one())
    assert ctx.fprime(1, 0, E0) == Element.one()
    assert not ctx.fprime(1, 1, E0)
    assert ctx.fprime(1, 1, E1 * E0) == E0 * vpow(-4)


def test_fprime_requires_E_words(ctx):
    with pytest.raises(AlgebraError):
        ctx.fprime(1, 0, Element.generator(H, 1, 1))


def test_window_words(ctx):
    words = ctx.window_words(Weight((2,), 1), window=Window(0, 1))
    assert words == [(Letter(E, 1, 0), Letter(E, 1, 1)), (Letter(E, 1, 1), Letter(E, 1, 0))]
    assert ctx.window_words(Weight((-1,), 0)) == []


def test_zero_tests(ctx, sl2):
    residual = quadratic_residual(sl2, 1, 1, 0, 0)
    assert ctx.is_zero_windowed(residual) is Verdict.PRESUMED_ZERO
    assert ctx.is_zero_windowed(E0) is Verdict.NONZERO
    assert ctx.is_zero(residual)
    assert not ctx.is_zero(E0)


def test_decompose_Z(ctx):
    assert ctx.decompose_Z(1, -1, E0) == (Element(), E0)
    assert ctx.decompose_Z(1, 0, E0) == (E0, Element())
    assert ctx.decompose_Z(1, 0, Element.one()) == (Element(), Element.one())
    assert ctx.decompose_Z(1, -5, E0) == (Element(), E0)


def test_z_part_is_killed(ctx):
    x = E0 * Element.E(1, -1)
    z = ctx.z_part(1, -1, x)
    for m in (-2, -1):
        assert ctx.is_zero(ctx.fprime(1, m, z))
