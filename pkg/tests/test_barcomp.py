# -*- coding: utf-8 -*-

import pytest
from sympy import Rational, oo

from app.core.algebra import E, XI, Element, Letter
from app.core.barcomp import (
    bar_element, bar_generator, canonical, currents_residual, drop_filtered, e1_current,
    jet, jet_multiply, padding_level, r_m, relation_level, slope, truncate,
    w_filtration_span,
)
from app.core.cartan import Weight, Window
from app.core.errors import PaddingError
from app.core.loopalg import quadratic_residual, serre_residual
from app.core.pairing import PairingContext
from app.core.scalars import ONE, v, vpow

E0, E1 = Element.E(1, 0), Element.E(1, 1)


@pytest.fixture
def tight(sl2):
    """Ventana [0, 3]: dmin = l - 1 para l = 1."""
    return PairingContext(sl2, Window(0, 3))


def test_slope():
    assert slope(Weight((2,), 3)) == Rational(3, 2)
    assert slope(Weight((0,), 4)) == oo


def test_bar_generator_first_terms(tight):
    image = bar_generator(tight, 1, 1)
    assert image.terms == {
        (Letter(E, 1, 1),): ONE,
        (Letter(E, 1, 0), Letter(XI, 1, 1)): -(ONE / v - v),
    }


def test_bar_on_scalars(tight):
    assert bar_element(tight, Element.one(v)) == Element.one(ONE / v)
    assert bar_element(tight, Element.generator(XI, 1, 2)) == Element.generator(XI, 1, 2)


def test_bar_involutive(tight):
    twice = bar_element(tight, bar_generator(tight, 1, 1))
    assert canonical(twice) == E1


def test_currents_identity(tight):
    assert not currents_residual(tight, 1, 1)


def test_e1_current_bar_invariant(tight):
    current = e1_current(tight, 1, 1)
    assert canonical(bar_element(tight, current)) == canonical(current)


def test_truncate(tight):
    x = Element.E(1, -1) + E0
    assert truncate(tight, x) == E0


def test_filtration_is_monotone(ctx):
    weight = Weight((2,), 1)
    low = set(w_filtration_span(ctx, weight, -1))
    high = set(w_filtration_span(ctx, weight, 1))
    assert low <= high


def test_jet_of_filtered_generator(ctx):
    result = jet(ctx, E0, 0)
    assert not result.value
    assert r_m(ctx, E0, 0) == E0


def test_jet_below_filtration(ctx):
    assert jet(ctx, E0, -10).value == E0


def test_jet_text(ctx):
    assert jet(ctx, E0, -10).to_text() == "weight=(1;0) level=-10 window=[-2,3]\nE(1,0)\n"


def test_jet_multiply_padding(ctx):
    a = jet(ctx, E0, 3)
    b = jet(ctx, E0, 3)
    with pytest.raises(PaddingError) as info:
        jet_multiply(ctx, a, b, 0)
    assert info.value.required_level == 0
    c = jet(ctx, E0, 0)
    with pytest.raises(PaddingError) as info:
        jet_multiply(ctx, c, b, 0)
    assert info.value.required_level == 0
    high = jet(ctx, Element.E(1, 2), 0)
    with pytest.raises(PaddingError) as info:
        jet_multiply(ctx, high, jet(ctx, E0, -1), 0)
    assert info.value.required_level == -2


def test_jet_multiply_unit(ctx):
    unit = jet(ctx, Element.one(), 0)
    product = jet_multiply(ctx, unit, jet(ctx, E1, 0), 0)
    assert product.value == jet(ctx, E1, 0).value


def test_padding_level():
    assert padding_level(Weight((1,), 0), 0) == 0
    assert padding_level(Weight((1,), 2), 0) == -2
    assert padding_level(Weight((1,), -2), 1) == 1
    assert padding_level(Weight((0,), 0), 3) == 3
    assert padding_level(Weight((2,), 5), 1) == -2


def test_jet_multiply_zero_product_keeps_weight(ctx):
    a = jet(ctx, E0, 0)
    product = jet_multiply(ctx, a, jet(ctx, E1, 0), 0)
    assert not product.value
    assert product.weight == Weight((1,), 0) + Weight((1,), 1)


def test_jet_multiply_matches_product_on_window(ctx):
    degrees = range(-2, 4)
    for da in degrees:
        a = Element.E(1, da)
        for db in degrees:
            b = Element.E(1, db)
            for n in degrees:
                ja = jet(ctx, a, n)
                level = padding_level(ja.weight, n)
                exact = jet(ctx, a * b, n).value
                for pad in (level, level - 1):
                    product = jet_multiply(ctx, ja, jet(ctx, b, pad), n)
                    assert product.value == exact, (da, db, n, pad)


def test_jet_of_unsorted_pair(ctx):
    x = Element.E(1, 2) * E0
    assert jet(ctx, x, 0).value == Element.E(1, 1) * Element.E(1, 1) * (vpow(-2) - ONE)
    assert not jet(ctx, E1 * E0, 0).value


def test_jet_idempotent_and_complementary(ctx):
    x = Element.E(1, 3) * Element.E(1, -1) * 2 + Element.E(1, 1) * Element.E(1, 1)
    first = jet(ctx, x, 0)
    assert jet(ctx, first.value, 0).value == first.value
    assert r_m(ctx, x, 0) + first.value == x


def test_drop_filtered_uses_pure_E_prefixes():
    word = Element.E(1, 1) * Element.E(1, -2) * Element.generator(XI, 1, 1)
    assert not drop_filtered(word, 0)
    assert drop_filtered(word, Rational(-2, 3)) == word
    late = Element.E(1, 1) * Element.generator(XI, 1, 1) * Element.E(1, -5)
    assert drop_filtered(late, 0) == late


def test_relation_level():
    assert relation_level(-3, 3) == Rational(-1, 2)
    assert relation_level(0, 1) == 0
    assert relation_level(-2, -1) == -2


@pytest.mark.parametrize("l, m", [(0, 0), (1, 1), (0, 2), (2, 1)])
def test_bar_preserves_quadratic_relation(tight, sl2, l, m):
    image = bar_element(tight, quadratic_residual(sl2, 1, 1, l, m))
    level = relation_level(0, max(l, m) + 1)
    assert not jet(tight, image, level).value


def test_bar_preserves_serre_relation(a2):
    local = PairingContext(a2, Window(-1, 1))
    image = bar_element(local, serre_residual(a2, 1, 2, (0, 0), 0))
    value = jet(local, image, Rational(-1, 3)).value
    assert local.is_zero(value)
