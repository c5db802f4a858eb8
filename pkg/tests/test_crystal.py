# -*- coding: utf-8 -*-

import pytest

from app.core.algebra import Element
from app.core.cartan import Window
from app.core.crystal import (
    LatticeBasis, crystal_report, divided_power_E, fprime_orbit, generate_lattice,
    kashiwara_E, kashiwara_F, mod_v_basis, pi_projector, string_decompose,
)
from app.core.errors import NotInZError
from app.core.pairing import PairingContext
from app.core.scalars import ONE, qint, v

E0 = Element.E(1, 0)


def test_divided_power(sl2):
    assert divided_power_E(sl2, 1, 0, 2) == E0 * E0 * (ONE / qint(2))
    assert divided_power_E(sl2, 1, 0, 0, E0) == E0
    assert not divided_power_E(sl2, 1, 0, -1)


def test_fprime_orbit(ctx):
    assert fprime_orbit(ctx, 1, 0, E0) == [E0, Element.one()]
    assert fprime_orbit(ctx, 1, 0, Element()) == [Element()]


def test_projectors(ctx):
    assert pi_projector(ctx, 1, 0, 0, Element.one()) == Element.one()
    assert not pi_projector(ctx, 1, 0, 0, E0)
    assert pi_projector(ctx, 1, 0, 1, E0) == Element.one()


def test_projector_outside_Z(ctx):
    with pytest.raises(NotInZError):
        pi_projector(ctx, 1, 0, 0, Element.E(1, -1))


def test_string_decomposition(ctx, sl2):
    assert string_decompose(ctx, 1, 0, Element.one()).components == {0: Element.one()}
    assert string_decompose(ctx, 1, 0, E0).components == {1: Element.one()}
    square = string_decompose(ctx, 1, 0, E0 * E0)
    assert square.components == {2: Element.one(qint(2))}
    assert square.reassemble(sl2) == E0 * E0


def test_kashiwara_operators(ctx, sl2):
    assert kashiwara_E(ctx, 1, 0, Element.one()) == E0
    assert kashiwara_F(ctx, 1, 0, E0) == Element.one()
    assert not kashiwara_F(ctx, 1, 0, Element.one())
    assert ctx.is_zero(kashiwara_E(ctx, 1, 0, E0) - divided_power_E(sl2, 1, 0, 2))


def test_small_lattices(ctx):
    assert len(generate_lattice(ctx, 0)) == 1
    narrow = ctx.widened(Window(0, 0))
    lattice = generate_lattice(narrow, 1)
    assert len(lattice) == 2
    assert any(g == E0 for g in lattice.generators)


def test_mod_v_reduction(ctx):
    lattice = LatticeBasis.from_elements(ctx, [Element.one(), E0 * v])
    report = mod_v_basis(lattice)
    assert report.zeros == [1]
    assert report.size == 1
    assert not report.poles


def test_crystal_report_never_fails_on_items(ctx):
    narrow = ctx.widened(Window(0, 0))
    report = crystal_report(narrow, 1)
    assert report.lines[0].startswith("NOTE generators=2")
    assert any(line.startswith("ITEM 1 ") for line in report.lines)
    assert all(not line.startswith("CHECK") or " PASS" in line for line in report.lines)


def test_lattice_integral_at_depth_three(sl2):
    lattice = generate_lattice(PairingContext(sl2, Window(-1, 2)), 3)
    assert lattice.integral


def test_increasing_monomial_is_a_unit_vector(sl2):
    ctx = PairingContext(sl2, Window(0, 2))
    x = E0 * Element.E(1, 2)
    lattice = LatticeBasis.from_elements(ctx, [x])
    assert lattice.integral
    _, coords = lattice.coordinates_of(x)
    assert [c for c in coords if c] == [ONE]


def test_crystal_report_with_separated_letters(sl2):
    report = crystal_report(PairingContext(sl2, Window(0, 2)), 2)
    assert not report.failed, report.render()
