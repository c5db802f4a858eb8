# -*- coding: utf-8 -*-

import pytest

from app.core.cartan import CartanData, Window
from app.core.errors import ConfigError
from app.core.pairing import PairingContext
from app.core.verify import Verifier, verify


@pytest.fixture
def small(sl2):
    return PairingContext(sl2, Window(0, 1))


@pytest.mark.parametrize("suite", ["scalars", "symfunc"])
def test_exact_suites_pass(small, suite):
    report = Verifier(small).run(suite)
    assert not report.failed
    assert report.lines
    assert all(line.startswith("CHECK ") and " PASS" in line for line in report.lines)


@pytest.mark.parametrize("suite", [
    "relations", "pairing", "fprime-lemmas", "qboson", "projectors",
    "kashiwara", "bar", "jets", "crystal", "pbw",
])
def test_suites_pass_on_small_window(small, suite):
    report = Verifier(small).run(suite)
    assert not report.failed, report.render()


def test_reports_are_reproducible(sl2):
    first = verify(sl2, Window(0, 1), "scalars")
    second = verify(sl2, Window(0, 1), "scalars")
    assert first.render() == second.render()


def test_unknown_suite(small):
    with pytest.raises(ConfigError):
        Verifier(small).run("nothing")


@pytest.mark.parametrize("h_form, noted", [("cartan", True), ("diagonal", False)])
def test_cartan_form_note_on_non_simply_laced(h_form, noted):
    b2 = CartanData.from_text("rank 2\nrow 2 -2\nrow -1 2\nsym 1 2\n")
    report = Verifier(PairingContext(b2, Window(0, 0), h_form)).run("pairing")
    lines = [line for line in report.lines if line.startswith("NOTE non-simply-laced nodes: cartan")]
    assert bool(lines) == noted
