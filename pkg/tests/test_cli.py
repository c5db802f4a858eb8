# -*- coding: utf-8 -*-

import io

import pytest

from app.cli import run_command
from app.core.algebra import Element
from app.core.scalars import ONE, format_scalar, vpow
from app.utils.parser import serialize


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def test_pair(sl2_file):
    code, out, _ = run(["--cartan", sl2_file, "--dmin", "-2", "--dmax", "3",
                        "pair", "E(1,0)", "E(1,0)"])
    assert code == 0
    assert out == format_scalar(ONE / (vpow(-2) - ONE)) + "\n"


def test_straighten(sl2_file):
    code, out, _ = run(["--cartan", sl2_file, "straighten", "E(1,0)E(1,1)"])
    assert code == 0
    assert out == serialize(Element.E(1, 1) * Element.E(1, 0) * vpow(2)) + "\n"


def test_fprime(sl2_file):
    code, out, _ = run(["--cartan", sl2_file, "fprime", "1", "1", "E(1,1)E(1,0)"])
    assert code == 0
    assert out == serialize(Element.E(1, 0) * vpow(-4)) + "\n"


def test_jet_header(sl2_file):
    code, out, _ = run(["--cartan", sl2_file, "--dmin", "-2", "--dmax", "3",
                        "jet", "0", "E(1,1)E(1,0)"])
    assert code == 0
    assert out.startswith("weight=(2;1) level=0 window=[-2,3]\n")


def test_window_required(sl2_file):
    code, _, err = run(["--cartan", sl2_file, "jet", "0", "E(1,0)"])
    assert code == 2
    assert "--dmin" in err


def test_unknown_suite(sl2_file):
    code, _, _ = run(["--cartan", sl2_file, "--dmin", "0", "--dmax", "1", "verify", "nothing"])
    assert code == 2


@pytest.mark.parametrize("argv", [
    ["pair", "E(1,0", "E(1,0)"],
    ["pair", "E(2,0)", "E(1,0)"],
    ["frobnicate"],
    ["--dmin", "3", "--dmax", "1", "bar", "E(1,0)"],
])
def test_errors_exit_2(sl2_file, argv):
    code, out, err = run(["--cartan", sl2_file] + argv)
    assert code == 2
    assert not out
    assert err.startswith("qloop: ")


def test_missing_config(tmp_path):
    code, _, _ = run(["--cartan", str(tmp_path / "none.cfg"), "normal-order", "E(1,0)"])
    assert code == 2


def test_verify_suite(sl2_file):
    code, out, _ = run(["--cartan", sl2_file, "--dmin", "0", "--dmax", "1", "verify", "symfunc"])
    assert code == 0
    assert out.startswith("CHECK xi-chi-inverse PASS")


def test_lattice(sl2_file):
    code, out, _ = run(["--cartan", sl2_file, "--dmin", "0", "--dmax", "0",
                        "lattice", "--depth", "1"])
    assert code == 0
    assert out.splitlines()[0] == "1 val0=0 1"
    assert "NOTE generators=2" in out
