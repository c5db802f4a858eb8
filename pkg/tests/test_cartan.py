# -*- coding: utf-8 -*-

import pytest

from app.core.cartan import CartanData, Weight, Window, load_cartan
from app.core.errors import ConfigError, WindowError


def test_type_a(a2):
    assert a2.rank == 2
    assert a2.a(1, 2) == -1
    assert a2.b(1, 1) == 2
    assert a2.alpha(2) == (0, 1)
    assert list(a2.nodes()) == [1, 2]


def test_from_text_with_comments():
    cartan = CartanData.from_text("# B2\nrank 2\nrow 2 -2\nrow -1 2\nsym 1 2  # r_i\n")
    assert cartan.b(1, 2) == -2
    assert cartan.b(2, 2) == 4
    assert cartan.r(2) == 2


def test_round_trip_text(a2):
    assert CartanData.from_text(a2.to_text()) == a2


@pytest.mark.parametrize("text", [
    "row 2\n",
    "rank 2\nrow 2 -1\nrow -1 2\nrow 0 0\n",
    "rank 1\nrow 3\n",
    "rank 2\nrow 2 -2\nrow -1 2\nsym 1 1\n",
    "rank 1\nrow 2\nfoo 1\n",
    "rank 1\nrow x\n",
])
def test_invalid_configs(text):
    with pytest.raises(ConfigError):
        CartanData.from_text(text)


def test_load_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_cartan(str(tmp_path / "missing.cfg"))


def test_check_node(sl2):
    with pytest.raises(ConfigError):
        sl2.check_node(2)


def test_weight_arithmetic():
    a = Weight((1, 0), 2)
    b = Weight((1, 1), -1)
    assert a + b == Weight((2, 1), 1)
    assert (b - a).qpart == (0, 1)
    assert Weight((2, -1), 0).height == 3
    assert not Weight((0, -1), 0).is_positive()
    assert Weight((2,), 1).to_text() == "(2;1)"


def test_window():
    window = Window(-2, 3)
    assert list(window.degrees()) == [-2, -1, 0, 1, 2, 3]
    assert window.widened(low=-4) == Window(-4, 3)
    assert window.to_text() == "[-2,3]"
    with pytest.raises(WindowError):
        Window(2, 1)
