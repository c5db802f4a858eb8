# -*- coding: utf-8 -*-

import pytest

from app.core.cartan import CartanData, Window
from app.core.pairing import PairingContext
from app.core.scalars import ONE, vpow


@pytest.fixture
def sl2():
    return CartanData.type_a(1)


@pytest.fixture
def a2():
    return CartanData.type_a(2)


@pytest.fixture
def ctx(sl2):
    """sl2 con la ventana [-2, 3] de los ejemplos de referencia."""
    return PairingContext(sl2, Window(-2, 3))


@pytest.fixture
def ctx_a2(a2):
    return PairingContext(a2, Window(-1, 1))


@pytest.fixture
def c():
    """(E_{i,k}, E_{i,k}) = 1/(v^-2 - 1)."""
    return ONE / (vpow(-2) - ONE)


@pytest.fixture
def sl2_file(tmp_path):
    path = tmp_path / "sl2.cfg"
    path.write_text("# sl2\nrank 1\nrow 2\nsym 1\n", encoding="utf-8")
    return str(path)
