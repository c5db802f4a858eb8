# -*- coding: utf-8 -*-

import math

import pytest
from sympy import Rational

from app.core.errors import ScalarError
from app.core.scalars import (
    ONE, ZERO, K, bar_scalar, divide, format_scalar, in_A, qbinom, qfact, qint,
    residue, unit_part, v, val0, vpow,
)


def test_qint_values():
    assert qint(3) == vpow(-2) + ONE + v ** 2
    assert qint(1) == ONE
    assert qint(0) == ZERO
    assert qint(-2) == -qint(2)


def test_qint_with_node_power():
    assert qint(2, 2) == vpow(-2) + vpow(2)


def test_qfact_and_qbinom():
    assert qfact(2) == ONE / v + v
    assert qfact(0) == ONE
    assert qbinom(3, 5) == ZERO
    assert qbinom(2, 1) == qint(2)
    assert qbinom(4, 0) == ONE


def test_qfact_negative_raises():
    with pytest.raises(ScalarError):
        qfact(-1)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 3), (0, 4), (5, 0)])
def test_qint_addition(m, n):
    assert qint(m + n) == vpow(-n) * qint(m) + vpow(m) * qint(n)


def test_bar_scalar():
    assert bar_scalar(v) == ONE / v
    a = (ONE + v) / (K(2) - v ** 3)
    assert bar_scalar(bar_scalar(a)) == a
    assert bar_scalar(qint(3)) == qint(3)
    assert bar_scalar(ZERO) == ZERO


def test_valuation():
    assert val0(v ** 2) == 2
    assert val0(ONE / (v + v ** 2)) == -1
    assert val0(ZERO) == math.inf
    assert in_A(ONE / (ONE + v))
    assert not in_A(ONE / v)


def test_residue():
    assert residue((ONE + v) / (K(2) + v)) == Rational(1, 2)
    assert residue(v) == 0
    with pytest.raises(ScalarError):
        residue(ONE / v)


def test_unit_part():
    assert unit_part(v ** 2 * (ONE + v)) == (2, ONE + v)


def test_divide_by_zero():
    with pytest.raises(ScalarError):
        divide(ONE, ZERO)


def test_format_scalar():
    assert format_scalar(ONE) == "(1)"
    assert format_scalar(ZERO) == "(0)"
    assert format_scalar(ONE - v ** 2) == "(1 - v^2)"
