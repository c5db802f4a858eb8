# -*- coding: utf-8 -*-

import pytest

from app.core.errors import SymfuncError
from app.core.scalars import ONE, qint, v, vpow
from app.core.symfunc import (
    SymElement, check_partition, chi_coeff, pair_H, partitions_of, power_sum,
    schur, theta_coeff, xi_coeff,
)


def test_partitions_of():
    assert set(partitions_of(3)) == {(3,), (2, 1), (1, 1, 1)}
    assert partitions_of(0) == [()]
    assert partitions_of(-1) == []


def test_degree_one_coefficients():
    p1 = power_sum(1, (1,))
    assert xi_coeff(1, 1) == p1
    assert chi_coeff(1, 1) == -p1
    assert theta_coeff(1, 1) == p1 * (ONE / v - v)
    assert xi_coeff(1, 0) == SymElement.one(1)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_xi_chi_inverse(s):
    total = SymElement(1)
    for r in range(s + 1):
        total = total + xi_coeff(1, r) * chi_coeff(1, s - r)
    assert not total


def test_pair_H_power_sums():
    p1 = power_sum(1, (1,))
    assert pair_H(p1, p1) == qint(2) / (ONE / v - v)
    assert not pair_H(p1, power_sum(1, (2,)))
    assert not pair_H(p1, power_sum(2, (1,)))


def test_pair_H_with_cartan_entry():
    value = pair_H(power_sum(1, (1,)), power_sum(2, (1,)), b=-1)
    assert value == qint(-1) / (ONE / v - v)


def test_theta_norm():
    theta = theta_coeff(1, 1)
    assert pair_H(theta, theta) == vpow(-2) - vpow(2)


def test_schur():
    assert schur(1, ()) == SymElement.one(1)
    assert schur(1, (1,)) == xi_coeff(1, 1)
    assert schur(1, (2,)) == xi_coeff(1, 2)


def test_invalid_partition():
    with pytest.raises(SymfuncError):
        check_partition((1, 2))
    with pytest.raises(SymfuncError):
        check_partition((0,))


def test_mixed_nodes_raise():
    with pytest.raises(SymfuncError):
        power_sum(1, (1,)) + power_sum(2, (1,))


def test_schur_two_rows_jacobi_trudi():
    h1, h2 = xi_coeff(1, 1), xi_coeff(1, 2)
    assert schur(1, (1, 1)) == h1 * h1 - h2
    assert schur(1, (2,)) == h2
