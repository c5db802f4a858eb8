# -*- coding: utf-8 -*-

from app.core.linalg import RowSpace, rank, solve, triangularize_over_A
from app.core.scalars import ONE, ZERO, K, v


def test_solve():
    matrix = [[ONE, ONE], [ONE, -ONE]]
    assert solve(matrix, [K(2), ZERO]) == [ONE, ONE]
    assert solve([], []) == []


def test_solve_inconsistent():
    assert solve([[ONE], [ONE]], [ONE, K(2)]) is None


def test_rank():
    assert rank([[ONE, v], [v, v ** 2]]) == 1
    assert rank([[ONE, ZERO], [ZERO, v]]) == 2
    assert rank([]) == 0


def test_row_space_coordinates():
    space = RowSpace()
    assert space.add([ONE, ZERO], "a")
    assert space.add([ONE, ONE], "b")
    assert not space.add([K(2), K(3)], "c")
    assert space.coordinates([ZERO, ONE]) == {"a": -ONE, "b": ONE}


def test_row_space_outside():
    space = RowSpace()
    space.add([ONE, ZERO], "a")
    assert space.coordinates([ZERO, ONE]) is None


def test_triangular_form():
    form = triangularize_over_A([[v, ZERO], [ONE, ONE]])
    assert form.rank == 2
    assert form.integral
