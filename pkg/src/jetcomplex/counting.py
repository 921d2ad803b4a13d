"""Exact counts: binomials, path pairs, multiplicity and dimension.

All values are Python ints, so nothing overflows at any grid size.
"""
from __future__ import annotations

import math

from .grid import Cell, GridShape


def binomial(a: int, b: int) -> int:
    """``C(a, b)``, taken to be zero when ``b < 0`` or ``b > a``.

    The zero convention is load-bearing: the lower row of the pair
    determinant asks for ``C(i+n-3, i-2)`` which must vanish at ``i = 1``
    (and similarly ``C(m+j-3, m-2)`` is ``C(j-1, 0) = 1`` at ``m = 2``).
    """
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def path_count(start: Cell, end: Cell) -> int:
    dr, dc = end[0] - start[0], end[1] - start[1]
    if dr < 0 or dc < 0:
        return 0
    return binomial(dr + dc, dr)


def lgv_pair_count(shape: GridShape, pivot: Cell) -> int:
    """Number of disjoint pairs ``(1,1)->(i,n)``, ``(2,1)->(m,j)`` as a 2x2 determinant."""
    m, n = shape.m, shape.n
    i, j = shape.check_cell(pivot)
    a11 = binomial(i + n - 2, i - 1)
    a12 = binomial(m + j - 2, m - 1)
    a21 = binomial(i + n - 3, i - 2)
    a22 = binomial(m + j - 3, m - 2)
    return a11 * a22 - a12 * a21


def multiplicity_terms(shape: GridShape) -> dict[Cell, int]:
    """Per-pivot summands ``#x-paths * #y-pairs``; the pivot ``(m, n)`` is excluded."""
    m, n = shape.m, shape.n
    return {
        (i, j): binomial(m + n - i - j, m - i) * lgv_pair_count(shape, (i, j))
        for i in range(1, m + 1)
        for j in range(1, n + 1)
        if (i, j) != (m, n)
    }


def multiplicity_sum(shape: GridShape) -> int:
    return sum(multiplicity_terms(shape).values())


def multiplicity_closed(shape: GridShape) -> int:
    return binomial(shape.n + shape.m - 2, shape.m - 1) ** 2


def krull_dimension(shape: GridShape) -> int:
    return 2 * (shape.m + shape.n) - 2


def complex_dimension(shape: GridShape) -> int:
    return krull_dimension(shape) - 1
