"""Exact phase-one simplex for ``A x = b, x >= 0`` over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence


def feasible_point(A: Sequence[Sequence], b: Sequence) -> Optional[List[Fraction]]:
    """A basic feasible solution of ``A x = b, x >= 0``, or ``None`` if there is none.

    Bland's rule keeps the pivoting finite; everything is exact.
    """
    m = len(A)
    nx = len(A[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * nx
    # tableau rows: [x (nx) | artificials (m) | rhs]
    rows = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        rows.append(row + art + [rhs])
    width = nx + m
    basis = [nx + i for i in range(m)]
    # objective: minimise sum of artificials, expressed in nonbasic terms
    obj = [Fraction(0)] * (width + 1)
    for row in rows:
        for j in range(width + 1):
            obj[j] -= row[j]
    for i in range(m):
        obj[nx + i] += 1

    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:  # unbounded cannot happen for phase one
            break
        piv = rows[leave][enter]
        rows[leave] = [x / piv for x in rows[leave]]
        for i in range(m):
            if i != leave and rows[i][enter]:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[leave])]
        if obj[enter]:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, rows[leave])]
        basis[leave] = enter

    if -obj[-1] != 0:
        return None
    x = [Fraction(0)] * width
    for i, j in enumerate(basis):
        x[j] = rows[i][-1]
    return x[:nx]


def in_convex_hull(point: Sequence[int], others: Sequence[Sequence[int]]) -> bool:
    """Is ``point`` a convex combination of ``others``?"""
    if not others:
        return False
    n = len(point)
    A = [[w[i] for w in others] for i in range(n)] + [[1] * len(others)]
    b = list(point) + [1]
    return feasible_point(A, b) is not None
