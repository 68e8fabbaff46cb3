"""Extremal monomials, Newton polytope vertices and separating linear forms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ._simplex import feasible_point, in_convex_hull
from .laurent import Vector, leq, vsub
from .polynomial import MultiPolynomial, hilbert_polynomial
from .series import RationalSeries

# beyond this many candidates the LP solution itself is returned
_ENUMERATION_LIMIT = 200_000


def maximal_elements(points: Iterable[Vector]) -> List[Vector]:
    pts = sorted(set(points))
    return [r for r in pts if not any(r != s and leq(r, s) for s in pts)]


def extremal_monomials(p: MultiPolynomial) -> List[Vector]:
    """Exponents that divide no other exponent of ``p``."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no extremal monomials")
    return maximal_elements(p.support())


def newton_vertices(support: Iterable[Vector]) -> List[Vector]:
    """Vertices of the convex hull of a finite point set."""
    if isinstance(support, MultiPolynomial):
        if support.is_zero():
            raise ValueError("the zero polynomial has no Newton polytope")
        support = support.support()
    pts = sorted(set(map(tuple, support)))
    if not pts:
        raise ValueError("empty support")
    return [v for v in pts if not in_convex_hull(v, [w for w in pts if w != v])]


@dataclass(frozen=True)
class ExtremalReport:
    extremal: Dict[Vector, Fraction]
    vertex_extremal: Tuple[Vector, ...]
    all_positive: bool
    offending: Optional[Tuple[Vector, Fraction]]


def has_positive_extremal_coefficients(p: MultiPolynomial) -> ExtremalReport:
    if p.is_zero():
        return ExtremalReport({}, (), True, None)
    ext = extremal_monomials(p)
    coeffs = {r: p[r] for r in ext}
    vertices = set(newton_vertices(p.support()))
    bad = [r for r in sorted(ext, reverse=True) if coeffs[r] <= 0]
    offending = (bad[0], coeffs[bad[0]]) if bad else None
    return ExtremalReport(coeffs, tuple(r for r in ext if r in vertices), not bad, offending)


def _compositions(total: int, parts: int):
    """Nonnegative integer vectors with the given sum, in lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def separating_form(support: Iterable[Vector], v: Vector) -> Optional[Vector]:
    """Nonnegative integer ``sigma`` with ``sigma.v > sigma.w`` for every other ``w``.

    Such a form exists exactly when ``v`` is a vertex of the hull and no point
    ``v + u`` with ``u >= 0`` nonzero lies in the hull. Among valid forms the
    one with the smallest coordinate sum is returned, ties going to the
    lexicographically smallest.
    """
    pts = sorted(set(map(tuple, support)))
    v = tuple(v)
    if v not in pts:
        raise ValueError(f"{v} is not in the support")
    n = len(v)
    diffs = [vsub(v, w) for w in pts if w != v]
    if not diffs:
        return (0,) * n
    # sigma >= 0, sigma.(v - w) - s_w = 1, s_w >= 0
    k = len(diffs)
    A = [list(dv) + [-1 if j == i else 0 for j in range(k)] for i, dv in enumerate(diffs)]
    sol = feasible_point(A, [1] * k)
    if sol is None:
        return None
    scale = lcm(*(x.denominator for x in sol[:n]))
    base = tuple(int(x * scale) for x in sol[:n])

    def valid(sigma):
        return all(sum(a * b for a, b in zip(sigma, dv)) > 0 for dv in diffs)

    bound = sum(base)
    for s in range(bound + 1):
        if comb(s + n - 1, n - 1) > _ENUMERATION_LIMIT:
            return base
        for sigma in _compositions(s, n):
            if valid(sigma):
                return sigma
    return base


@dataclass(frozen=True)
class VertexCheck:
    passed: bool
    offending: Optional[Tuple[Vector, Fraction]]
    polynomial: MultiPolynomial


def nonneg_vertex_check(H: RationalSeries, I: Sequence[int], u: Vector) -> VertexCheck:
    """Necessary condition for ``H >= 0``: extremal vertex coefficients of a restriction are positive."""
    p = hilbert_polynomial(H.restrict(I, u)).p
    if p.is_zero():
        return VertexCheck(True, None, p)
    report = has_positive_extremal_coefficients(p)
    for r in sorted(report.vertex_extremal, reverse=True):
        if report.extremal[r] <= 0:
            return VertexCheck(False, (r, report.extremal[r]), p)
    return VertexCheck(True, None, p)
