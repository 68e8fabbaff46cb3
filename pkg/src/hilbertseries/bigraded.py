"""Positive Hilbert depth for bigraded series via staircase inequalities.

A declining sequence ``U = (u^1, ..., u^p)`` in ``Z^2`` has strictly increasing
first and strictly decreasing second coordinates. With ``down(U)`` the
consecutive meets, ``sigma_U(H) = sum_{U} h - sum_{down(U)} h``; a series has
positive depth exactly when every ``sigma_U`` is nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .decider import GradingSpec, decide_hilbert
from .laurent import LaurentPolynomial, Vector, join, join_all, leq, meet, vadd
from .series import (
    Box,
    DecompositionTerm,
    HilbertDecomposition,
    RationalSeries,
    decomposition_to_series,
    verify_decomposition,
)

Sequence2 = Tuple[Vector, ...]

DEFAULT_MARGIN = 5
GREEDY_STEP_CAP = 100_000


def _check_bivariate(H: RationalSeries):
    if H.nvars != 2 or not H.is_standard:
        raise ValueError("expected a bivariate series in standard form")


def down(U: Sequence[Vector]) -> Sequence2:
    return tuple(meet(U[i], U[i + 1]) for i in range(len(U) - 1))


def is_declining(U: Sequence[Vector], strict: bool = True) -> bool:
    for (x0, y0), (x1, y1) in zip(U, U[1:]):
        if strict and not (x0 < x1 and y0 > y1):
            return False
        if not strict and not (x0 <= x1 and y0 >= y1):
            return False
    return True


def sigma(H, U: Sequence[Vector]) -> Fraction:
    """``sigma_U(H)``; ``H`` is a series or a coefficient lookup."""
    U = [tuple(u) for u in U]
    h = H.coeff if isinstance(H, RationalSeries) else H
    return sum((h(u) for u in U), Fraction(0)) - sum((h(v) for v in down(U)), Fraction(0))


def normalize_weakly_declining(U: Sequence[Vector]) -> Sequence2:
    """Drop points of a weakly declining sequence without changing ``sigma``.

    On a tie in the first coordinate the later point equals the meet and is
    removed; on a tie in the second coordinate the earlier one is.
    """
    pts = [tuple(u) for u in U]
    if not is_declining(pts, strict=False):
        raise ValueError("sequence is not weakly declining")
    changed = True
    while changed:
        changed = False
        for i in range(len(pts) - 1):
            if pts[i][0] == pts[i + 1][0]:
                del pts[i + 1]
                changed = True
                break
            if pts[i][1] == pts[i + 1][1]:
                del pts[i]
                changed = True
                break
    return tuple(pts)


def default_box(H: RationalSeries, margin: int = DEFAULT_MARGIN) -> Box:
    lo, hi = H.numerator.lower_corner(), H.numerator.upper_corner()
    if lo is None:
        lo = hi = (0, 0)
    return Box((lo[0] - margin, lo[1] - margin), (hi[0] + margin, hi[1] + margin))


def _min_sigma(h: Dict[Vector, Fraction], box: Box) -> Tuple[Fraction, Sequence2]:
    """Minimum of ``sigma_U`` over declining ``U`` inside ``box``, with a minimiser.

    ``best[x, y]`` is the least ``sigma`` of a sequence ending at ``(x, y)``;
    appending ``(x, y)`` after ``(x', y')`` costs ``h(x, y) - h(x', y)``.
    ``R[y]`` carries ``min_{x' < x, y' > y} best[x', y'] - h(x', y)``
    across columns, so the whole search is linear in the box size.
    """
    (x0, y0), (x1, y1) = box.lo, box.hi
    best: Dict[Vector, Fraction] = {}
    pred: Dict[Vector, Optional[Vector]] = {}
    INF = None
    R: Dict[int, Optional[Tuple[Fraction, Vector]]] = {y: INF for y in range(y0, y1 + 1)}
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            val = h[(x, y)]
            r = R[y]
            if r is not None and r[0] < 0:
                best[(x, y)] = val + r[0]
                pred[(x, y)] = r[1]
            else:
                best[(x, y)] = val
                pred[(x, y)] = None
        # column minima of best strictly above y, ties to the lowest point
        colmin: Optional[Tuple[Fraction, Vector]] = None
        for y in range(y1, y0 - 1, -1):
            if colmin is not None:
                cand = colmin[0] - h[(x, y)]
                if R[y] is None or cand < R[y][0]:
                    R[y] = (cand, colmin[1])
            b = best[(x, y)]
            if colmin is None or b <= colmin[0]:
                colmin = (b, (x, y))
    low_val, low_pt = None, None
    for p in sorted(best):
        if low_val is None or best[p] < low_val:
            low_val, low_pt = best[p], p
    seq = [low_pt]
    while pred[seq[-1]] is not None:
        seq.append(pred[seq[-1]])
    return low_val, tuple(reversed(seq))


def find_st_violation(H: RationalSeries, box: Optional[Box] = None) -> Optional[Sequence2]:
    """A declining sequence in ``box`` with negative ``sigma``, minimising ``sigma``."""
    _check_bivariate(H)
    box = box or default_box(H)
    h = H.expand(box)
    val, seq = _min_sigma(h, box)
    return seq if val < 0 else None


# -- splitting off the low part ----------------------------------------------------------

def low_part_bound(D: HilbertDecomposition) -> Vector:
    """Smallest admissible ``N`` for :func:`split_low_part`, made deterministic."""
    shifts = [t.a for t in D.terms]
    base = join_all(shifts) or (0, 0)
    n1, n2 = base
    for t in D.terms:
        e = t.e
        if e[0] == 0:
            n1 = max(n1, t.a[0] + 1)
        if e[1] == 0:
            n2 = max(n2, t.a[1] + 1)
    return (n1, n2)


def split_low_part(D: HilbertDecomposition, N: Vector) -> Tuple[RationalSeries, HilbertDecomposition]:
    """Split ``D`` into ``H1 = Q1/(1-t1) + Q2/(1-t2)`` living below ``N`` and the rest.

    Uses ``1/(1-t_j)^k = t_j/(1-t_j)^k + 1/(1-t_j)^(k-1)`` to push shifts up.
    Afterwards ``c(H1, N) = 0``, ``c(H1, u ^ N) = c(H1, u)`` for all ``u``, and
    the remainder has no coefficients on ``{u <= N, u != N}``.
    """
    if D.nvars != 2:
        raise ValueError("split_low_part is bivariate")
    N = tuple(N)
    todo: List[Tuple[Fraction, Vector, Vector]] = []
    for t in D.terms:
        if not any(t.e):
            raise ValueError("decomposition has a polynomial part")
        todo.append((t.c, t.a, t.e))
    low: List[Tuple[Fraction, Vector, Vector]] = []
    high: List[Tuple[Fraction, Vector, Vector]] = []
    steps = 0
    while todo:
        steps += 1
        if steps > GREEDY_STEP_CAP:
            raise RuntimeError("split_low_part exceeded its step cap")
        c, a, e = todo.pop()
        if not leq(a, N) or a == N:
            high.append((c, a, e))
            continue
        if e == (1, 0) and a[1] < N[1]:
            low.append((c, a, e))
            continue
        if e == (0, 1) and a[0] < N[0]:
            low.append((c, a, e))
            continue
        if e[0] >= 1 and e[1] >= 1:
            j = 0 if a[0] < N[0] else 1
        else:
            j = 0 if e[1] == 0 else 1
        step = (1, 0) if j == 0 else (0, 1)
        rest = (e[0] - 1, e[1]) if j == 0 else (e[0], e[1] - 1)
        if not any(rest):
            raise ValueError(f"N = {N} is too small for this decomposition")
        todo.append((c, vadd(a, step), e))
        todo.append((c, a, rest))
    H1 = decomposition_to_series(HilbertDecomposition.from_triples(2, low)) if low else RationalSeries.zero(2)
    return H1, HilbertDecomposition.from_triples(2, high).merged()


# -- greedy row decomposition ---------------------------------------------------------------

@dataclass(frozen=True)
class GreedyResult:
    decomposition: Optional[HilbertDecomposition]
    witness: Optional[Sequence2]

    @property
    def ok(self) -> bool:
        return self.decomposition is not None


def _form_box(H: RationalSeries) -> Optional[Box]:
    lo, hi = H.numerator.lower_corner(), H.numerator.upper_corner()
    if lo is None:
        return None
    return Box(lo, (hi[0] + 1, hi[1] + 1))


def greedy_row_decompose(H3: RationalSeries) -> GreedyResult:
    """Decomposition without polynomial part of ``Q0 + Q1/(1-t1) + Q2/(1-t2)``.

    Rows are cleared from the bottom. In the current row, ``p`` is the last
    zero (one left of the support if there is none); columns left of ``p``
    become ``t^(i,l)/(1-t2)`` terms and the tail right of ``p`` loses
    ``mu t^(p+1,l)/(1-t1)`` with ``mu`` its minimum. When the row tail is
    zero every entry becomes a column term. A negative value means the
    staircase inequalities fail, and a violating sequence is returned.
    """
    _check_bivariate(H3)
    if any(x > 1 for x in H3.reduced().d):
        raise ValueError("series is not of the form Q0 + Q1/(1-t1) + Q2/(1-t2)")
    box = _form_box(H3)
    R = H3.reduced()
    one_minus = [LaurentPolynomial.one_minus((1, 0)), LaurentPolynomial.one_minus((0, 1))]
    num = R.numerator
    for j, dj in enumerate(R.d):
        if dj > 1:
            raise ValueError("series is not of the form Q0 + Q1/(1-t1) + Q2/(1-t2)")
        if dj == 0:
            num = num * one_minus[j]
    # G = num / ((1-t1)(1-t2)) throughout
    G = RationalSeries.standard(num, (1, 1))
    terms: List[Tuple[Fraction, Vector, Vector]] = []

    def fail() -> GreedyResult:
        U = find_st_violation(H3, box) if box is not None else None
        return GreedyResult(None, U)

    steps = 0
    while not num.is_zero():
        steps += 1
        if steps > GREEDY_STEP_CAP:
            raise RuntimeError("greedy row decomposition exceeded its step cap")
        lo, hi = num.lower_corner(), num.upper_corner()
        ell = lo[1]
        row = {i: G.coeff((i, ell)) for i in range(lo[0] - 1, hi[0] + 1)}
        if any(v < 0 for v in row.values()):
            return fail()
        if row[hi[0]] == 0:
            sub = [(v, (i, ell), (0, 1)) for i, v in row.items() if v]
        else:
            p = max(i for i, v in row.items() if v == 0)
            sub = [(v, (i, ell), (0, 1)) for i, v in row.items() if i < p and v]
            sub.append((min(v for i, v in row.items() if i > p), (p + 1, ell), (1, 0)))
        for c, a, e in sub:
            # t^a/(1-t2) = t^a (1-t1) / ((1-t1)(1-t2)), and symmetrically
            num = num - LaurentPolynomial.monomial(a, c) * one_minus[1 - e.index(1)]
            terms.append((c, a, e))
        G = RationalSeries.standard(num, (1, 1))
    D = HilbertDecomposition.from_triples(2, terms).merged()
    return GreedyResult(D, None)


# -- the decision pipeline ---------------------------------------------------------------------

@dataclass(frozen=True)
class DepthOutcome:
    verdict: str  # "positive-depth", "not-positive-depth", "inconclusive"
    certificate: Optional[HilbertDecomposition] = None
    witness: Optional[Sequence2] = None
    sigma: Optional[Fraction] = None
    box: Optional[Box] = None

    @property
    def positive(self) -> bool:
        return self.verdict == "positive-depth"


def decide_positive_depth(
    H: RationalSeries,
    g: Union[GradingSpec, Sequence[int]] = (2, 2),
    box: Optional[Box] = None,
) -> DepthOutcome:
    """Does the bigraded Hilbert series ``H`` have positive Hilbert depth?

    A quick search for a violated staircase inequality runs first. Otherwise a
    decomposition without polynomial part is built; if that fails, the search
    is repeated on a box that provably contains a violation.
    """
    _check_bivariate(H)
    if not isinstance(g, GradingSpec):
        g = GradingSpec(tuple(g))
    base = decide_hilbert(H, g)
    if not base.is_yes:
        raise ValueError("series is not a Hilbert series for this grading")
    box = box or default_box(H)
    U = find_st_violation(H, box)
    if U is not None:
        return DepthOutcome("not-positive-depth", witness=U, sigma=sigma(H, U), box=box)

    cert = base.certificate
    P = cert.polynomial_part
    rest = cert.nonpolynomial_part
    N = low_part_bound(rest)
    if P.terms:
        top = join_all(t.a for t in P.terms)
        N = join(N, (top[0] + 1, top[1] + 1))
    H1, H2 = split_low_part(rest, N)
    H3 = decomposition_to_series(P) + H1 if P.terms else H1
    greedy = greedy_row_decompose(H3) if not H3.is_zero() else GreedyResult(HilbertDecomposition(2, ()), None)
    if greedy.ok:
        out = (greedy.decomposition + H2).merged()
        assert not out.has_polynomial_part
        assert verify_decomposition(H, out), "depth certificate does not reproduce the series"
        return DepthOutcome("positive-depth", certificate=out)
    lo = H.numerator.lower_corner()
    wide = Box(tuple(map(min, lo, N)), N)
    U = find_st_violation(H, wide)
    if U is not None:
        return DepthOutcome("not-positive-depth", witness=U, sigma=sigma(H, U), box=wide)
    return DepthOutcome("inconclusive", box=wide)


# -- fractional monomial ideals -------------------------------------------------------------------

@dataclass(frozen=True)
class FractionalMonomialIdeal:
    """Ideal generated by ``X^{-u1} Y^{-u2}`` for each generator ``u``."""

    generators: Sequence2

    def __post_init__(self):
        gens = tuple(sorted(tuple(u) for u in self.generators))
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        for i, u in enumerate(gens):
            for v in gens[i + 1:]:
                if leq(u, v) or leq(v, u):
                    raise ValueError(f"generators {u} and {v} are comparable")
        object.__setattr__(self, "generators", gens)

    @property
    def sequence(self) -> Sequence2:
        return self.generators


def ideal_quotient_series(I: Union[FractionalMonomialIdeal, Sequence[Vector]]) -> LaurentPolynomial:
    """``H_I / H_S = sum t^{-u} - sum t^{-(u^i ^ u^{i+1})}``."""
    if not isinstance(I, FractionalMonomialIdeal):
        I = FractionalMonomialIdeal(tuple(I))
    U = I.sequence
    out = LaurentPolynomial(2)
    for u in U:
        out = out + LaurentPolynomial.monomial((-u[0], -u[1]))
    for v in down(U):
        out = out - LaurentPolynomial.monomial((-v[0], -v[1]))
    return out


@dataclass(frozen=True)
class ConditionCheck:
    passed: bool
    point: Optional[Vector]
    value: Optional[Fraction]
    sigma: Fraction


def check_condition_c(H: RationalSeries, I, box: Box) -> ConditionCheck:
    """Expand ``H * H_I / H_S`` on ``box``; its constant term is ``sigma_U(H)``."""
    _check_bivariate(H)
    L = ideal_quotient_series(I)
    prod = H * RationalSeries(L, ())
    s = prod.coeff((0, 0))
    for a, c in prod.expand(box).items():
        if c < 0:
            return ConditionCheck(False, a, c, s)
    return ConditionCheck(True, None, None, s)
