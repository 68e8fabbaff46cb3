"""Positive depth over ``k[X, Y]`` with ``deg X = alpha``, ``deg Y = beta`` coprime.

Hilbert series here are univariate. The staircase inequalities of the
bigraded case are replaced by inequalities indexed by fundamental couples
``[I, J]``: ``sum_I h_{n+i} <= sum_J h_{n+j}`` for every shift ``n``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .laurent import LaurentPolynomial
from .series import Box, RationalSeries


@dataclass(frozen=True)
class SemigroupSpec:
    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1:
            raise ValueError("generators must be positive")
        if gcd(self.alpha, self.beta) != 1:
            raise ValueError(f"{self.alpha} and {self.beta} are not coprime")

    @property
    def conductor(self) -> int:
        return self.alpha * self.beta - self.alpha - self.beta + 1

    @property
    def ab(self) -> int:
        return self.alpha * self.beta

    def contains(self, e: int) -> bool:
        if e < 0:
            return False
        return any((e - k * self.alpha) % self.beta == 0 for k in range(e // self.alpha + 1))


def _spec(s) -> SemigroupSpec:
    return s if isinstance(s, SemigroupSpec) else SemigroupSpec(*s)


def gaps(s) -> List[int]:
    s = _spec(s)
    return [e for e in range(s.conductor) if not s.contains(e)]


def gap_coordinates(e: int, s) -> Optional[Tuple[int, int]]:
    """The unique ``a, b >= 1`` with ``e = alpha*beta - a*alpha - b*beta``, or ``None``."""
    s = _spec(s)
    rest = s.ab - e
    for a in range(1, s.beta):
        r = rest - a * s.alpha
        if r >= s.beta and r % s.beta == 0:
            return a, r // s.beta
    return None


def gap_table(s) -> Dict[int, Tuple[int, int]]:
    return {e: gap_coordinates(e, s) for e in gaps(s)}


# -- fundamental couples -----------------------------------------------------------

@dataclass(frozen=True)
class FundamentalCouple:
    I: Tuple[int, ...]
    J: Tuple[int, ...]
    a: Tuple[int, ...] = field(default=(), compare=False)
    b: Tuple[int, ...] = field(default=(), compare=False)

    @property
    def m(self) -> int:
        return len(self.I) - 1

    def to_json(self) -> dict:
        return {"I": list(self.I), "J": list(self.J), "a": list(self.a), "b": list(self.b)}

    def __str__(self):
        return f"[{tuple(self.I)}, {tuple(self.J)}]"


def couple_from_ab(a: Sequence[int], b: Sequence[int], s) -> FundamentalCouple:
    s = _spec(s)
    al, be = s.alpha, s.beta
    m = len(a) - 1
    J = tuple(s.ab - a[k] * al - b[k] * be for k in range(m + 1))
    I = (0,) + tuple(s.ab - a[k - 1] * al - b[k] * be for k in range(1, m + 1))
    return FundamentalCouple(I, J, tuple(a), tuple(b))


def ab_of_couple(I: Sequence[int], J: Sequence[int], s) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Recover the sequences ``(a_k), (b_k)`` from ``J``; ``None`` if ``J`` has no such form."""
    s = _spec(s)
    m = len(J) - 1
    a, b = [], []
    for k, j in enumerate(J):
        rest = s.ab - j
        if k == 0:
            if rest % s.alpha:
                return None
            a.append(rest // s.alpha)
            b.append(0)
        elif k == m:
            if rest % s.beta:
                return None
            a.append(0)
            b.append(rest // s.beta)
        else:
            ab = gap_coordinates(j, s)
            if ab is None:
                return None
            a.append(ab[0])
            b.append(ab[1])
    if m == 0 and (a[0], b[0]) != (0, 0):
        return None
    return tuple(a), tuple(b)


def _conditions(I: Sequence[int], J: Sequence[int], s: SemigroupSpec) -> bool:
    al, be = s.alpha, s.beta
    m = len(I) - 1
    if len(J) != m + 1 or m < 0 or I[0] != 0:
        return False
    if any(s.contains(i) or i < 0 for i in I[1:]):
        return False
    if any(s.contains(j) or j < 0 for j in J[1:m]):
        return False
    if J[0] > s.ab or J[m] > s.ab:
        return False
    for k in range(m + 1):
        if (I[k] - J[k]) % al or not I[k] < J[k]:
            return False
    for k in range(m):
        if (J[k] - I[k + 1]) % be or not J[k] > I[k + 1]:
            return False
    if (J[m] - I[0]) % be or J[m] < I[0]:
        return False
    for k in range(1, m + 1):
        for l in range(k + 1, m + 1):
            d = abs(I[k] - I[l])
            if s.contains(d):
                return False
    return True


def couple_check(c: FundamentalCouple, s) -> bool:
    """Conditions (0)-(3) plus agreement with the ``(a, b)`` representation."""
    s = _spec(s)
    if not _conditions(c.I, c.J, s):
        return False
    ab = ab_of_couple(c.I, c.J, s)
    if ab is None:
        return False
    a, b = ab
    m = c.m
    if not (s.beta > a[0] and all(a[k] > a[k + 1] for k in range(m)) and a[m] == 0):
        return False
    if not (b[0] == 0 and all(b[k] < b[k + 1] for k in range(m)) and b[m] < s.alpha):
        return False
    if couple_from_ab(a, b, s) != c:
        return False
    if c.a and (tuple(c.a), tuple(c.b)) != (a, b):
        return False
    return True


def _sort_key(c: FundamentalCouple):
    return (c.m, c.I, c.J)


def fundamental_couples(s) -> List[FundamentalCouple]:
    """All fundamental couples, generated from their ``(a, b)`` sequences."""
    s = _spec(s)
    out = []
    for m in range(min(s.alpha, s.beta)):
        # a_0 > ... > a_{m-1} in [1, beta), b_1 < ... < b_m in [1, alpha)
        for a_top in itertools.combinations(range(s.beta - 1, 0, -1), m):
            for b_top in itertools.combinations(range(1, s.alpha), m):
                a = tuple(a_top) + (0,)
                b = (0,) + tuple(b_top)
                c = couple_from_ab(a, b, s)
                if _conditions(c.I, c.J, s):
                    out.append(c)
    return sorted(out, key=_sort_key)


def fundamental_couples_naive(s) -> List[FundamentalCouple]:
    """Direct search over sequences bounded by ``alpha*beta``; for cross-checking."""
    s = _spec(s)
    al, be, top = s.alpha, s.beta, s.ab
    gap_list = gaps(s)
    found = []

    def close(I, J):
        # try ending here: J[-1] is j_m, needs j_m = 0 mod beta and <= alpha*beta
        if J[-1] <= top and J[-1] % be == 0 and _conditions(I, J, s):
            ab = ab_of_couple(I, J, s)
            found.append(FundamentalCouple(tuple(I), tuple(J), *(ab or ((), ()))))

    def extend(I, J):
        close(I, J)
        # J[-1] becomes an inner j, so it must be a gap
        if len(J) > 1 and J[-1] not in gap_list:
            return
        for i in gap_list:
            if not (J[-1] > i and (J[-1] - i) % be == 0):
                continue
            if any(s.contains(abs(i - x)) for x in I[1:]):
                continue
            for j in range(i + al, top + 1, al):
                extend(I + [i], J + [j])

    for j0 in range(al, top + 1, al):
        extend([0], [j0])
    return sorted(set(found), key=_sort_key)


def couple_module_series(c: FundamentalCouple, s) -> LaurentPolynomial:
    """``t^{alpha beta} (sum_J t^{-j} - sum_I t^{-i})``."""
    s = _spec(s)
    if not couple_check(c, s):
        raise ValueError(f"{c} is not a fundamental couple for {s}")
    out = LaurentPolynomial(1)
    for j in c.J:
        out = out + LaurentPolynomial.monomial((s.ab - j,))
    for i in c.I:
        out = out - LaurentPolynomial.monomial((s.ab - i,))
    return out


# -- Hilbert series over the semigroup ring -------------------------------------------

@dataclass(frozen=True)
class _Coefficients:
    """Coefficients of ``F / ((1-t^alpha)(1-t^beta))``.

    From ``start`` on, every residue class mod ``alpha*beta`` is an arithmetic
    progression; below ``low`` everything vanishes.
    """

    series: RationalSeries
    low: int
    start: int
    period: int

    def table(self, hi: int) -> Dict[int, Fraction]:
        if hi < self.low:
            return {}
        exp = self.series.expand(Box((self.low,), (hi,)))
        return {k[0]: v for k, v in exp.items()}


def _numerator_ns(H: RationalSeries, s: SemigroupSpec) -> Optional[LaurentPolynomial]:
    if H.nvars != 1:
        raise ValueError("expected a univariate series")
    R = H.reduced()
    target = LaurentPolynomial.one_minus((s.alpha,)) * LaurentPolynomial.one_minus((s.beta,))
    return (R.numerator * target).divide_exact(R.denominator())


def _coefficients(F: LaurentPolynomial, s: SemigroupSpec) -> Optional[_Coefficients]:
    if F.is_zero():
        return None
    series = RationalSeries(F, [(s.alpha,), (s.beta,)])
    low = F.lower_corner()[0]
    # (1 - t^{ab})^2 H is a polynomial of degree <= deg F + 2ab - alpha - beta
    start = max(low, F.upper_corner()[0] - s.alpha - s.beta + 1)
    return _Coefficients(series, low, start, s.ab)


def is_hilbert_series_ns(H: RationalSeries, s) -> bool:
    """Integral, nonnegative, and ``H (1-t^alpha)(1-t^beta)`` a Laurent polynomial."""
    s = _spec(s)
    F = _numerator_ns(H, s)
    if F is None or not F.is_integral():
        return False
    co = _coefficients(F, s)
    if co is None:
        return True
    P = co.period
    h = co.table(co.start + 2 * P)
    if any(v < 0 for v in h.values()):
        return False
    return all(h[r + P] >= h[r] for r in range(co.start, co.start + P))


@dataclass(frozen=True)
class StarFailure:
    n: int
    couple: FundamentalCouple
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class StarResult:
    passed: bool
    failure: Optional[StarFailure] = None

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


def check_star(H: RationalSeries, s, nmax: Optional[int] = None) -> StarResult:
    """Check ``sum_I h_{n+i} <= sum_J h_{n+j}`` for every couple and every shift.

    Shifts run over all integers: below the support both sides vanish, and
    far out each side is an arithmetic progression along every residue class
    mod ``alpha*beta``, which settles the remaining shifts exactly. With
    ``nmax`` only shifts up to ``nmax`` are examined. The failure returned
    is the smallest shift, ties going to the first couple in sorted order.
    """
    s = _spec(s)
    if not is_hilbert_series_ns(H, s):
        raise ValueError("not a Hilbert series for this grading")
    F = _numerator_ns(H, s)
    co = _coefficients(F, s)
    if co is None:
        return StarResult(True)
    couples = fundamental_couples(s)
    P = co.period
    first = co.low - P
    direct_end = co.start + P  # exclusive
    last = direct_end + 2 * P if nmax is None else min(direct_end, nmax + 1)
    h = co.table(max(last, co.start + 3 * P) + P)

    def side(idx, n):
        return sum((h.get(n + i, Fraction(0)) for i in idx), Fraction(0))

    def test(n):
        for c in couples:
            lhs, rhs = side(c.I, n), side(c.J, n)
            if lhs > rhs:
                return StarFailure(n, c, lhs, rhs)
        return None

    stop = direct_end if nmax is None else last
    for n in range(first, stop):
        bad = test(n)
        if bad:
            return StarResult(False, bad)
    if nmax is not None and nmax < direct_end:
        return StarResult(True)
    # n = r + k*P with r in [start, start + P): the gap rhs - lhs is linear in k
    fails: List[Tuple[int, int, FundamentalCouple]] = []
    for order, c in enumerate(couples):
        for r in range(co.start, co.start + P):
            f0 = side(c.J, r) - side(c.I, r)
            slope = side(c.J, r + P) - side(c.I, r + P) - f0
            if f0 < 0:
                fails.append((r, order, c))
            elif slope < 0:
                k = int(f0 // -slope) + 1
                fails.append((r + k * P, order, c))
    if nmax is not None:
        fails = [f for f in fails if f[0] <= nmax]
    if not fails:
        return StarResult(True)
    n, _, c = min(fails, key=lambda f: (f[0], f[1]))
    hn = co.table(n + P)
    lhs = sum((hn.get(n + i, Fraction(0)) for i in c.I), Fraction(0))
    rhs = sum((hn.get(n + j, Fraction(0)) for j in c.J), Fraction(0))
    return StarResult(False, StarFailure(n, c, lhs, rhs))


@dataclass(frozen=True)
class SemigroupDepthOutcome:
    verdict: str  # "positive-depth" or "not-positive-depth"
    witness: Optional[StarFailure] = None

    @property
    def positive(self) -> bool:
        return self.verdict == "positive-depth"


def decide_positive_depth_ns(H: RationalSeries, s) -> SemigroupDepthOutcome:
    res = check_star(H, s)
    if res.passed:
        return SemigroupDepthOutcome("positive-depth")
    return SemigroupDepthOutcome("not-positive-depth", res.failure)


def hilbert_series_ring(s) -> RationalSeries:
    """``1/((1-t^alpha)(1-t^beta))``."""
    s = _spec(s)
    return RationalSeries(LaurentPolynomial.constant(1, 1), [(s.alpha,), (s.beta,)])
