"""Rational multigraded series ``Q / prod (1 - t^v)`` and Hilbert decompositions."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .laurent import (
    LaurentPolynomial,
    Vector,
    as_fraction,
    embed,
    factor_one_minus,
    join_all,
    leq,
    meet_all,
    unit,
    vadd,
    vsub,
    zero,
)


def geometric_weight(k: int, d: int) -> int:
    """Coefficient of ``t^k`` in ``1/(1-t)^d``."""
    if k < 0:
        return 0
    if d == 0:
        return 1 if k == 0 else 0
    return comb(k + d - 1, d - 1)


def _multiset_max(a: Sequence[Vector], b: Sequence[Vector]) -> Tuple[Vector, ...]:
    ca, cb = Counter(a), Counter(b)
    out = ca | cb
    return tuple(sorted(out.elements()))


def _multiset_diff(a: Sequence[Vector], b: Sequence[Vector]) -> Tuple[Vector, ...]:
    out = Counter(a)
    out.subtract(Counter(b))
    if any(v < 0 for v in out.values()):
        raise ValueError("multiset difference undefined")
    return tuple(sorted(out.elements()))


def denominator_polynomial(factors: Iterable[Vector], nvars: int) -> LaurentPolynomial:
    out = LaurentPolynomial.constant(nvars)
    for v in factors:
        out = out * LaurentPolynomial.one_minus(v)
    return out


@dataclass(frozen=True)
class Box:
    lo: Vector
    hi: Vector

    def __post_init__(self):
        object.__setattr__(self, "lo", tuple(self.lo))
        object.__setattr__(self, "hi", tuple(self.hi))
        if len(self.lo) != len(self.hi):
            raise ValueError("box corners differ in length")
        if not leq(self.lo, self.hi):
            raise ValueError(f"empty box {self.lo}..{self.hi}")

    @classmethod
    def cube(cls, n: int, lo: int, hi: int) -> "Box":
        return cls((lo,) * n, (hi,) * n)

    @property
    def nvars(self) -> int:
        return len(self.lo)

    def points(self) -> Iterator[Vector]:
        return itertools.product(*(range(a, b + 1) for a, b in zip(self.lo, self.hi)))

    def __contains__(self, a) -> bool:
        return leq(self.lo, a) and leq(a, self.hi)

    def hull(self, other: "Box") -> "Box":
        return Box(tuple(map(min, self.lo, other.lo)), tuple(map(max, self.hi, other.hi)))


class RationalSeries:
    """Formal Laurent series ``numerator * prod_v 1/(1 - t^v)``.

    ``factors`` is a sorted tuple of nonzero vectors in ``N^n`` (a multiset).
    Equality is series equality, decided by cross multiplication.
    """

    __slots__ = ("numerator", "factors", "_count_cache")

    def __init__(self, numerator: LaurentPolynomial, factors: Iterable[Vector] = ()):
        factors = tuple(sorted(tuple(v) for v in factors))
        for v in factors:
            if len(v) != numerator.nvars:
                raise ValueError(f"factor {v} does not match {numerator.nvars} variables")
            if min(v, default=0) < 0 or not any(v):
                raise ValueError(f"denominator factor 1 - t^{list(v)} is not allowed")
        self.numerator = numerator
        self.factors = factors
        self._count_cache: Dict[Vector, int] = {}

    # constructors
    @classmethod
    def standard(cls, numerator: LaurentPolynomial, d: Sequence[int]) -> "RationalSeries":
        n = numerator.nvars
        if len(d) != n:
            raise ValueError("denominator exponent vector has the wrong length")
        return cls(numerator, [unit(n, i) for i in range(n) for _ in range(d[i])])

    @classmethod
    def polynomial(cls, p: LaurentPolynomial) -> "RationalSeries":
        return cls(p, ())

    @classmethod
    def constant(cls, nvars: int, c=1) -> "RationalSeries":
        return cls(LaurentPolynomial.constant(nvars, c), ())

    @classmethod
    def zero(cls, nvars: int) -> "RationalSeries":
        return cls(LaurentPolynomial(nvars), ())

    @classmethod
    def term(cls, c, a: Vector, factors: Iterable[Vector]) -> "RationalSeries":
        return cls(LaurentPolynomial.monomial(a, c), factors)

    # shape
    @property
    def nvars(self) -> int:
        return self.numerator.nvars

    @property
    def is_standard(self) -> bool:
        return all(sum(v) == 1 for v in self.factors)

    @property
    def d(self) -> Vector:
        """Exponents of ``prod (1 - t_i)^{d_i}``; only for standard form."""
        if not self.is_standard:
            raise ValueError("series denominator is not in standard form")
        out = [0] * self.nvars
        for v in self.factors:
            out[v.index(1)] += 1
        return tuple(out)

    def denominator(self) -> LaurentPolynomial:
        return denominator_polynomial(self.factors, self.nvars)

    def support_lower_bound(self) -> Optional[Vector]:
        """Every nonzero coefficient sits at or above this vector."""
        return self.numerator.lower_corner()

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    # arithmetic
    def _coerce(self, other) -> "RationalSeries":
        if isinstance(other, RationalSeries):
            if other.nvars != self.nvars:
                raise ValueError(f"dimension mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, LaurentPolynomial):
            return RationalSeries(other, ())
        return RationalSeries.constant(self.nvars, other)

    def __add__(self, other) -> "RationalSeries":
        other = self._coerce(other)
        if self.factors == other.factors:
            return RationalSeries(self.numerator + other.numerator, self.factors)
        common = _multiset_max(self.factors, other.factors)
        left = denominator_polynomial(_multiset_diff(common, self.factors), self.nvars)
        right = denominator_polynomial(_multiset_diff(common, other.factors), self.nvars)
        return RationalSeries(self.numerator * left + other.numerator * right, common)

    __radd__ = __add__

    def __neg__(self) -> "RationalSeries":
        return RationalSeries(-self.numerator, self.factors)

    def __sub__(self, other) -> "RationalSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalSeries":
        if isinstance(other, (int, Fraction)):
            return RationalSeries(self.numerator * other, self.factors)
        other = self._coerce(other)
        return RationalSeries(self.numerator * other.numerator, self.factors + other.factors)

    __rmul__ = __mul__

    def shift(self, v: Vector) -> "RationalSeries":
        return RationalSeries(self.numerator.shift(v), self.factors)

    def series_equal(self, other) -> bool:
        other = self._coerce(other)
        lhs = self.numerator * other.denominator()
        rhs = other.numerator * self.denominator()
        return lhs == rhs

    def __eq__(self, other):
        if isinstance(other, (RationalSeries, LaurentPolynomial, int, Fraction)):
            return self.series_equal(other)
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        from .formats import format_series
        return f"RationalSeries({format_series(self)!r})"

    # canonical forms
    def reduced(self) -> "RationalSeries":
        """Cancel denominator factors that divide the numerator exactly."""
        num = self.numerator
        if num.is_zero():
            return RationalSeries(num, ())
        kept: List[Vector] = []
        for v in self.factors:
            q = num.div_one_minus(v)
            if q is None:
                kept.append(v)
            else:
                num = q
        return RationalSeries(num, kept)

    # coefficients
    def _count(self, w: Vector) -> int:
        """Coefficient of ``t^w`` in ``prod 1/(1 - t^v)``."""
        if self.is_standard:
            d = self.d
            out = 1
            for k, di in zip(w, d):
                out *= geometric_weight(k, di)
                if not out:
                    return 0
            return out
        if w not in self._count_cache:
            self._count_cache[w] = _count_general(w, self.factors)
        return self._count_cache[w]

    def coeff(self, a: Vector) -> Fraction:
        a = tuple(a)
        if len(a) != self.nvars:
            raise ValueError("exponent has the wrong length")
        total = Fraction(0)
        for u, c in self.numerator.items():
            w = vsub(a, u)
            if min(w, default=0) < 0:
                continue
            k = self._count(w)
            if k:
                total += c * k
        return total

    def expand(self, box: Box) -> Dict[Vector, Fraction]:
        """All coefficients in ``box``, computed exactly."""
        if box.nvars != self.nvars:
            raise ValueError("box dimension does not match the series")
        if self.is_standard:
            return {a: self.coeff(a) for a in box.points()}
        table = _count_table(self.factors, box, self.numerator)
        out = {}
        for a in box.points():
            total = Fraction(0)
            for u, c in self.numerator.items():
                k = table.get(vsub(a, u), 0)
                if k:
                    total += c * k
            out[a] = total
        return out

    def first_negative(self, box: Box) -> Optional[Tuple[Vector, Fraction]]:
        for a, c in self.expand(box).items():
            if c < 0:
                return a, c
        return None

    # restriction
    def restrict(self, I: Iterable[int], u: Vector) -> "RationalSeries":
        """The sub-series on ``u + N^I``, re-indexed to the variables in ``I``.

        ``I`` holds 0-based variable indices. Requires standard form.
        """
        if not self.is_standard:
            raise ValueError("restriction needs a standard-form denominator")
        n = self.nvars
        I = tuple(sorted(set(I)))
        if any(i < 0 or i >= n for i in I):
            raise ValueError(f"variable subset {I} out of range")
        u = tuple(u)
        d = self.d

        # extract the t_j^{u_j} slice for every j outside I
        terms: Dict[Vector, Fraction] = {}
        outside = [j for j in range(n) if j not in I]
        for e, c in self.numerator.items():
            weight = 1
            for j in outside:
                weight *= geometric_weight(u[j] - e[j], d[j])
                if not weight:
                    break
            if weight:
                key = tuple(e[i] for i in I)
                terms[key] = terms.get(key, Fraction(0)) + c * weight
        num = LaurentPolynomial(len(I), terms)
        dI = tuple(d[i] for i in I)

        # truncate each remaining coordinate at u_i
        for pos, i in enumerate(I):
            num = _truncate_below(num, dI, pos, u[i])
        shift = tuple(-u[i] for i in I)
        return RationalSeries.standard(num.shift(shift), dI)


def _truncate_below(num: LaurentPolynomial, d: Vector, pos: int, bound: int) -> LaurentPolynomial:
    """Numerator of the part of ``num / (1-t)^d`` with ``pos``-exponent >= ``bound``."""
    if num.is_zero():
        return num
    lo = min(e[pos] for e in num)
    if lo >= bound:
        return num
    n = num.nvars
    slices: Dict[int, Dict[Vector, Fraction]] = {}
    for e, c in num.items():
        base = e[:pos] + (0,) + e[pos + 1:]
        slices.setdefault(e[pos], {})[base] = c
    low = LaurentPolynomial(n)
    for level in range(lo, bound):
        # coefficient series of t_pos^level, with its own denominator dropped
        acc: Dict[Vector, Fraction] = {}
        for k, terms in slices.items():
            w = geometric_weight(level - k, d[pos])
            if not w:
                continue
            for base, c in terms.items():
                acc[base] = acc.get(base, Fraction(0)) + c * w
        if acc:
            step = tuple(level if q == pos else 0 for q in range(n))
            low = low + LaurentPolynomial(n, acc).shift(step)
    return num - low * (LaurentPolynomial.one_minus(unit(n, pos)) ** d[pos])


def _count_general(w: Vector, factors: Tuple[Vector, ...]) -> int:
    @lru_cache(maxsize=None)
    def go(w: Vector, i: int) -> int:
        if i == len(factors):
            return 0 if any(w) else 1
        v = factors[i]
        total = 0
        cur = w
        while min(cur) >= 0:
            total += go(cur, i + 1)
            cur = vsub(cur, v)
        return total

    if min(w, default=0) < 0:
        return 0
    return go(tuple(w), 0)


def _count_table(factors: Tuple[Vector, ...], box: Box, numerator: LaurentPolynomial) -> Dict[Vector, int]:
    """Dense coefficients of ``prod 1/(1 - t^v)`` over the range a box needs."""
    n = len(box.lo)
    low = numerator.lower_corner()
    if low is None:
        return {}
    top = tuple(max(h - l, -1) for h, l in zip(box.hi, low))
    if min(top, default=0) < 0:
        return {}
    table: Dict[Vector, int] = {p: 0 for p in itertools.product(*(range(t + 1) for t in top))}
    table[zero(n)] = 1
    order = sorted(table, key=sum)
    for v in factors:
        # multiply by 1/(1 - t^v): f[x] += f[x - v], in increasing order
        for x in order:
            prev = vsub(x, v)
            if min(prev, default=0) >= 0:
                table[x] += table[prev]
    return table


# -- Hilbert decompositions --------------------------------------------------

@dataclass(frozen=True)
class DecompositionTerm:
    """``c * t^a / prod_{v in factors} (1 - t^v)`` with ``c > 0``."""

    c: Fraction
    a: Vector
    factors: Tuple[Vector, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "c", as_fraction(self.c))
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "factors", tuple(sorted(tuple(v) for v in self.factors)))
        if self.c <= 0:
            raise ValueError("decomposition coefficients must be positive")

    @classmethod
    def standard(cls, c, a: Vector, e: Vector) -> "DecompositionTerm":
        n = len(a)
        return cls(c, a, tuple(unit(n, i) for i in range(n) for _ in range(e[i])))

    @property
    def nvars(self) -> int:
        return len(self.a)

    @property
    def is_standard(self) -> bool:
        return all(sum(v) == 1 for v in self.factors)

    @property
    def e(self) -> Vector:
        if not self.is_standard:
            raise ValueError("term has non-unit denominator factors")
        out = [0] * self.nvars
        for v in self.factors:
            out[v.index(1)] += 1
        return tuple(out)

    @property
    def is_polynomial(self) -> bool:
        return not self.factors

    def series(self) -> RationalSeries:
        return RationalSeries.term(self.c, self.a, self.factors)


@dataclass(frozen=True)
class HilbertDecomposition:
    nvars: int
    terms: Tuple[DecompositionTerm, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        for t in self.terms:
            if t.nvars != self.nvars:
                raise ValueError("decomposition term has the wrong number of variables")

    @classmethod
    def from_triples(cls, nvars: int, triples: Iterable[Tuple[object, Vector, Vector]]) -> "HilbertDecomposition":
        return cls(nvars, tuple(DecompositionTerm.standard(c, a, e) for c, a, e in triples))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other: "HilbertDecomposition") -> "HilbertDecomposition":
        return HilbertDecomposition(self.nvars, self.terms + other.terms)

    @property
    def polynomial_part(self) -> "HilbertDecomposition":
        return HilbertDecomposition(self.nvars, tuple(t for t in self.terms if t.is_polynomial))

    @property
    def nonpolynomial_part(self) -> "HilbertDecomposition":
        return HilbertDecomposition(self.nvars, tuple(t for t in self.terms if not t.is_polynomial))

    @property
    def has_polynomial_part(self) -> bool:
        return any(t.is_polynomial for t in self.terms)

    def merged(self) -> "HilbertDecomposition":
        """Combine terms with equal shift and denominator."""
        acc: Dict[Tuple[Vector, Tuple[Vector, ...]], Fraction] = {}
        for t in self.terms:
            key = (t.a, t.factors)
            acc[key] = acc.get(key, Fraction(0)) + t.c
        return HilbertDecomposition(
            self.nvars, tuple(DecompositionTerm(c, a, f) for (a, f), c in sorted(acc.items()))
        )


def decomposition_to_series(D: HilbertDecomposition) -> RationalSeries:
    groups: Dict[Tuple[Vector, ...], LaurentPolynomial] = {}
    for t in D.terms:
        mono = LaurentPolynomial.monomial(t.a, t.c)
        groups[t.factors] = groups.get(t.factors, LaurentPolynomial(D.nvars)) + mono
    out = RationalSeries.zero(D.nvars)
    for factors, num in sorted(groups.items()):
        out = out + RationalSeries(num, factors)
    return out


def verify_decomposition(H: RationalSeries, D: HilbertDecomposition) -> bool:
    if D.nvars != H.nvars:
        return False
    if any(t.c <= 0 for t in D.terms):
        return False
    return decomposition_to_series(D).series_equal(H)


# -- free-resolution inequality H_M H_N / H_R >= 0 ---------------------------

@dataclass(frozen=True)
class QuotientCheck:
    nonnegative: bool
    point: Optional[Vector]
    value: Optional[Fraction]
    quotient: RationalSeries


def invert(H: RationalSeries) -> RationalSeries:
    """``1/H`` when the numerator is ``c * t^w * prod (1 - t^v)``."""
    split = factor_one_minus(H.numerator)
    if split is None:
        raise ValueError("series is not invertible in the supported forms")
    c, w, num_factors = split
    num = H.denominator().shift(tuple(-x for x in w)) * (1 / c)
    return RationalSeries(num, num_factors)


def quotient(HM: RationalSeries, HN: RationalSeries, HR: RationalSeries) -> RationalSeries:
    """``HM * HN / HR`` as a rational series."""
    prod = HM * HN
    if HR.numerator.is_zero():
        raise ValueError("division by the zero series")
    q = prod.numerator.divide_exact(HR.numerator)
    if q is not None:
        # move HR's denominator factors up; cancel common factors first
        top = Counter(prod.factors)
        up = []
        for v in HR.factors:
            if top[v]:
                top[v] -= 1
            else:
                up.append(v)
        return RationalSeries(q * denominator_polynomial(up, prod.nvars), tuple(sorted(top.elements())))
    return (prod * invert(HR)).reduced()


def quotient_nonneg_check(HM: RationalSeries, HN: RationalSeries, HR: RationalSeries, box: Box) -> QuotientCheck:
    q = quotient(HM, HN, HR)
    neg = q.first_negative(box)
    if neg is None:
        return QuotientCheck(True, None, None, q)
    return QuotientCheck(False, neg[0], neg[1], q)


def add(A: RationalSeries, B: RationalSeries) -> RationalSeries:
    return A + B


def mul(A: RationalSeries, B: RationalSeries) -> RationalSeries:
    return A * B


def expand(H: RationalSeries, box: Box) -> Dict[Vector, Fraction]:
    return H.expand(box)


def coeff(H: RationalSeries, a: Vector) -> Fraction:
    return H.coeff(a)


def restrict(H: RationalSeries, I: Iterable[int], u: Vector) -> RationalSeries:
    return H.restrict(I, u)
