"""Polynomials in ``Z_1..Z_n``, binomial bases, and multivariate Hilbert polynomials."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .laurent import Vector, as_fraction, join_all, vadd, zero
from .series import RationalSeries


class MultiPolynomial:
    """Rational polynomial in ``Z_1..Z_n``, stored as ``{exponent: coefficient}``."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Vector, object]] = None):
        self.nvars = nvars
        clean: Dict[Vector, Fraction] = {}
        for r, c in (terms or {}).items():
            r = tuple(r)
            if len(r) != nvars or min(r, default=0) < 0:
                raise ValueError(f"bad exponent {r} for {nvars} variables")
            c = as_fraction(c)
            if c:
                clean[r] = clean.get(r, Fraction(0)) + c
                if not clean[r]:
                    del clean[r]
        self._terms = clean

    @classmethod
    def constant(cls, nvars: int, c=1) -> "MultiPolynomial":
        return cls(nvars, {zero(nvars): c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPolynomial":
        return cls(nvars, {tuple(1 if k == i else 0 for k in range(nvars)): 1})

    def __getitem__(self, r: Vector) -> Fraction:
        return self._terms.get(tuple(r), Fraction(0))

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def items(self):
        return self._terms.items()

    def support(self):
        return self._terms.keys()

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> Vector:
        """Degree in each variable (zeros for the zero polynomial)."""
        return join_all(self._terms) or zero(self.nvars)

    def _coerce(self, other) -> "MultiPolynomial":
        if isinstance(other, MultiPolynomial):
            return other
        return MultiPolynomial.constant(self.nvars, other)

    def __add__(self, other) -> "MultiPolynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for r, c in other._terms.items():
            out[r] = out.get(r, Fraction(0)) + c
        return MultiPolynomial(self.nvars, out)

    def __neg__(self):
        return MultiPolynomial(self.nvars, {r: -c for r, c in self._terms.items()})

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPolynomial):
            c = as_fraction(other)
            return MultiPolynomial(self.nvars, {r: c * x for r, x in self._terms.items()})
        out: Dict[Vector, Fraction] = {}
        for r1, c1 in self._terms.items():
            for r2, c2 in other._terms.items():
                r = vadd(r1, r2)
                out[r] = out.get(r, Fraction(0)) + c1 * c2
        return MultiPolynomial(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, MultiPolynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __call__(self, a: Iterable) -> Fraction:
        return evaluate(self, tuple(a))

    def __repr__(self):
        return f"MultiPolynomial({format_multipolynomial(self)!r})"


def format_multipolynomial(p: MultiPolynomial) -> str:
    if p.is_zero():
        return "0"
    out = []
    for r in sorted(p, reverse=True):
        c = p[r]
        mono = "*".join(
            ("Z" if p.nvars == 1 else f"Z{i + 1}") + (f"^{k}" if k > 1 else "")
            for i, k in enumerate(r) if k
        )
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def evaluate(p: MultiPolynomial, a: Vector) -> Fraction:
    if len(a) != p.nvars:
        raise ValueError("evaluation point has the wrong length")
    total = Fraction(0)
    for r, c in p.items():
        total += c * prod(x ** k for x, k in zip(a, r))
    return total


# -- univariate building blocks ---------------------------------------------------

@lru_cache(maxsize=None)
def _binomial_poly(shift: int, k: int) -> Tuple[Fraction, ...]:
    """Coefficients (ascending) of ``binom(Z + shift, k)`` as a polynomial in ``Z``."""
    coeffs = [Fraction(1)]
    for j in range(k):
        # multiply by (Z + shift - j)
        s = shift - j
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c * s
            nxt[i + 1] += c
        coeffs = nxt
    f = factorial(k)
    return tuple(c / f for c in coeffs)


def binomial_product(shifts: Vector, ks: Vector) -> MultiPolynomial:
    """``prod_i binom(Z_i + shifts_i, ks_i)`` in monomial form."""
    n = len(ks)
    factors = [_binomial_poly(s, k) for s, k in zip(shifts, ks)]
    out: Dict[Vector, Fraction] = {}
    for r in itertools.product(*(range(len(f)) for f in factors)):
        c = prod((f[i] for f, i in zip(factors, r)), start=Fraction(1))
        if c:
            out[r] = c
    return MultiPolynomial(n, out)


def translate(p: MultiPolynomial, g: Vector) -> MultiPolynomial:
    """``q(Z) = p(Z + g)``."""
    out: Dict[Vector, Fraction] = {}
    for r, c in p.items():
        ranges = [range(k + 1) for k in r]
        for s in itertools.product(*ranges):
            w = prod(comb(k, j) * gi ** (k - j) for k, j, gi in zip(r, s, g))
            if w:
                out[s] = out.get(s, Fraction(0)) + c * w
    return MultiPolynomial(p.nvars, out)


# -- binomial basis ---------------------------------------------------------------

def to_binomial_basis(p: MultiPolynomial) -> Dict[Vector, Fraction]:
    """Coefficients of ``p`` in the basis ``prod_i binom(Z_i, k_i)``.

    The coefficient at ``k`` is the mixed forward difference of ``p`` at 0.
    """
    if p.is_zero():
        return {}
    deg = p.degrees()
    values = {j: evaluate(p, j) for j in itertools.product(*(range(g + 1) for g in deg))}
    out: Dict[Vector, Fraction] = {}
    for k in values:
        total = Fraction(0)
        for j in itertools.product(*(range(x + 1) for x in k)):
            sign = -1 if (sum(k) - sum(j)) % 2 else 1
            total += sign * prod(comb(ki, ji) for ki, ji in zip(k, j)) * values[j]
        if total:
            out[k] = total
    return out


def from_binomial_basis(nvars: int, coeffs: Mapping[Vector, object]) -> MultiPolynomial:
    out = MultiPolynomial(nvars)
    for k, c in coeffs.items():
        out = out + binomial_product(zero(nvars), tuple(k)) * as_fraction(c)
    return out


def is_integer_valued(p: MultiPolynomial) -> bool:
    return all(c.denominator == 1 for c in to_binomial_basis(p).values())


# -- Hilbert polynomial --------------------------------------------------------------

@dataclass(frozen=True)
class HilbertPolynomialResult:
    """``coeff(H, a) == p(a)`` for every ``a >= threshold``."""

    p: MultiPolynomial
    threshold: Vector

    def binomial(self) -> Dict[Vector, Fraction]:
        return to_binomial_basis(self.p)


def hilbert_polynomial(H: RationalSeries) -> HilbertPolynomialResult:
    """Polynomial agreeing with the coefficients of ``H`` far enough out.

    The threshold is the join of the numerator exponents, pushed one step
    further in every coordinate without a denominator factor (there the
    coefficients vanish eventually, so the polynomial is zero).
    """
    if not H.is_standard:
        raise ValueError("Hilbert polynomials need a standard-form denominator")
    n = H.nvars
    d = H.d
    num = H.numerator
    if num.is_zero():
        return HilbertPolynomialResult(MultiPolynomial(n), zero(n))
    if n == 0:
        return HilbertPolynomialResult(MultiPolynomial.constant(0, num[()]), ())
    top = num.upper_corner()
    threshold = tuple(g + 1 if di == 0 else g for g, di in zip(top, d))
    if min(d) == 0:
        return HilbertPolynomialResult(MultiPolynomial(n), threshold)
    acc: Dict[Vector, Fraction] = {}
    for u, c in num.items():
        # prod_i binom(Z_i - u_i + d_i - 1, d_i - 1)
        factors = [_binomial_poly(di - 1 - ui, di - 1) for ui, di in zip(u, d)]
        for r in itertools.product(*(range(len(f)) for f in factors)):
            w = c
            for f, k in zip(factors, r):
                w *= f[k]
            acc[r] = acc.get(r, Fraction(0)) + w
    return HilbertPolynomialResult(MultiPolynomial(n, acc), threshold)
