"""Deciding whether a standard-form series is a Hilbert series, with certificates.

A YES answer carries a Hilbert decomposition ``sum c t^a / prod (1-t_i)^{e_i}``
with ``e <= m``; a NO answer carries a restriction ``(I, u)`` whose Hilbert
polynomial has an extremal monomial with negative coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .geometry import extremal_monomials
from .laurent import Vector, embed, join, leq, meet_all, vadd, zero
from .polynomial import MultiPolynomial, binomial_product, evaluate, hilbert_polynomial, translate
from .series import HilbertDecomposition, RationalSeries, verify_decomposition

Term = Tuple[Fraction, Vector, Vector]  # (c, a, e)

STEP_CAP = 100_000


@dataclass(frozen=True)
class GradingSpec:
    """``m[i]`` variables of degree ``e_i``."""

    m: Vector

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        if any(x < 0 for x in self.m):
            raise ValueError("variable counts must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.m)


@dataclass(frozen=True)
class Witness:
    """Restriction ``H|_{I,u}`` whose Hilbert polynomial has ``coeff`` at extremal ``r``.

    ``I`` holds 0-based variable indices.
    """

    I: Tuple[int, ...]
    u: Vector
    r: Vector
    coeff: Fraction


@dataclass(frozen=True)
class DecisionOutcome:
    verdict: str  # "yes" or "no"
    certificate: Optional[HilbertDecomposition] = None
    witness: Optional[Witness] = None
    reason: str = ""

    @property
    def is_yes(self) -> bool:
        return self.verdict == "yes"


# -- binomial decomposition of a polynomial ------------------------------------------

@dataclass(frozen=True)
class BinomialTerm:
    """``c * prod_i binom(Z_i + r_i - a_i, r_i)``."""

    c: Fraction
    a: Vector
    r: Vector

    def polynomial(self) -> MultiPolynomial:
        return binomial_product(tuple(ri - ai for ri, ai in zip(self.r, self.a)), self.r) * self.c


@dataclass(frozen=True)
class BinomialDecomposition:
    nvars: int
    terms: Tuple[BinomialTerm, ...]

    def polynomial(self) -> MultiPolynomial:
        out = MultiPolynomial(self.nvars)
        for t in self.terms:
            out = out + t.polynomial()
        return out


@dataclass(frozen=True)
class BinomialFailure:
    r: Vector
    coeff: Fraction


def _first_bad_extremal(p: MultiPolynomial) -> Optional[Vector]:
    for r in sorted(extremal_monomials(p), reverse=True):
        if p[r] <= 0:
            return r
    return None


def _shift_for(old: Fraction, c: Fraction, ri: int, floor_value: int) -> int:
    # smallest integer a with old + c*ri*(a - (ri+1)/2) >= floor_value
    bound = Fraction(ri + 1, 2) + (floor_value - old) / (c * ri)
    return -((-bound.numerator) // bound.denominator)


def binomial_decompose(
    p: MultiPolynomial,
    min_shift: Optional[Vector] = None,
    step_cap: int = STEP_CAP,
) -> Union[BinomialDecomposition, BinomialFailure]:
    """Write ``p`` as a positive combination of shifted binomial products.

    Fails with the first extremal monomial whose coefficient is not positive.
    Each step removes the lexicographically largest extremal monomial ``Z^r``
    and picks the smallest shifts ``a`` that keep the lower neighbours
    ``Z^r / Z_i`` nonnegative, falling back to strictly positive if a zero
    there would expose a bad extremal monomial. ``min_shift`` raises the
    shifts further; larger shifts only help the remaining coefficients.
    """
    n = p.nvars
    terms: List[BinomialTerm] = []
    steps = 0
    while not p.is_zero():
        steps += 1
        if steps > step_cap:
            raise RuntimeError("binomial decomposition exceeded its step cap")
        bad = _first_bad_extremal(p)
        if bad is not None:
            return BinomialFailure(bad, p[bad])
        r = max(extremal_monomials(p))
        c = p[r]
        weight = c * prod(factorial(x) for x in r)

        def attempt(floor_value: int):
            a = []
            for i, ri in enumerate(r):
                if ri == 0:
                    a.append(0)
                    continue
                below = tuple(x - (1 if k == i else 0) for k, x in enumerate(r))
                ai = _shift_for(p[below], c, ri, floor_value)
                a.append(ai if min_shift is None else max(ai, min_shift[i]))
            term = BinomialTerm(weight, tuple(a), r)
            return term, p - term.polynomial()

        term, rest = attempt(0)
        if not rest.is_zero() and _first_bad_extremal(rest) is not None:
            term, rest = attempt(1)
        terms.append(term)
        p = rest
    return BinomialDecomposition(n, tuple(terms))


# -- recursive decision ------------------------------------------------------------------

def _threshold(H: RationalSeries) -> Vector:
    return hilbert_polynomial(H).threshold


def _orthant_split(c: Fraction, a: Vector, e: Vector, g: Vector) -> List[Term]:
    """Terms whose sum is the part of ``c t^a/(1-t)^e`` on ``g + N^n``."""
    per_coord = []
    for ai, ei, gi in zip(a, e, g):
        if gi <= ai:
            per_coord.append([(1, ai, ei)])
            continue
        cc = gi - ai
        if ei == 0:
            per_coord.append([])
            continue
        # binom(y+cc+e-1, e-1) = sum_k binom(cc+k-1, k) binom(y+e-1-k, e-1-k)
        per_coord.append([(comb(cc + k - 1, k), gi, ei - k) for k in range(ei)])
    out: List[Term] = [(c, (), ())]
    for options in per_coord:
        out = [(cf * w, aa + (x,), ee + (y,)) for cf, aa, ee in out for w, x, y in options]
    return out


def _terms_series(n: int, terms: Sequence[Term]) -> RationalSeries:
    from .series import decomposition_to_series

    return decomposition_to_series(_as_decomposition(n, terms))


def _as_decomposition(n: int, terms: Sequence[Term]) -> HilbertDecomposition:
    return HilbertDecomposition.from_triples(n, terms).merged()


def _decide(H: RationalSeries, m: Vector) -> Tuple[str, Union[List[Term], Witness]]:
    n = H.nvars
    H = H.reduced()
    if H.is_zero():
        return "yes", []
    if not H.factors:
        # a Laurent polynomial; lexicographic order matches the slab order below
        for a in sorted(H.numerator):
            c = H.numerator[a]
            if c < 0:
                return "no", Witness((), a, (), c)
        return "yes", [(c, a, zero(n)) for a, c in sorted(H.numerator.items())]

    p = hilbert_polynomial(H).p
    if not p.is_zero():
        bd = binomial_decompose(p, min_shift=H.numerator.lower_corner())
        if isinstance(bd, BinomialFailure):
            return "no", Witness(tuple(range(n)), zero(n), bd.r, bd.coeff)
        H1_terms = [(t.c, t.a, tuple(x + 1 for x in t.r)) for t in bd.terms]
        rest = H - _terms_series(n, H1_terms)
        hp = hilbert_polynomial(rest)
        assert hp.p.is_zero(), "leftover after subtracting the polynomial part"
        gstar = hp.threshold
        split: List[Term] = []
        for c, a, e in H1_terms:
            split.extend(_orthant_split(c, a, e, gstar))
        verdict, sub = _decide(H - _terms_series(n, split), m)
        if verdict == "no":
            return verdict, sub
        return "yes", split + sub

    # the coefficients vanish on g + N^n: cover the rest by slabs
    b = H.numerator.lower_corner()
    g = join(_threshold(H), b)
    terms: List[Term] = []
    for i in range(n):
        others = tuple(k for k in range(n) if k != i)
        mi = tuple(m[k] for k in others)
        for j in range(b[i], g[i]):
            u = g[:i] + (j,) + b[i + 1:]
            sub_H = H.restrict(others, u)
            verdict, sub = _decide(sub_H, mi)
            if verdict == "no":
                w = sub
                return "no", Witness(
                    tuple(others[k] for k in w.I),
                    vadd(u, embed(w.u, others, n)),
                    w.r,
                    w.coeff,
                )
            for c, a, e in sub:
                terms.append((c, vadd(u, embed(a, others, n)), embed(e, others, n)))
    return "yes", terms


def _normalized(H: RationalSeries, w: Witness) -> Witness:
    # shifting inside I keeps extremal monomials and their coefficients
    u = tuple(0 if k in w.I else x for k, x in enumerate(w.u))
    cand = Witness(w.I, u, w.r, w.coeff)
    return cand if witness_check(H, cand) else w


def decide_hilbert(H: RationalSeries, g: Union[GradingSpec, Sequence[int]]) -> DecisionOutcome:
    """Is ``H`` the Hilbert series of a f.g. module over ``k[X_ij]``, ``deg X_ij = e_i``?"""
    if not isinstance(g, GradingSpec):
        g = GradingSpec(tuple(g))
    if not H.is_standard:
        raise ValueError("decide_hilbert needs a standard-form denominator")
    if g.n != H.nvars:
        raise ValueError("grading and series have different numbers of variables")
    if not H.numerator.is_integral():
        raise ValueError("series has non-integral coefficients")
    R = H.reduced()
    if not leq(R.d, g.m):
        return DecisionOutcome("no", reason="denominator exceeds grading")
    verdict, payload = _decide(R, g.m)
    if verdict == "no":
        return DecisionOutcome("no", witness=_normalized(H, payload), reason="negative extremal coefficient")
    cert = _as_decomposition(H.nvars, payload)
    assert all(leq(t.e, g.m) for t in cert.terms), "certificate exceeds the grading"
    assert verify_decomposition(H, cert), "certificate does not reproduce the series"
    return DecisionOutcome("yes", certificate=cert)


def witness_check(H: RationalSeries, w: Witness) -> bool:
    """Independently confirm that ``w`` exhibits a negative extremal coefficient."""
    try:
        R = H.restrict(w.I, w.u)
    except ValueError:
        return False
    p = hilbert_polynomial(R).p
    r = tuple(w.r)
    if r not in p.support():
        return False
    if r not in extremal_monomials(p):
        return False
    return p[r] <= 0 and p[r] == w.coeff


# -- fine grading: m_i <= 2 -----------------------------------------------------------------

def _multilinear_negative(q: MultiPolynomial) -> Optional[Vector]:
    """A point of ``N^n`` where the multilinear ``q`` is negative, if any."""
    n = q.nvars
    if n == 0:
        return () if q[()] < 0 else None
    A: Dict[Vector, Fraction] = {}
    B: Dict[Vector, Fraction] = {}
    for r, c in q.items():
        (B if r[0] else A)[r[1:]] = c
    A_poly, B_poly = MultiPolynomial(n - 1, A), MultiPolynomial(n - 1, B)
    y = _multilinear_negative(A_poly)
    if y is not None:
        return (0,) + y
    y = _multilinear_negative(B_poly)
    if y is None:
        return None
    a, bval = evaluate(A_poly, y), evaluate(B_poly, y)
    x = int(a // -bval) + 1
    return (x,) + y


def find_negative_coefficient(H: RationalSeries) -> Optional[Vector]:
    """Exact search for a negative coefficient when every ``d_i <= 2``.

    Above the threshold the coefficients follow a multilinear polynomial,
    which is nonnegative on an orthant iff its shifted coefficients are;
    below it the support splits into lower-dimensional slabs.
    """
    if not H.is_standard:
        raise ValueError("needs a standard-form denominator")
    H = H.reduced()
    n = H.nvars
    if H.is_zero():
        return None
    if n == 0:
        return () if H.numerator[()] < 0 else None
    if max(H.d) > 2:
        raise ValueError("exact nonnegativity is implemented for d_i <= 2 only")
    hp = hilbert_polynomial(H)
    b = H.numerator.lower_corner()
    g = join(hp.threshold, b)
    if not hp.p.is_zero():
        x = _multilinear_negative(translate(hp.p, g))
        if x is not None:
            return vadd(g, x)
    for i in range(n):
        others = tuple(k for k in range(n) if k != i)
        for j in range(b[i], g[i]):
            u = g[:i] + (j,) + b[i + 1:]
            y = find_negative_coefficient(H.restrict(others, u))
            if y is not None:
                return vadd(u, embed(y, others, n))
    return None


def decide_hilbert_fine(H: RationalSeries, g: Union[GradingSpec, Sequence[int]]) -> DecisionOutcome:
    """``decide_hilbert`` for gradings with every ``m_i <= 2``, cross-checked
    against the plain criterion: ``H >= 0`` and the denominator fits."""
    if not isinstance(g, GradingSpec):
        g = GradingSpec(tuple(g))
    if max(g.m, default=0) > 2:
        raise ValueError("fine grading requires m_i <= 2")
    out = decide_hilbert(H, g)
    R = H.reduced()
    simple = leq(R.d, g.m) and find_negative_coefficient(R) is None
    if simple != out.is_yes:
        raise AssertionError("structural and plain criteria disagree")
    return out
