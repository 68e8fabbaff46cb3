"""Named example series and a self-check suite over them."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Dict, List, Sequence

from .bigraded import decide_positive_depth, ideal_quotient_series, sigma
from .decider import Witness, binomial_decompose, BinomialFailure, decide_hilbert, witness_check
from .formats import parse_series
from .geometry import extremal_monomials, has_positive_extremal_coefficients, newton_vertices, nonneg_vertex_check
from .laurent import LaurentPolynomial, Vector
from .polynomial import MultiPolynomial, hilbert_polynomial
from .semigroup import check_star, fundamental_couples, is_hilbert_series_ns
from .series import Box, DecompositionTerm, HilbertDecomposition, RationalSeries, quotient_nonneg_check, verify_decomposition

FIX1_TEXT = "(t1*t2^2+t1^2*t2+t1^2-6*t1*t2+t2^2+t1+t2)/((1-t1)^3*(1-t2)^3)"


def series_from_coefficients(f: Callable[[Vector], int], d: Sequence[int]) -> RationalSeries:
    """``sum_{a >= 0} f(a) t^a`` for a polynomial ``f`` of degree ``< d_i`` in each variable."""
    n = len(d)
    terms: Dict[Vector, Fraction] = {}
    for a in itertools.product(*(range(x + 1) for x in d)):
        c = 0
        for k in itertools.product(*(range(x + 1) for x in a)):
            w = 1
            for ki, di in zip(k, d):
                w *= (-1) ** ki * comb(di, ki)
            c += w * f(tuple(x - y for x, y in zip(a, k)))
        if c:
            terms[a] = c
    return RationalSeries.standard(LaurentPolynomial(n, terms), d)


def fix1() -> RationalSeries:
    """``sum (i-j)^2 t1^i t2^j``."""
    return parse_series(FIX1_TEXT, 2)


def fix2() -> RationalSeries:
    """``sum ((i-j)^2 + ijk) t^(i,j,k)``."""
    return series_from_coefficients(lambda a: (a[0] - a[1]) ** 2 + a[0] * a[1] * a[2], (3, 3, 2))


def lambda_family(lam: int) -> RationalSeries:
    """``sum (i^2 + j^2 + ij(k-lam)(k-lam-2)) t^(i,j,k)``."""
    return series_from_coefficients(
        lambda a: a[0] ** 2 + a[1] ** 2 + a[0] * a[1] * (a[2] - lam) * (a[2] - lam - 2), (3, 3, 3)
    )


def fix3(k: int) -> RationalSeries:
    """``1 + sum_{i<=k} t1^i/(1-t2)``: nonnegative, but no positive depth."""
    H = RationalSeries.constant(2)
    for i in range(k + 1):
        H = H + RationalSeries.term(1, (i, 0), [(0, 1)])
    return H


def arith_pair():
    """Two expressions of the same series over degrees 2, 3, 5."""
    doubled = parse_series("t/(1-t^[2]) + 1/(1-t^[3]) + (1+t)/(1-t^[5]) + t^7/((1-t^[3])*(1-t^[5]))", 1)
    H = parse_series("(t+t^3)/(1-t^[6]) + 1/((1-t^[5])*(1-t^[6]))", 1)
    D = HilbertDecomposition(1, tuple(DecompositionTerm(c, a, f) for c, a, f in [
        (1, (1,), [(2,)]),
        (1, (0,), [(3,)]),
        (1, (0,), [(5,)]),
        (1, (1,), [(5,)]),
        (1, (7,), [(3,), (5,)]),
    ]))
    return H, doubled, D


# -- the suite ---------------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _z(n, i):
    return MultiPolynomial.variable(n, i)


def _checks() -> List[tuple]:
    H1 = fix1()
    sq = (_z(2, 0) - _z(2, 1)) * (_z(2, 0) - _z(2, 1))

    def expand_fix1():
        got = H1.expand(Box((0, 0), (3, 3)))
        return all(v == (a[0] - a[1]) ** 2 for a, v in got.items()), "16 coefficients"

    def coeff_fix1():
        return H1.coeff((3, 1)) == 4 and H1.restrict((), (3, 1)).numerator[()] == 4, "c(H,(3,1)) = 4"

    def arith():
        H, doubled, D = arith_pair()
        ok = (H * 2).series_equal(doubled) and verify_decomposition(H * 2, D)
        return ok, "2H matches its decomposition"

    def quotient_bigraded():
        HM = parse_series("1/(1-t1)", 2)
        HN = parse_series("1/((1-t1)*(1-t2))", 2)
        HR = parse_series("1/((1-t1)^2*(1-t2)^2)", 2)
        r = quotient_nonneg_check(HM, HN, HR, Box((0, 0), (3, 3)))
        return (not r.nonnegative and r.point == (0, 1) and r.value == -1), f"negative at {r.point}"

    def quotient_semigroup():
        HM = parse_series("1+t^3", 1)
        HN = parse_series("1/(1-t)", 1)
        HS = parse_series("(1-t^6)/((1-t^[2])*(1-t^[3]))", 1)
        r = quotient_nonneg_check(HM, HN, HS, Box((0,), (20,)))
        return r.nonnegative, "nonnegative on [0,20]"

    def hp_fix1():
        res = hilbert_polynomial(H1)
        return res.p == sq and res.threshold == (2, 2), f"threshold {res.threshold}"

    def extremal_sq():
        return sorted(extremal_monomials(sq)) == [(0, 2), (1, 1), (2, 0)], "three extremal monomials"

    def offending_sq():
        rep = has_positive_extremal_coefficients(sq)
        return (not rep.all_positive and rep.offending == ((1, 1), -2)), str(rep.offending)

    def three_var_poly():
        z1, z2, z3 = (_z(3, i) for i in range(3))
        p = (z1 - z2) * (z1 - z2) + z1 * z2 * z3
        return has_positive_extremal_coefficients(p).all_positive, "(i-j)^2 + ijk"

    def squarefree():
        pts = list(itertools.product((0, 1), repeat=3))
        return sorted(newton_vertices(pts)) == sorted(pts), "0/1 cube"

    def vertex_fix1():
        return all(nonneg_vertex_check(H1, (0,), (0, u)).passed for u in range(5)), "I = {1}"

    def binom_sq():
        out = binomial_decompose(sq)
        return isinstance(out, BinomialFailure) and out.r == (1, 1), str(out)

    def decide_fix1():
        out = decide_hilbert(H1, (3, 3))
        w = out.witness
        ok = out.verdict == "no" and w.I == (0, 1) and w.r == (1, 1) and w.coeff == -2
        return ok, f"witness {w}"

    def decide_fix2():
        out = decide_hilbert(fix2(), (3, 3, 2))
        w = out.witness
        return out.verdict == "no" and w.I == (0, 1) and w.u == (0, 0, 0), f"witness {w}"

    def decide_lambda():
        out = decide_hilbert(lambda_family(2), (3, 3, 3))
        w = out.witness
        return out.verdict == "no" and w.I == (0, 1) and w.u == (0, 0, 3), f"witness {w}"

    def witness_fix1():
        return witness_check(H1, Witness((0, 1), (0, 0), (1, 1), Fraction(-2))), "({1,2}, (0,0), (1,1))"

    def singleton():
        return all(sigma(H1, [(i, j)]) == (i - j) ** 2 for i in range(4) for j in range(4)), "sigma of one point"

    def fix3_sigma():
        return all(sigma(fix3(k), [(0, 1), (k + 1, 0)]) == -1 for k in range(4)), "sigma = -1"

    def fix3_depth():
        out = decide_positive_depth(fix3(2), (3, 3))
        return out.verdict == "not-positive-depth", f"witness {out.witness}"

    def staircase():
        L = ideal_quotient_series([(1, 5), (3, 4), (4, 3), (7, 1)])
        pos = sorted(a for a, c in L.items() if c > 0)
        neg = sorted(a for a, c in L.items() if c < 0)
        ok = pos == sorted([(-1, -5), (-3, -4), (-4, -3), (-7, -1)]) and neg == sorted([(-1, -4), (-3, -3), (-4, -1)])
        return ok, "4 positive, 3 negative terms"

    def ns_hilbert():
        return is_hilbert_series_ns(parse_series("1+t^3", 1), (2, 3)), "1 + t^3"

    def parse_fix1():
        H = parse_series(FIX1_TEXT, 2)
        return H.numerator[(1, 1)] == -6 and H.d == (3, 3), "displayed fraction"

    def star_fix():
        res = check_star(parse_series("1+t^3", 1), (2, 3))
        f = res.failure
        ok = not res.passed and f.n == 0 and (f.couple.I, f.couple.J) == ((0,), (6,))
        return ok, f"fails at n={f.n if f else None}"

    def couples23():
        got = [(c.I, c.J) for c in fundamental_couples((2, 3))]
        return got == [((0,), (6,)), ((0, 1), (4, 3))], str(got)

    return [
        ("expand FIX1 on [0,3]^2", expand_fix1),
        ("coefficient and empty restriction of FIX1", coeff_fix1),
        ("degree 2,3,5 identity", arith),
        ("bigraded quotient 1 - t2", quotient_bigraded),
        ("semigroup quotient (1 + t^3)", quotient_semigroup),
        ("Hilbert polynomial of FIX1", hp_fix1),
        ("extremal monomials of (Z1-Z2)^2", extremal_sq),
        ("offending coefficient of (Z1-Z2)^2", offending_sq),
        ("extremal coefficients of (i-j)^2 + ijk", three_var_poly),
        ("squarefree supports are vertices", squarefree),
        ("univariate restrictions of FIX1", vertex_fix1),
        ("binomial decomposition of (Z1-Z2)^2 fails", binom_sq),
        ("FIX1 is not a Hilbert series", decide_fix1),
        ("FIX2 is not a Hilbert series", decide_fix2),
        ("lambda = 2 witness", decide_lambda),
        ("FIX1 witness re-check", witness_fix1),
        ("singleton staircase", singleton),
        ("FIX3_k staircase values", fix3_sigma),
        ("FIX3_2 has no positive depth", fix3_depth),
        ("staircase ideal series", staircase),
        ("1 + t^3 over <2,3>", ns_hilbert),
        ("parse FIX1", parse_fix1),
        ("(2,3) couples", couples23),
        ("1 + t^3 fails the couple inequalities", star_fix),
    ]


def worked_examples() -> List[CheckResult]:
    out = []
    for name, fn in _checks():
        start = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # report, don't abort the suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, bool(ok), detail, time.perf_counter() - start))
    return out
