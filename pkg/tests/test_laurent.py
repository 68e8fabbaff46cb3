from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hilbertseries.laurent import (
    LaurentPolynomial,
    embed,
    factor_one_minus,
    join,
    join_all,
    leq,
    meet,
    meet_all,
)

exps = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
polys = st.dictionaries(exps, st.integers(-4, 4), max_size=5).map(lambda d: LaurentPolynomial(2, d))


def test_lattice_helpers():
    assert meet((1, 5), (3, 2)) == (1, 2)
    assert join((1, 5), (3, 2)) == (3, 5)
    assert leq((0, 1), (0, 2)) and not leq((1, 0), (0, 2))
    assert meet_all([(1, 2), (0, 5), (4, 1)]) == (0, 1)
    assert join_all([]) is None
    assert embed((7, 9), (0, 2), 3) == (7, 0, 9)


def test_zero_terms_dropped():
    p = LaurentPolynomial(2, {(1, 0): 3, (0, 1): 0})
    assert list(p) == [(1, 0)]
    assert (p - p).is_zero()


def test_monomial_power_and_inverse():
    t = LaurentPolynomial.monomial((1, -2), 1)
    assert t ** -2 == LaurentPolynomial.monomial((-2, 4))
    with pytest.raises(ValueError):
        (t + 1) ** -1


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a


@given(polys, st.sampled_from([(1, 0), (0, 1), (1, 1), (2, 1)]))
def test_div_one_minus_inverts_multiplication(p, v):
    prod = p * LaurentPolynomial.one_minus(v)
    assert prod.div_one_minus(v) == p


@settings(max_examples=60)
@given(polys, polys)
def test_divide_exact(p, q):
    if q.is_zero():
        return
    assert (p * q).divide_exact(q) == p


def test_divide_exact_refuses_remainders():
    one_plus = LaurentPolynomial(1, {(0,): 1, (1,): 1})
    assert LaurentPolynomial.monomial((2,)).divide_exact(one_plus) is None


def test_factor_one_minus():
    p = LaurentPolynomial.one_minus((2,)) * LaurentPolynomial.one_minus((3,)) * LaurentPolynomial.monomial((-1,), Fraction(5, 2))
    c, w, f = factor_one_minus(p)
    assert (c, w, f) == (Fraction(5, 2), (-1,), ((2,), (3,)))
    assert factor_one_minus(LaurentPolynomial(1, {(0,): 1, (1,): 1})) is None


def test_corners_and_projection():
    p = LaurentPolynomial(3, {(1, 2, 0): 1, (0, 5, 1): 2})
    assert p.lower_corner() == (0, 2, 0)
    assert p.upper_corner() == (1, 5, 1)
    assert p.project((0, 2)) == LaurentPolynomial(2, {(1, 0): 1, (0, 1): 2})
