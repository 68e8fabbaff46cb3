import itertools
import random
from fractions import Fraction

from hypothesis import given, strategies as st

from generators import naive_coeff, rand_decomposition
from hilbertseries.catalog import fix1
from hilbertseries.formats import parse_series
from hilbertseries.polynomial import (
    MultiPolynomial,
    binomial_product,
    from_binomial_basis,
    hilbert_polynomial,
    is_integer_valued,
    to_binomial_basis,
    translate,
)
from hilbertseries.series import decomposition_to_series

Z1, Z2 = MultiPolynomial.variable(2, 0), MultiPolynomial.variable(2, 1)


def test_fix1_polynomial():
    res = hilbert_polynomial(fix1())
    assert res.p == (Z1 - Z2) * (Z1 - Z2)
    assert res.threshold == (2, 2)
    assert res.p((3, 1)) == 4


def test_univariate_examples():
    res = hilbert_polynomial(parse_series("t^2/(1-t)^2", 1))
    Z = MultiPolynomial.variable(1, 0)
    assert res.p == Z - 1 and res.threshold == (2,)
    assert hilbert_polynomial(parse_series("3", 1)).p.is_zero()


def test_polynomial_part_only():
    res = hilbert_polynomial(parse_series("1 + t1*t2/(1-t1)", 2))
    assert res.p.is_zero()
    assert res.threshold == (1, 2)


def test_matches_coefficients_beyond_threshold():
    rng = random.Random(8)
    for _ in range(40):
        n = rng.choice([2, 3])
        H = decomposition_to_series(rand_decomposition(rng, n, (2,) * n))
        res = hilbert_polynomial(H)
        for off in itertools.product(range(3), repeat=n):
            a = tuple(g + o for g, o in zip(res.threshold, off))
            assert res.p(a) == naive_coeff(H, a)


def test_binomial_basis_examples():
    basis = to_binomial_basis((Z1 - Z2) * (Z1 - Z2))
    assert basis == {(2, 0): 2, (0, 2): 2, (1, 1): -2, (1, 0): 1, (0, 1): 1}


coeffs = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 2)), st.integers(-5, 5), max_size=6)


@given(coeffs)
def test_binomial_basis_round_trip(c):
    p = from_binomial_basis(2, c)
    assert to_binomial_basis(p) == {k: Fraction(v) for k, v in c.items() if v}
    assert is_integer_valued(p)


def test_not_integer_valued():
    assert not is_integer_valued(Z1 * Fraction(1, 2))
    assert is_integer_valued(Z1 * (Z1 - 1) * Fraction(1, 2))


def test_translate_and_binomial_product():
    p = Z1 * Z1 * Z2 - 3 * Z2
    q = translate(p, (2, -1))
    for a in itertools.product(range(-2, 3), repeat=2):
        assert q(a) == p((a[0] + 2, a[1] - 1))
    b = binomial_product((1, 0), (2, 1))
    assert b((3, 4)) == 6 * 4
