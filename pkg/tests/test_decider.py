import itertools
import random
from fractions import Fraction

import pytest

from generators import naive_coeff, perturbed, rand_decomposition
from hilbertseries.catalog import fix1, fix2, lambda_family
from hilbertseries.decider import (
    BinomialDecomposition,
    BinomialFailure,
    Witness,
    binomial_decompose,
    decide_hilbert,
    decide_hilbert_fine,
    find_negative_coefficient,
    witness_check,
)
from hilbertseries.formats import parse_series
from hilbertseries.geometry import has_positive_extremal_coefficients
from hilbertseries.laurent import leq
from hilbertseries.polynomial import MultiPolynomial, from_binomial_basis, hilbert_polynomial
from hilbertseries.series import Box, RationalSeries, decomposition_to_series, verify_decomposition


def Zs(n):
    return [MultiPolynomial.variable(n, i) for i in range(n)]


def test_binomial_decompose_examples():
    (Z,) = Zs(1)
    out = binomial_decompose(Z)
    assert [(t.c, t.a, t.r) for t in out.terms] == [(1, (1,), (1,))]
    Z1, Z2 = Zs(2)
    out = binomial_decompose(Z1 * Z2)
    assert [(t.c, t.a, t.r) for t in out.terms] == [(1, (1, 1), (1, 1))]
    fail = binomial_decompose((Z1 - Z2) * (Z1 - Z2))
    assert isinstance(fail, BinomialFailure) and fail.r == (1, 1) and fail.coeff == -2


def test_binomial_decompose_reconstructs_random_polynomials():
    rng = random.Random(21)
    done = 0
    for _ in range(80):
        basis = {tuple(rng.randint(0, 2) for _ in range(3)): rng.randint(-3, 4) for _ in range(4)}
        p = from_binomial_basis(3, basis)
        if p.is_zero():
            continue
        out = binomial_decompose(p)
        if has_positive_extremal_coefficients(p).all_positive:
            assert isinstance(out, BinomialDecomposition)
            assert out.polynomial() == p
            assert all(t.c > 0 and t.c.denominator == 1 for t in out.terms)
            done += 1
        else:
            assert isinstance(out, BinomialFailure)
    assert done > 10


def test_fix1_rejected():
    out = decide_hilbert(fix1(), (3, 3))
    assert out.verdict == "no"
    w = out.witness
    assert (w.I, w.u, w.r, w.coeff) == ((0, 1), (0, 0), (1, 1), -2)
    assert witness_check(fix1(), w)
    assert not witness_check(fix1(), Witness((0,), (0, 0), (1,), Fraction(1)))


def test_fix2_rejected():
    out = decide_hilbert(fix2(), (3, 3, 2))
    assert out.verdict == "no"
    assert out.witness.I == (0, 1) and out.witness.u == (0, 0, 0)
    # the full polynomial alone does not show it
    assert has_positive_extremal_coefficients(hilbert_polynomial(fix2()).p).all_positive


@pytest.mark.parametrize("lam", [0, 1, 2])
def test_lambda_family(lam):
    H = lambda_family(lam)
    out = decide_hilbert(H, (3, 3, 3))
    assert out.verdict == "no"
    assert out.witness.I == (0, 1) and out.witness.u == (0, 0, lam + 1)
    assert witness_check(H, out.witness)
    for k in range(lam + 4):
        if k != lam + 1:
            p = hilbert_polynomial(H.restrict((0, 1), (0, 0, k))).p
            assert has_positive_extremal_coefficients(p).all_positive


def test_simple_yes():
    out = decide_hilbert(parse_series("1/((1-t1)*(1-t2))", 2), (1, 1))
    assert out.is_yes
    assert [(t.c, t.a, t.e) for t in out.certificate.terms] == [(1, (0, 0), (1, 1))]


def test_denominator_exceeds_grading():
    out = decide_hilbert(parse_series("1/(1-t1)^2", 2), (1, 1))
    assert out.verdict == "no" and out.reason == "denominator exceeds grading"
    # a cancellable factor is not held against the grading
    assert decide_hilbert(parse_series("(1-t1)/(1-t1)^2", 2), (1, 0)).is_yes


def test_non_integral_input_rejected():
    with pytest.raises(ValueError):
        decide_hilbert(parse_series("1/2 + t", 1), (1,))


def test_negative_constant():
    out = decide_hilbert(parse_series("(-1 + 2*t)/(1-t)", 1), (2,))
    assert out.verdict == "no"
    assert witness_check(parse_series("(-1 + 2*t)/(1-t)", 1), out.witness)


def test_random_yes_certificates():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.choice([2, 3])
        m = tuple(rng.randint(1, 2) for _ in range(n))
        H = decomposition_to_series(rand_decomposition(rng, n, m))
        out = decide_hilbert(H, m)
        assert out.is_yes
        assert verify_decomposition(H, out.certificate)
        assert all(leq(t.e, m) for t in out.certificate.terms)


def test_restrictions_stay_hilbert_series():
    rng = random.Random(32)
    for _ in range(8):
        m = (2, 1, 2)
        H = decomposition_to_series(rand_decomposition(rng, 3, m))
        for _ in range(5):
            I = tuple(sorted(rng.sample(range(3), rng.randint(0, 3))))
            u = tuple(rng.randint(-2, 4) for _ in range(3))
            R = H.restrict(I, u)
            assert decide_hilbert(R, tuple(m[i] for i in I)).is_yes


def test_random_no_witnesses():
    rng = random.Random(33)
    for _ in range(40):
        n = rng.choice([2, 3])
        m = tuple(rng.randint(1, 2) for _ in range(n))
        H = perturbed(rng, n, m)
        out = decide_hilbert(H, m)
        assert out.verdict == "no"
        assert witness_check(H, out.witness)


def test_fine_grading_examples():
    assert decide_hilbert_fine(parse_series("1/((1-t1)*(1-t2))", 2), (1, 1)).is_yes
    axes = parse_series("(1-t1*t2)/((1-t1)*(1-t2))", 2)
    assert all(c == (1 if 0 in a else 0) for a, c in axes.expand(Box((0, 0), (3, 3))).items())
    assert decide_hilbert_fine(axes, (1, 1)).is_yes
    assert decide_hilbert_fine(parse_series("(-1+2*t1)/(1-t1)", 1), (2,)).verdict == "no"
    with pytest.raises(ValueError):
        decide_hilbert_fine(fix1(), (3, 3))


def test_find_negative_coefficient_is_exact():
    rng = random.Random(34)
    for _ in range(60):
        H = decomposition_to_series(rand_decomposition(rng, 2, (2, 2)))
        if rng.random() < 0.6:
            H = H - RationalSeries.term(rng.randint(1, 3), (rng.randint(-3, 3), rng.randint(-3, 3)), [(1, 0)] * rng.randint(0, 2))
        a = find_negative_coefficient(H)
        if a is not None:
            assert naive_coeff(H, a) < 0
        else:
            box = Box((-6, -6), (10, 10))
            assert all(c >= 0 for c in H.expand(box).values())
