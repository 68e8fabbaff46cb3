import random
from fractions import Fraction

import pytest

from generators import brute_min_sigma, rand_decomposition
from hilbertseries.bigraded import (
    FractionalMonomialIdeal,
    check_condition_c,
    decide_positive_depth,
    default_box,
    down,
    find_st_violation,
    greedy_row_decompose,
    ideal_quotient_series,
    is_declining,
    low_part_bound,
    normalize_weakly_declining,
    sigma,
    split_low_part,
)
from hilbertseries.catalog import fix1, fix3
from hilbertseries.formats import parse_series
from hilbertseries.laurent import leq, meet
from hilbertseries.series import Box, RationalSeries, decomposition_to_series, verify_decomposition


def random_hilbert(rng, shift_poly=0.5):
    H = decomposition_to_series(rand_decomposition(rng, 2, (2, 2), 4))
    if rng.random() < shift_poly:
        H = H - RationalSeries.term(1, (rng.randint(-2, 2), rng.randint(-2, 2)), [])
    return H


def test_sigma_examples():
    H = parse_series("1", 2)
    assert sigma(H, [(0, 1), (1, 0)]) == -1
    assert all(sigma(fix1(), [(i, j)]) == (i - j) ** 2 for i in range(3) for j in range(3))
    for k in range(4):
        assert sigma(fix3(k), [(0, 1), (k + 1, 0)]) == -1


def test_down_and_declining():
    U = [(1, 5), (3, 4), (4, 3), (7, 1)]
    assert down(U) == ((1, 4), (3, 3), (4, 1))
    assert is_declining(U)
    assert not is_declining([(0, 1), (0, 0)])


def test_weak_normalisation_examples():
    assert normalize_weakly_declining([(0, 2), (0, 1), (3, 0)]) == ((0, 2), (3, 0))
    assert normalize_weakly_declining([(0, 2), (1, 2), (2, 0)]) == ((1, 2), (2, 0))
    with pytest.raises(ValueError):
        normalize_weakly_declining([(1, 0), (0, 1)])


def test_weak_normalisation_keeps_sigma():
    rng = random.Random(40)
    for _ in range(100):
        H = random_hilbert(rng)
        pts = [(0, 0)]
        for _ in range(rng.randint(1, 5)):
            x, y = pts[-1]
            pts.append((x + rng.randint(0, 2), y - rng.randint(0, 2)))
        pts = [(x - 2, y + 4) for x, y in pts]
        V = normalize_weakly_declining(pts)
        assert is_declining(V)
        assert sigma(H, V) == sigma(H, pts)


def test_dp_matches_brute_force():
    rng = random.Random(41)
    for _ in range(60):
        H = random_hilbert(rng)
        box = Box((-3, -3), (2, 2))
        h = H.expand(box)
        best, _ = brute_min_sigma(lambda p: h.get(p, H.coeff(p)), list(box.points()))
        U = find_st_violation(H, box)
        if best < 0:
            assert U is not None and sigma(H, U) == best
            assert all(p in box for p in U)
        else:
            assert U is None


def test_h_one_has_no_positive_depth():
    out = decide_positive_depth(parse_series("1", 2), (1, 1))
    assert out.verdict == "not-positive-depth"
    assert out.witness == ((0, 1), (1, 0)) and out.sigma == -1


@pytest.mark.parametrize("text", ["1/(1-t1)", "1/((1-t1)*(1-t2))", "t1^-1/(1-t2) + t2^3/(1-t1)^2"])
def test_positive_examples(text):
    H = parse_series(text, 2)
    out = decide_positive_depth(H, (2, 2))
    assert out.positive
    assert verify_decomposition(H, out.certificate)
    assert not out.certificate.has_polynomial_part


def test_single_axis_certificate():
    out = decide_positive_depth(parse_series("1/(1-t1)", 2), (1, 1))
    assert [(t.c, t.a, t.e) for t in out.certificate.terms] == [(1, (0, 0), (1, 0))]


@pytest.mark.parametrize("k", [0, 1, 2, 3, 12])
def test_fix3_witness_gap(k):
    out = decide_positive_depth(fix3(k), (1, 1))
    assert out.verdict == "not-positive-depth"
    U = out.witness
    assert sigma(fix3(k), U) < 0
    assert U[-1][0] - U[0][0] > k


def test_requires_hilbert_series():
    with pytest.raises(ValueError):
        decide_positive_depth(fix1(), (3, 3))


def test_split_low_part_contract():
    rng = random.Random(42)
    for _ in range(40):
        D = rand_decomposition(rng, 2, (2, 2), 5, allow_poly=False)
        N = low_part_bound(D)
        H1, H2 = split_low_part(D, N)
        H = decomposition_to_series(D)
        assert H1 + decomposition_to_series(H2) == H
        assert H1.coeff(N) == 0
        box = Box((N[0] - 8, N[1] - 8), (N[0] + 3, N[1] + 3))
        e1 = H1.expand(box)
        e2 = decomposition_to_series(H2).expand(box)
        for a in box.points():
            assert e1[a] == H1.coeff(meet(a, N))
            if leq(a, N) and a != N:
                assert e2[a] == 0


def test_split_low_part_rejects_small_bound():
    D = rand_decomposition(random.Random(1), 2, (1, 0), 1, allow_poly=False)
    t = D.terms[0]
    with pytest.raises(ValueError):
        split_low_part(D, (t.a[0] + 1, t.a[1]))


def test_greedy_on_valid_and_invalid_inputs():
    ok = greedy_row_decompose(parse_series("1/(1-t1) + t1^2/(1-t2) + 1/(1-t2)", 2))
    assert ok.ok and not ok.decomposition.has_polynomial_part
    assert verify_decomposition(parse_series("1/(1-t1) + t1^2/(1-t2) + 1/(1-t2)", 2), ok.decomposition)
    bad = greedy_row_decompose(fix3(2))
    assert not bad.ok and sigma(fix3(2), bad.witness) < 0


def test_forced_certificate_path_agrees():
    # a box far away hides every violation from the quick search
    rng = random.Random(43)
    far = Box((90, 90), (90, 90))
    for _ in range(120):
        H = random_hilbert(rng, 0.7)
        try:
            quick = decide_positive_depth(H, (2, 2))
        except ValueError:
            continue
        slow = decide_positive_depth(H, (2, 2), box=far)
        assert slow.verdict == quick.verdict
        if slow.witness is not None:
            assert sigma(H, slow.witness) < 0


def test_random_decompositions_without_polynomial_part():
    rng = random.Random(44)
    for _ in range(30):
        D = rand_decomposition(rng, 2, (2, 2), 5, allow_poly=False)
        H = decomposition_to_series(D)
        out = decide_positive_depth(H, (2, 2))
        assert out.positive and verify_decomposition(H, out.certificate)


def test_ideal_series_for_staircase():
    L = ideal_quotient_series([(1, 5), (3, 4), (4, 3), (7, 1)])
    assert sorted(a for a, c in L.items() if c == 1) == sorted([(-1, -5), (-3, -4), (-4, -3), (-7, -1)])
    assert sorted(a for a, c in L.items() if c == -1) == sorted([(-1, -4), (-3, -3), (-4, -1)])
    with pytest.raises(ValueError):
        FractionalMonomialIdeal(((0, 0), (1, 1)))


def test_sigma_is_constant_term():
    rng = random.Random(45)
    for _ in range(50):
        H = random_hilbert(rng)
        xs = sorted(rng.sample(range(-3, 4), rng.randint(1, 4)))
        ys = sorted(rng.sample(range(-3, 4), len(xs)), reverse=True)
        U = list(zip(xs, ys))
        res = check_condition_c(H, U, Box((-1, -1), (1, 1)))
        assert res.sigma == sigma(H, U)
