"""Seeded random inputs and brute-force oracles shared by the tests."""

import itertools
from fractions import Fraction
from functools import lru_cache

from hilbertseries.laurent import LaurentPolynomial
from hilbertseries.series import HilbertDecomposition, RationalSeries, decomposition_to_series


def rand_decomposition(rng, n, m, maxterms=5, allow_poly=True, shift=3):
    terms = []
    for _ in range(rng.randint(1, maxterms)):
        c = rng.randint(1, 5)
        a = tuple(rng.randint(-shift, shift) for _ in range(n))
        while True:
            e = tuple(rng.randint(0, mi) for mi in m)
            if allow_poly or any(e):
                break
        terms.append((c, a, e))
    return HilbertDecomposition.from_triples(n, terms)


def perturbed(rng, n, m):
    """A nonnegative-looking series with a negative extremal coefficient on some restriction.

    The injected ``-k t^a / prod_{i in S} (1-t_i)^{e_i}`` has, in every
    coordinate set ``S``, a higher pole order than any positive term, so the
    restriction to ``S`` at ``u_j = a_j`` has a negative leading coefficient.
    """
    while True:
        D = rand_decomposition(rng, n, m)
        S = [i for i in range(n) if rng.random() < 0.5] or [rng.randrange(n)]
        e = tuple(rng.randint(1, m[i]) if i in S else 0 for i in range(n))
        if all(any(t.e[i] < e[i] for i in S) for t in D.terms):
            a = tuple(rng.randint(-3, 3) for _ in range(n))
            k = rng.randint(1, 5)
            bad = RationalSeries.standard(LaurentPolynomial.monomial(a, k), e)
            return decomposition_to_series(D) - bad


def naive_coeff(H, a):
    """Coefficient by enumerating exponent choices for every denominator factor."""
    total = Fraction(0)
    factors = tuple(H.factors)
    for u, c in H.numerator.items():
        w = tuple(x - y for x, y in zip(a, u))
        if min(w, default=0) < 0:
            continue
        total += c * _ways(w, factors)
    return total


@lru_cache(maxsize=None)
def _ways(w, factors):
    if not factors:
        return 1 if not any(w) else 0
    v, rest = factors[0], factors[1:]
    count, k = 0, 0
    while True:
        r = tuple(x - k * y for x, y in zip(w, v))
        if min(r) < 0:
            return count
        count += _ways(r, rest)
        k += 1


def naive_expand(H, lo, hi):
    return {a: naive_coeff(H, a) for a in itertools.product(*(range(x, y + 1) for x, y in zip(lo, hi)))}


def brute_min_sigma(h, points):
    """Least ``sigma`` over all declining sequences of ``points`` (empty sequence gives 0)."""
    pts = sorted(points)
    best = [Fraction(0), ()]

    def go(seq, s):
        if seq and s < best[0]:
            best[0], best[1] = s, tuple(seq)
        last = seq[-1] if seq else None
        for p in pts:
            if last is None or (p[0] > last[0] and p[1] < last[1]):
                add = h(p) - (h((last[0], p[1])) if last else 0)
                go(seq + [p], s + add)

    go([], Fraction(0))
    return best[0], best[1]
