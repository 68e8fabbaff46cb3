"""Exponent vectors and sparse Laurent polynomials with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

Vector = Tuple[int, ...]


# -- exponent vectors -------------------------------------------------------

def zero(n: int) -> Vector:
    return (0,) * n


def unit(n: int, i: int) -> Vector:
    return tuple(1 if k == i else 0 for k in range(n))


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def leq(u: Vector, v: Vector) -> bool:
    """Componentwise partial order."""
    return all(a <= b for a, b in zip(u, v))


def meet(u: Vector, v: Vector) -> Vector:
    return tuple(min(a, b) for a, b in zip(u, v))


def join(u: Vector, v: Vector) -> Vector:
    return tuple(max(a, b) for a, b in zip(u, v))


def meet_all(vectors: Iterable[Vector]) -> Optional[Vector]:
    out = None
    for v in vectors:
        out = v if out is None else meet(out, v)
    return out


def join_all(vectors: Iterable[Vector]) -> Optional[Vector]:
    out = None
    for v in vectors:
        out = v if out is None else join(out, v)
    return out


def embed(v: Vector, positions: Tuple[int, ...], n: int) -> Vector:
    """Place the entries of ``v`` at ``positions`` of a length-``n`` zero vector."""
    out = [0] * n
    for value, pos in zip(v, positions):
        out[pos] = value
    return tuple(out)


def as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c.strip())
    return Fraction(c)


# -- Laurent polynomials ----------------------------------------------------

class LaurentPolynomial:
    """Element of Q[t_1^{+-1}, ..., t_n^{+-1}] stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored. Instances are treated as immutable.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Vector, object]] = None):
        self.nvars = nvars
        clean: Dict[Vector, Fraction] = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(x) for x in e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has length {len(e)}, expected {nvars}")
                c = as_fraction(c)
                if c:
                    clean[e] = clean.get(e, Fraction(0)) + c
                    if not clean[e]:
                        del clean[e]
        self._terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Vector, Fraction]) -> "LaurentPolynomial":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = {e: c for e, c in terms.items() if c}
        return obj

    @classmethod
    def constant(cls, nvars: int, c=1) -> "LaurentPolynomial":
        return cls(nvars, {zero(nvars): c})

    @classmethod
    def monomial(cls, exponent: Vector, c=1) -> "LaurentPolynomial":
        return cls(len(exponent), {tuple(exponent): c})

    @classmethod
    def one_minus(cls, v: Vector) -> "LaurentPolynomial":
        """The factor ``1 - t^v``."""
        return cls(len(v), {zero(len(v)): 1, tuple(v): -1})

    # mapping-like access
    def __getitem__(self, e: Vector) -> Fraction:
        return self._terms.get(tuple(e), Fraction(0))

    def __iter__(self) -> Iterator[Vector]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self):
        return self._terms.items()

    def support(self):
        return self._terms.keys()

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def lower_corner(self) -> Optional[Vector]:
        return meet_all(self._terms)

    def upper_corner(self) -> Optional[Vector]:
        return join_all(self._terms)

    def coefficient_sum(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    # arithmetic
    def _check(self, other: "LaurentPolynomial"):
        if self.nvars != other.nvars:
            raise ValueError(f"dimension mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            self._check(other)
            return other
        return LaurentPolynomial.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPolynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPolynomial):
            c = as_fraction(other)
            return LaurentPolynomial._raw(self.nvars, {e: c * x for e, x in self._terms.items()})
        self._check(other)
        out: Dict[Vector, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPolynomial._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if self.is_monomial():
                (e, c), = self._terms.items()
                return LaurentPolynomial._raw(self.nvars, {tuple(x * k for x in e): c ** k})
            raise ValueError("negative power of a non-monomial")
        out = LaurentPolynomial.constant(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, v: Vector) -> "LaurentPolynomial":
        """Multiply by the monomial ``t^v``."""
        return LaurentPolynomial._raw(self.nvars, {vadd(e, v): c for e, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPolynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self):
        from .formats import format_laurent
        return f"LaurentPolynomial({format_laurent(self)!r})"

    # structural operations
    def project(self, keep: Tuple[int, ...]) -> "LaurentPolynomial":
        """Drop all coordinates not listed in ``keep`` (summing colliding terms)."""
        out: Dict[Vector, Fraction] = {}
        for e, c in self._terms.items():
            k = tuple(e[i] for i in keep)
            out[k] = out.get(k, Fraction(0)) + c
        return LaurentPolynomial._raw(len(keep), out)

    def div_one_minus(self, v: Vector) -> Optional["LaurentPolynomial"]:
        """Exact quotient by ``1 - t^v`` (``v >= 0``, nonzero), or ``None``.

        Works chain by chain along the direction ``v``: the quotient satisfies
        ``q[x] = P[x] + q[x - v]`` and must vanish past the last term of each chain.
        """
        v = tuple(v)
        j = next(i for i, x in enumerate(v) if x > 0)
        chains: Dict[Vector, Dict[int, Fraction]] = {}
        for e, c in self._terms.items():
            k = e[j] // v[j]
            rep = tuple(a - k * b for a, b in zip(e, v))
            chains.setdefault(rep, {})[k] = c
        out: Dict[Vector, Fraction] = {}
        for rep, chain in chains.items():
            lo, hi = min(chain), max(chain)
            acc = Fraction(0)
            for k in range(lo, hi + 1):
                acc += chain.get(k, 0)
                if k == hi:
                    if acc:
                        return None
                elif acc:
                    out[tuple(a + k * b for a, b in zip(rep, v))] = acc
        return LaurentPolynomial._raw(self.nvars, out)

    def divide_exact(self, other: "LaurentPolynomial") -> Optional["LaurentPolynomial"]:
        """Exact quotient ``self / other`` in the Laurent ring, or ``None``.

        Lex-leading-term division; quotient exponents are confined to the box
        allowed by Newton polytope additivity, which guarantees termination.
        """
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPolynomial(self.nvars)
        lo = vsub(self.lower_corner(), other.lower_corner())
        hi = vsub(self.upper_corner(), other.upper_corner())
        lead_e = max(other._terms)
        lead_c = other._terms[lead_e]
        rem = dict(self._terms)
        quo: Dict[Vector, Fraction] = {}
        while rem:
            e = max(rem)
            qe = vsub(e, lead_e)
            if not (leq(lo, qe) and leq(qe, hi)):
                return None
            qc = rem[e] / lead_c
            quo[qe] = quo.get(qe, Fraction(0)) + qc
            for oe, oc in other._terms.items():
                x = vadd(qe, oe)
                val = rem.get(x, Fraction(0)) - qc * oc
                if val:
                    rem[x] = val
                else:
                    rem.pop(x, None)
        return LaurentPolynomial._raw(self.nvars, quo)


def factor_one_minus(p: LaurentPolynomial) -> Optional[Tuple[Fraction, Vector, Tuple[Vector, ...]]]:
    """Write ``p = c * t^w * prod (1 - t^v)`` if possible.

    Returns ``(c, w, factors)`` or ``None``. The factor of least total degree
    always shows up as a term of least positive total degree, so peeling those
    off greedily finds the factorisation whenever one exists.
    """
    if p.is_zero():
        return None
    w = p.lower_corner()
    c = p[w]
    if not c:
        return None
    rest = p.shift(tuple(-x for x in w)) * (1 / c)
    factors = []
    one = LaurentPolynomial.constant(p.nvars)
    while rest != one:
        candidates = [e for e in rest if any(e)]
        if not candidates:
            return None
        v = min(candidates, key=lambda e: (sum(e), e))
        q = rest.div_one_minus(v)
        if q is None:
            return None
        factors.append(v)
        rest = q
    return c, w, tuple(sorted(factors))
