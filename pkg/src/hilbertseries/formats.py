"""Text grammar and JSON encodings for polynomials, series and decompositions.

Grammar (whitespace is ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' exponent)?
    atom   := number | variable | '(' expr ')'
    exponent := ['-'] integer | '(' ['-'] integer ')' | '[' integer (',' integer)* ']'

Variables are ``t1 .. tn``; plain ``t`` means ``t1`` when there is one
variable, and ``t^[v1,...,vn]`` is the monomial with exponent vector ``v``.
A divisor must be ``c * t^w * prod (1 - t^v)`` so that the quotient is again
a rational series.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from .laurent import LaurentPolynomial, Vector, as_fraction, unit
from .series import DecompositionTerm, HilbertDecomposition, RationalSeries, invert

MAX_EXPONENT = 10 ** 6


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


_TOKEN = re.compile(r"\s*(?:(\d+)|(t\d*)|(.))")


@dataclass
class _Tok:
    kind: str  # "num", "var", "op", "end"
    text: str
    pos: int


def _tokenize(text: str) -> List[_Tok]:
    out = []
    pos = 0
    while pos < len(text) and not text[pos:].isspace():
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1):
            out.append(_Tok("num", m.group(1), start))
        elif m.group(2):
            out.append(_Tok("var", m.group(2), start))
        elif m.group(3):
            out.append(_Tok("op", m.group(3), start))
        pos = m.end()
    out.append(_Tok("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.text = text
        self.nvars = nvars
        self.toks = _tokenize(text)
        self.i = 0

    # helpers
    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def _offset(self, tok: _Tok) -> int:
        # byte offset, not character offset
        return len(self.text[: tok.pos].encode())

    def fail(self, msg: str, tok: Optional[_Tok] = None):
        raise ParseError(msg, self._offset(tok or self.cur))

    def accept(self, op: str) -> bool:
        if self.cur.kind == "op" and self.cur.text == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str):
        if not self.accept(op):
            self.fail(f"expected {op!r}")

    # grammar
    def parse(self) -> RationalSeries:
        if self.cur.kind == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.cur.kind != "end":
            self.fail(f"unexpected {self.cur.text!r}")
        return value

    def expr(self) -> RationalSeries:
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> RationalSeries:
        value = self.unary()
        while True:
            if self.accept("*"):
                value = value * self.unary()
            elif self.cur.kind == "op" and self.cur.text == "/":
                tok = self.cur
                self.i += 1
                divisor = self.unary()
                try:
                    value = value * invert(divisor)
                except ValueError:
                    self.fail("divisor is not a monomial times factors 1 - t^v", tok)
            else:
                return value

    def unary(self) -> RationalSeries:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> RationalSeries:
        tok = self.cur
        ahead = [t.text for t in self.toks[self.i + 1:self.i + 3]]
        if tok.kind == "var" and ahead == ["^", "["]:
            return self.vector_monomial()
        base = self.atom()
        if not self.accept("^"):
            return base
        k = self.integer_exponent()
        if k < 0:
            try:
                base = invert(base)
            except ValueError:
                self.fail("negative power of a non-invertible expression", tok)
            k = -k
        if not base.factors and base.numerator.is_monomial():
            return RationalSeries(base.numerator ** k, ())
        out = RationalSeries.constant(self.nvars)
        for _ in range(k):
            out = out * base
        return out

    def integer_exponent(self) -> int:
        paren = self.accept("(")
        sign = -1 if self.accept("-") else 1
        tok = self.cur
        if tok.kind != "num":
            self.fail("expected an integer exponent")
        self.i += 1
        k = int(tok.text)
        if k > MAX_EXPONENT:
            self.fail("exponent too large", tok)
        if paren:
            self.expect(")")
        return sign * k

    def vector_monomial(self) -> RationalSeries:
        tok = self.cur
        if tok.text != "t":
            self.fail("vector exponents need the bare variable 't'", tok)
        self.i += 2
        self.expect("[")
        entries = []
        while True:
            sign = -1 if self.accept("-") else 1
            num = self.cur
            if num.kind != "num":
                self.fail("expected an integer entry")
            if int(num.text) > MAX_EXPONENT:
                self.fail("exponent too large", num)
            entries.append(sign * int(num.text))
            self.i += 1
            if self.accept("]"):
                break
            self.expect(",")
        if len(entries) != self.nvars:
            self.fail(f"exponent vector needs {self.nvars} entries", tok)
        return RationalSeries.term(1, tuple(entries), ())

    def atom(self) -> RationalSeries:
        tok = self.cur
        if tok.kind == "num":
            self.i += 1
            return RationalSeries.constant(self.nvars, int(tok.text))
        if tok.kind == "var":
            self.i += 1
            return RationalSeries.term(1, unit(self.nvars, self._var_index(tok)), ())
        if self.accept("("):
            value = self.expr()
            self.expect(")")
            return value
        if tok.kind == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected {tok.text!r}")

    def _var_index(self, tok: _Tok) -> int:
        name = tok.text
        if name == "t":
            if self.nvars != 1:
                self.fail("bare 't' is only allowed with one variable", tok)
            return 0
        k = int(name[1:])
        if not 1 <= k <= self.nvars:
            self.fail(f"variable {name} out of range for {self.nvars} variables", tok)
        return k - 1


def parse_series(text: str, nvars: int) -> RationalSeries:
    """Parse a rational expression in ``t1..tn`` into a series.

    >>> parse_series("1/((1-t1)*(1-t2))", 2).factors
    ((0, 1), (1, 0))
    """
    return _Parser(text, nvars).parse()


def parse_laurent(text: str, nvars: int) -> LaurentPolynomial:
    H = parse_series(text, nvars)
    if H.factors:
        H = H.reduced()
    if H.factors:
        raise ValueError("expression is not a Laurent polynomial")
    return H.numerator


# -- printing -----------------------------------------------------------------

def _monomial_text(e: Vector) -> str:
    n = len(e)
    parts = []
    for i, k in enumerate(e):
        if k == 0:
            continue
        name = "t" if n == 1 else f"t{i + 1}"
        parts.append(name if k == 1 else f"{name}^{k}")
    return "*".join(parts)


def format_laurent(p: LaurentPolynomial) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for e in sorted(p, reverse=True):
        c = p[e]
        mono = _monomial_text(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def format_factor(v: Vector) -> str:
    return f"(1-{_monomial_text(v)})"


def format_denominator(factors) -> str:
    counts = Counter(factors)
    parts = []
    for v in sorted(counts, reverse=True):
        k = counts[v]
        parts.append(format_factor(v) + (f"^{k}" if k > 1 else ""))
    return "*".join(parts)


def format_series(H: RationalSeries) -> str:
    num = format_laurent(H.numerator)
    if not H.factors:
        return num
    return f"({num})/({format_denominator(H.factors)})"


# -- JSON -----------------------------------------------------------------------

def _rat(c: Fraction) -> str:
    return str(c)


def laurent_to_json(p: LaurentPolynomial) -> List[Dict[str, Any]]:
    return [{"e": list(e), "c": _rat(p[e])} for e in sorted(p)]


def laurent_from_json(items, nvars: int) -> LaurentPolynomial:
    return LaurentPolynomial(nvars, {tuple(t["e"]): as_fraction(t["c"]) for t in items})


def series_to_json(H: RationalSeries) -> Dict[str, Any]:
    counts = Counter(H.factors)
    return {
        "nvars": H.nvars,
        "num": laurent_to_json(H.numerator),
        "den": [{"v": list(v), "mult": counts[v]} for v in sorted(counts)],
    }


def series_from_json(data: Dict[str, Any]) -> RationalSeries:
    n = int(data["nvars"])
    num = laurent_from_json(data.get("num", []), n)
    factors = []
    for f in data.get("den", []):
        factors.extend([tuple(f["v"])] * int(f.get("mult", 1)))
    return RationalSeries(num, factors)


def decomposition_to_json(D: HilbertDecomposition) -> Dict[str, Any]:
    terms = []
    for t in D.terms:
        item: Dict[str, Any] = {"c": _rat(t.c), "a": list(t.a)}
        if t.is_standard:
            item["e"] = list(t.e)
        else:
            item["den"] = [list(v) for v in t.factors]
        terms.append(item)
    return {"nvars": D.nvars, "terms": terms}


def decomposition_from_json(data: Dict[str, Any], nvars: Optional[int] = None) -> HilbertDecomposition:
    items = data["terms"]
    if nvars is None:
        nvars = data.get("nvars")
    if nvars is None:
        if not items:
            raise ValueError("cannot infer the number of variables of an empty decomposition")
        nvars = len(items[0]["a"])
    terms = []
    for t in items:
        if "den" in t:
            terms.append(DecompositionTerm(as_fraction(t["c"]), tuple(t["a"]), tuple(tuple(v) for v in t["den"])))
        else:
            terms.append(DecompositionTerm.standard(as_fraction(t["c"]), tuple(t["a"]), tuple(t.get("e", [0] * nvars))))
    return HilbertDecomposition(int(nvars), tuple(terms))
