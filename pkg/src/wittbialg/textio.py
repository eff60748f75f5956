"""Text syntax for elements and tensors.

Grammar (whitespace-insensitive outside literals)::

    expr    := '0' | ['-'] term (('+' | '-') term)*
    term    := [rational '*'] factor ('(*)' factor)*
    factor  := ['t' vector] 'd' vector
    vector  := '[' signed (',' signed)* ']'
    signed  := ['-'] rational            rational := p | p/q

A term with one factor is a Witt monomial ``c * t^x d``; with k factors it is a
decomposable k-tensor.  Printing is canonical (compare-ordered, zero-degree
``t[...]`` omitted) and ``parse(format(v)) == v`` with ``format(parse(s)) == s``
for every canonical string ``s``.
"""
from __future__ import annotations

import re

from . import scalars as sc
from .scalars import DimensionError, Q
from .tensors import Tensor, tensor_of
from .witt import WittElement

_NUM = re.compile(r"\d+(?:/\d+)?")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.pos = pos
        super().__init__(f"{message} at line {self.line}, column {self.column}")


class _Parser:
    def __init__(self, text: str, n: int | None):
        self.text = text
        self.pos = 0
        self.n = n

    def error(self, msg, pos=None):
        raise ParseError(msg, self.text, self.pos if pos is None else pos)

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.ws()
        return self.text.startswith(s, self.pos)

    def accept(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.accept(s):
            found = self.text[self.pos:self.pos + 1] or "end of input"
            self.error(f"expected {s!r}, found {found!r}")

    def at_end(self) -> bool:
        self.ws()
        return self.pos >= len(self.text)

    def rational(self) -> Q:
        self.ws()
        m = _NUM.match(self.text, self.pos)
        if not m:
            self.error("expected rational literal")
        num, _, den = m.group().partition("/")
        if den and int(den) == 0:
            self.error("zero denominator")
        self.pos = m.end()
        return Q(int(num), int(den) if den else 1)

    def signed(self) -> Q:
        self.ws()
        neg = False
        if self.text.startswith("-", self.pos):
            neg = True
            self.pos += 1
            # no whitespace inside a literal
            if not _NUM.match(self.text, self.pos):
                self.error("expected rational literal")
        q = self.rational()
        return -q if neg else q

    def vector(self) -> tuple:
        start = self.pos
        self.expect("[")
        vals = [self.signed()]
        while self.accept(","):
            vals.append(self.signed())
        self.expect("]")
        if self.n is None:
            self.n = len(vals)
        elif len(vals) != self.n:
            raise DimensionError(
                f"vector of length {len(vals)} in rank-{self.n} input at "
                f"line {self.text.count(chr(10), 0, start) + 1}, column {start - (self.text.rfind(chr(10), 0, start) + 1) + 1}"
            )
        return tuple(vals)

    def factor(self) -> WittElement:
        x = None
        if self.accept("t"):
            x = self.vector()
        self.expect("d")
        d = self.vector()
        if x is None:
            x = sc.zero_vec(len(d))
        return WittElement(len(d), {x: d})

    def term(self):
        self.ws()
        coef = Q(1)
        if _NUM.match(self.text, self.pos):
            coef = self.rational()
            self.expect("*")
        factors = [self.factor()]
        while self.accept("(*)"):
            factors.append(self.factor())
        return coef, factors

    def expr(self):
        """Return a list of ``(coeff, factors)`` or [] for the literal 0."""
        self.ws()
        m = _NUM.match(self.text, self.pos)
        if m and m.group() == "0":
            save = self.pos
            self.pos = m.end()
            if self.at_end():
                return []
            self.pos = save
        sign = -1 if self.accept("-") else 1
        terms = []
        while True:
            start = self.pos
            coef, factors = self.term()
            terms.append((sign * coef, factors, start))
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                break
        if not self.at_end():
            self.error(f"unexpected {self.text[self.pos]!r}")
        return terms


def parse(text: str, n: int | None = None, arity: int | None = None):
    """Parse an element (arity 1) or tensor; the result type follows the arity."""
    p = _Parser(text, n)
    terms = p.expr()
    if not terms:
        if p.n is None:
            raise DimensionError("rank needed to parse '0'")
        if arity in (None, 1):
            return WittElement.zero(p.n)
        return Tensor.zero(p.n, arity)
    k = arity if arity is not None else len(terms[0][1])
    for _, factors, start in terms:
        if len(factors) != k:
            raise ParseError(f"term with {len(factors)} factor(s) where {k} expected", text, start)
    if k == 1:
        out = WittElement.zero(p.n)
        for c, (f,), _ in terms:
            out = out + c * f
        return out
    out = Tensor.zero(p.n, k)
    for c, factors, _ in terms:
        out = out + c * tensor_of(*factors)
    return out


def parse_element(text: str, n: int | None = None) -> WittElement:
    return parse(text, n, 1)


def parse_tensor(text: str, n: int | None = None, arity: int | None = None) -> Tensor:
    out = parse(text, n, arity)
    if isinstance(out, WittElement):
        raise ParseError("expected a tensor, found an element", text, 0)
    return out


def parse_point(text: str, n: int | None = None) -> tuple:
    p = _Parser(text, n)
    v = p.vector()
    if not p.at_end():
        p.error(f"unexpected {p.text[p.pos]!r}")
    return v


def format_vector(v) -> str:
    return "[" + ",".join(sc.format_rational(a) for a in v) + "]"


def _factor(x, d) -> str:
    if sc.is_zero(x):
        return f"d{format_vector(d)}"
    return f"t{format_vector(x)} d{format_vector(d)}"


def format_element(u: WittElement) -> str:
    if not u:
        return "0"
    return " + ".join(_factor(x, d) for x, d in u.items())


def format_tensor(t: Tensor) -> str:
    if not t:
        return "0"
    parts = []
    for labels, c in t.items():
        body = " (*) ".join(_factor(x, sc.unit_vec(t.n, i)) for x, i in labels)
        a = abs(c)
        if a != 1:
            body = f"{sc.format_rational(a)} * {body}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts)


def format_any(v) -> str:
    if isinstance(v, WittElement):
        return format_element(v)
    return format_tensor(v)
