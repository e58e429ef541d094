"""Polynomial expressions and the SDE document format.

Expression grammar, loosest binding first::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INTEGER)?
    atom   := RATIONAL | IDENT | '(' expr ')'

``RATIONAL`` is ``digits`` or ``digits/digits``.  There is no implicit
multiplication and no division operator.

A document is a sequence of statements separated by newlines or ``;`` with
``#`` comments::

    product = convolution          # or shuffle, hadamard, infiltration, custom
    F = y2*y3 + y1*y4              # custom products only, over x, y1..y4
    G = 0                          # custom products only, over y1
    x1' = x2 ; x1(0) = 0
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Polynomial
from .products import BUILTINS, F_NAMES, G_NAMES, ProductSpec
from .transition import Context, SdeSystem


class ParseError(ValueError):
    def __init__(self, message: str, position: int | None = None, line: int | None = None):
        self.message = message
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"column {position + 1}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\s*/\s*\d*)?)|(?P<id>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()])|(?P<bad>\S))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", start)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _rational_token(value: str, pos: int) -> Fraction:
    if "/" not in value:
        return Fraction(int(value))
    num, den = (s.strip() for s in value.split("/"))
    if not den or int(den) == 0:
        raise ParseError(f"malformed rational {value!r}", pos)
    return Fraction(int(num), int(den))


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.index = {n: k for k, n in enumerate(names)}
        self.nvars = len(names)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        kind, value, pos = self.take()
        if value != op or kind != "op":
            raise ParseError(f"expected {op!r}, found {value or 'end of input'!r}", pos)

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", pos)
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            p = p * self.unary()
        return p

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, value, pos = self.take()
            if kind != "num" or "/" in value:
                raise ParseError("exponent must be a non-negative integer", pos)
            base = base ** int(value)
        return base

    def atom(self):
        kind, value, pos = self.take()
        if kind == "num":
            return Polynomial.constant(_rational_token(value, pos), self.nvars)
        if kind == "id":
            if value not in self.index:
                raise ParseError(f"unknown identifier {value!r}", pos)
            return Polynomial.variable(self.index[value], self.nvars)
        if (kind, value) == ("op", "("):
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos)


def parse_polynomial(text: str, names: Sequence[str]) -> Polynomial:
    """Parse ``text`` into a polynomial over the variables ``names`` (in index order)."""
    return _Parser(text, names).parse()


_RATIONAL = re.compile(r"\s*([-+]?)\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL.match(text)
    if not m:
        raise ParseError(f"malformed rational {text.strip()!r}")
    num = int(m.group(2))
    den = int(m.group(3)) if m.group(3) is not None else 1
    if den == 0:
        raise ParseError(f"malformed rational {text.strip()!r}")
    value = Fraction(num, den)
    return -value if m.group(1) == "-" else value


@dataclass(frozen=True)
class SdeDocument:
    product: ProductSpec
    sde: SdeSystem

    @property
    def names(self) -> tuple:
        return self.sde.names

    @property
    def ring_names(self) -> list:
        return self.sde.ring_names

    def parse(self, text: str) -> Polynomial:
        """Parse an expression over ``x`` and the declared variables."""
        return parse_polynomial(text, self.ring_names)

    def context(self) -> Context:
        return Context(self.product, self.sde)


_IDENT = r"[A-Za-z_][A-Za-z_0-9]*"
_DRIFT = re.compile(rf"^({_IDENT})\s*'\s*=(.*)$")
_INIT = re.compile(rf"^({_IDENT})\s*\(\s*0\s*\)\s*=(.*)$")
_ASSIGN = re.compile(rf"^({_IDENT})\s*=(.*)$")


def _statements(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        for stmt in line.split(";"):
            stmt = stmt.strip()
            if stmt:
                yield lineno, stmt


def parse_document(text: str) -> SdeDocument:
    """Parse an SDE document; errors carry the offending line number."""
    product = None
    custom: dict = {}
    drifts: dict = {}
    inits: dict = {}
    for lineno, stmt in _statements(text):
        if m := _DRIFT.match(stmt):
            name, rhs = m.group(1), m.group(2).strip()
            if name == "x":
                raise ParseError("'x' is the independent variable and cannot be declared", line=lineno)
            if name in drifts:
                raise ParseError(f"duplicate drift for {name!r}", line=lineno)
            drifts[name] = (rhs, lineno)
        elif m := _INIT.match(stmt):
            name, rhs = m.group(1), m.group(2).strip()
            if name == "x":
                raise ParseError("x(0) is fixed to 0 and cannot be set", line=lineno)
            if name in inits:
                raise ParseError(f"duplicate initial value for {name!r}", line=lineno)
            try:
                inits[name] = (parse_rational(rhs), lineno)
            except ParseError as e:
                raise ParseError(e.message, e.position, lineno) from None
        elif m := _ASSIGN.match(stmt):
            key, rhs = m.group(1), m.group(2).strip()
            if key == "product":
                if product is not None:
                    raise ParseError("product given twice", line=lineno)
                if rhs != "custom" and rhs not in BUILTINS:
                    raise ParseError(f"unknown product {rhs!r}", line=lineno)
                product = rhs
            elif key in ("F", "G"):
                if product != "custom":
                    raise ParseError(f"{key} is only allowed after 'product = custom'", line=lineno)
                if key in custom:
                    raise ParseError(f"{key} given twice", line=lineno)
                custom[key] = (rhs, lineno)
            else:
                raise ParseError(f"unknown setting {key!r}", line=lineno)
        else:
            raise ParseError(f"cannot parse statement {stmt!r}", line=lineno)

    if product is None:
        raise ParseError("missing 'product = ...' line")
    if not drifts:
        raise ParseError("no variables declared")
    for name, (_, lineno) in inits.items():
        if name not in drifts:
            raise ParseError(f"initial value for undeclared variable {name!r}", line=lineno)
    for name, (_, lineno) in drifts.items():
        if name not in inits:
            raise ParseError(f"missing initial value {name}(0)", line=lineno)

    names = list(drifts)
    ring = ["x"] + names
    polys = []
    for name in names:
        rhs, lineno = drifts[name]
        try:
            polys.append(parse_polynomial(rhs, ring))
        except ParseError as e:
            raise ParseError(e.message, e.position, lineno) from None
    sde = SdeSystem(tuple(polys), tuple(inits[n][0] for n in names), tuple(names))

    if product == "custom":
        if "F" not in custom:
            raise ParseError("custom product requires an 'F = ...' line")
        f_text, f_line = custom["F"]
        g_text, g_line = custom.get("G", ("0", None))
        try:
            F = parse_polynomial(f_text, F_NAMES)
        except ParseError as e:
            raise ParseError(e.message, e.position, f_line) from None
        try:
            G = parse_polynomial(g_text, G_NAMES)
        except ParseError as e:
            raise ParseError(e.message, e.position, g_line) from None
        spec = ProductSpec("custom", F, G)
    else:
        spec = BUILTINS[product]
    return SdeDocument(spec, sde)
