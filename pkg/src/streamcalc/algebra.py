"""Sparse multivariate polynomials with exact rational coefficients.

Variables are addressed by index.  Index 0 is the independent variable ``x``
and index ``i >= 1`` is ``x_i``; the ambient variable count ``nvars`` is fixed
per polynomial and mixing counts is an error.  Monomials are plain tuples of
non-negative exponents.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

Monomial = tuple


class DimensionError(ValueError):
    """Operands live in polynomial rings with different variable counts."""


class MonomialOrder(enum.Enum):
    """Monomial orders with variables ranked ``x < x1 < ... < xn``.

    Lex compares exponents starting from the largest variable ``xn``; grlex
    compares total degree first and breaks ties with lex.
    """

    GRLEX = "grlex"
    LEX = "lex"

    def key(self, m: Monomial):
        rev = m[::-1]
        if self is MonomialOrder.LEX:
            return rev
        return (sum(m), rev)


GRLEX = MonomialOrder.GRLEX
LEX = MonomialOrder.LEX


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder = GRLEX) -> int:
    """Return -1, 0 or 1 as ``m1`` is smaller, equal or larger than ``m2``."""
    if len(m1) != len(m2):
        raise DimensionError(f"monomials of length {len(m1)} and {len(m2)}")
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


def min_variable(m: Monomial) -> int:
    """Index of the smallest variable occurring in ``m``."""
    for i, e in enumerate(m):
        if e:
            return i
    raise ValueError("min_variable is undefined on the unit monomial")


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(i + j for i, j in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True if ``a`` divides ``b``."""
    return all(i <= j for i, j in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(i - j for i, j in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(i, j) for i, j in zip(a, b))


def _coerce_coefficient(c):
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _coerce_coefficient(Fraction(c))
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


def _norm(c):
    # integral values are kept as int: same equality and hash, much cheaper arithmetic
    if type(c) is int or c.denominator != 1:
        return c
    return c.numerator


class Polynomial:
    """Immutable polynomial in ``nvars`` variables over the rationals.

    Stored as a map from exponent tuples to nonzero exact coefficients, so
    structural equality is mathematical equality.  Integral coefficients are
    held as ``int`` internally; accessors that return a single coefficient
    return :class:`Fraction`.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | Iterable = ()):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for m, c in items:
            m = tuple(int(e) for e in m)
            if len(m) != nvars:
                raise DimensionError(f"monomial {m} in a ring of {nvars} variables")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            acc[m] = acc.get(m, 0) + _coerce_coefficient(c)
        self.nvars = nvars
        self._terms = {m: _norm(c) for m, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Polynomial":
        # Caller guarantees canonical form.
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, c, nvars: int) -> "Polynomial":
        c = _coerce_coefficient(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(1, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise DimensionError(f"variable index {i} outside a ring of {nvars} variables")
        m = [0] * nvars
        m[i] = 1
        return cls._raw(nvars, {tuple(m): Fraction(1)})

    @classmethod
    def monomial(cls, m: Monomial, c=1) -> "Polynomial":
        return cls(len(m), {m: c})

    # -- inspection -------------------------------------------------------

    def terms(self) -> dict:
        """A copy of the term map."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, m: Monomial) -> Fraction:
        return Fraction(self._terms.get(tuple(m), 0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_term(self) -> Fraction:
        return Fraction(self._terms.get((0,) * self.nvars, 0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self._terms), default=-1)

    def variables(self) -> set:
        """Indices of the variables that actually occur."""
        return {i for m in self._terms for i, e in enumerate(m) if e}

    def leading_monomial(self, order: MonomialOrder = GRLEX) -> Monomial:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GRLEX) -> Fraction:
        return Fraction(self._terms[self.leading_monomial(order)])

    def sorted_terms(self, order: MonomialOrder = GRLEX) -> list:
        """Terms in decreasing order."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise DimensionError(
                    f"polynomials in {self.nvars} and {other.nvars} variables"
                )
            return other
        if isinstance(other, Rational):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for m, c in other._terms.items():
            s = acc.get(m, 0) + c
            if s:
                acc[m] = _norm(s)
            else:
                acc.pop(m, None)
        return Polynomial._raw(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> "Polynomial":
        c = _coerce_coefficient(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {m: _norm(c * v) for m, v in self._terms.items()})

    def mul_term(self, m: Monomial, c) -> "Polynomial":
        """Multiply by the single term ``c * m``."""
        c = _coerce_coefficient(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(
            self.nvars,
            {monomial_mul(k, m): _norm(c * v) for k, v in self._terms.items()},
        )

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        acc: dict = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(i + j for i, j in zip(ma, mb))
                acc[m] = acc.get(m, 0) + ca * cb
        return Polynomial._raw(self.nvars, {m: _norm(c) for m, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, Rational):
            return self._terms == Polynomial.constant(other, self.nvars)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and evaluation -----------------------------------------

    def partial(self, i: int) -> "Polynomial":
        """Formal partial derivative with respect to variable ``i``."""
        if not 0 <= i < self.nvars:
            raise DimensionError(f"variable index {i} outside a ring of {self.nvars} variables")
        acc = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                dm = m[:i] + (e - 1,) + m[i + 1:]
                acc[dm] = c * e
        return Polynomial._raw(self.nvars, acc)

    def evaluate(self, point: Sequence) -> Fraction:
        """Value at a point of exact rationals."""
        if len(point) != self.nvars:
            raise DimensionError(f"point of length {len(point)} for {self.nvars} variables")
        point = [_coerce_coefficient(v) for v in point]
        total = 0
        for m, c in self._terms.items():
            t = c
            for v, e in zip(point, m):
                if e:
                    t *= v ** e
            total += t
        return Fraction(total)

    def compose(self, values: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute ``values[i]`` for variable ``i``.

        All values must share one ambient ring, which becomes the ring of the
        result; ``values`` may be empty only for ``nvars == 0`` polynomials, in
        which case pass ``target_nvars`` through :func:`compose_into`.
        """
        if len(values) != self.nvars:
            raise DimensionError(f"{len(values)} values for {self.nvars} variables")
        if not values:
            raise ValueError("use compose_into for polynomials without variables")
        return compose_into(self, values, values[0].nvars)

    def __repr__(self):
        return f"Polynomial({to_text(self)!r})"

    def __str__(self):
        return to_text(self)


def compose_into(p: Polynomial, values: Sequence[Polynomial], nvars: int) -> Polynomial:
    """Substitute ``values`` into ``p``, producing a polynomial in ``nvars`` variables."""
    if len(values) != p.nvars:
        raise DimensionError(f"{len(values)} values for {p.nvars} variables")
    for v in values:
        if v.nvars != nvars:
            raise DimensionError(f"substituted value in {v.nvars} variables, expected {nvars}")
    powers: dict = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            powers[key] = values[i] ** e
        return powers[key]

    acc: dict = {}
    unit = (0,) * nvars
    for m, c in p.items():
        term = None
        for i, e in enumerate(m):
            if e:
                term = power(i, e) if term is None else term * power(i, e)
        if term is None:
            acc[unit] = acc.get(unit, 0) + c
            continue
        for tm, tc in term.items():
            acc[tm] = acc.get(tm, 0) + c * tc
    return Polynomial._raw(nvars, {m: _norm(c) for m, c in acc.items() if c})


def default_names(nvars: int) -> list:
    return ["x"] + [f"x{i}" for i in range(1, nvars)]


def _monomial_text(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def to_text(p: Polynomial, names: Sequence[str] | None = None) -> str:
    """Render ``p`` in the ASCII grammar read by :mod:`streamcalc.parsing`.

    Terms appear in decreasing grlex order.
    """
    if names is None:
        names = default_names(p.nvars)
    if len(names) != p.nvars:
        raise DimensionError(f"{len(names)} names for {p.nvars} variables")
    if not p:
        return "0"
    out = []
    for k, (m, c) in enumerate(p.sorted_terms()):
        mono = _monomial_text(m, names)
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if k == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)
