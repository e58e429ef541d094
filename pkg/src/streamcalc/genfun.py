"""Generating functions: univariate polynomials, rational functions, Taylor
expansion, ordinary/exponential transforms and linear systems.

Everything is exact over the rationals.  The formal variable is printed as ``z``.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Sequence

from .algebra import Polynomial
from .linalg import solve
from .streams import StreamPrefix
from .transition import SdeSystem


class PoleAtOriginError(ZeroDivisionError):
    pass


class NotLinearError(ValueError):
    pass


class UnivariatePolynomial:
    """Polynomial in ``z`` with coefficients stored in ascending powers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def z(cls) -> "UnivariatePolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _coerce(self, other):
        if isinstance(other, UnivariatePolynomial):
            return other
        if isinstance(other, Rational):
            return UnivariatePolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePolynomial([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self or not other:
            return UnivariatePolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def divmod(self, other: "UnivariatePolynomial"):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - other.degree, 1)
        lead = other.coeffs[-1]
        for k in range(len(rem) - len(other.coeffs), -1, -1):
            c = rem[k + other.degree] / lead
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UnivariatePolynomial(q), UnivariatePolynomial(rem[: other.degree] if other.degree > 0 else [])

    def monic(self) -> "UnivariatePolynomial":
        return self * (1 / self.coeffs[-1]) if self else self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UnivariatePolynomial({render_univariate(self)!r})"


def poly_gcd(a: UnivariatePolynomial, b: UnivariatePolynomial) -> UnivariatePolynomial:
    """Monic gcd; gcd(0, 0) is 0."""
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic()


class RationalFunction:
    """Reduced fraction of univariate polynomials.

    The denominator is scaled to constant term 1 when it does not vanish at 0,
    and made monic otherwise.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, UnivariatePolynomial) else UnivariatePolynomial(num if isinstance(num, (list, tuple)) else (num,))
        if den is None:
            den = UnivariatePolynomial((1,))
        elif not isinstance(den, UnivariatePolynomial):
            den = UnivariatePolynomial(den if isinstance(den, (list, tuple)) else (den,))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = num, UnivariatePolynomial((1,))
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.divmod(g)[0], den.divmod(g)[0]
        scale = 1 / (den[0] if den[0] else den.coeffs[-1])
        self.num, self.den = num * scale, den * scale

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (Rational, UnivariatePolynomial)):
            return RationalFunction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({render_rational_function(self)!r})"

    def __str__(self):
        return render_rational_function(self)


def _term(c: Fraction, k: int, first: bool) -> str:
    a = abs(c)
    mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
    if not mono:
        body = str(a)
    elif a == 1:
        body = mono
    else:
        body = f"{a}*{mono}"
    if first:
        return f"-{body}" if c < 0 else body
    return f" - {body}" if c < 0 else f" + {body}"


def render_univariate(p: UnivariatePolynomial) -> str:
    """Ascending powers of ``z``, e.g. ``1 - z - z^2``."""
    parts = [(k, c) for k, c in enumerate(p.coeffs) if c]
    if not parts:
        return "0"
    return "".join(_term(c, k, i == 0) for i, (k, c) in enumerate(parts))


def render_rational_function(f: RationalFunction) -> str:
    def wrap(p):
        s = render_univariate(p)
        return f"({s})" if sum(1 for c in p.coeffs if c) > 1 else s

    if f.den == UnivariatePolynomial((1,)):
        return render_univariate(f.num)
    return f"{wrap(f.num)} / {wrap(f.den)}"


def taylor(f: RationalFunction, length: int) -> StreamPrefix:
    """First ``length`` Taylor coefficients at 0, by the recurrence on the denominator."""
    den, num = f.den, f.num
    if not den[0]:
        raise PoleAtOriginError("denominator vanishes at z = 0")
    d0 = den[0]
    out = []
    for n in range(length):
        s = num[n]
        for k in range(1, min(n, den.degree) + 1):
            s -= den[k] * out[n - k]
        out.append(s / d0)
    return tuple(out)


def ogf_to_egf(a: Sequence) -> StreamPrefix:
    """Multiply element ``j`` by ``j!``: ordinary coefficients to derivative values."""
    return tuple(Fraction(v) * factorial(j) for j, v in enumerate(a))


def egf_to_ogf(a: Sequence) -> StreamPrefix:
    """Divide element ``j`` by ``j!``."""
    return tuple(Fraction(v) / factorial(j) for j, v in enumerate(a))


def _series_mul(a, b, n):
    out = [Fraction(0)] * n
    for i, u in enumerate(a[:n]):
        if u:
            for j in range(n - i):
                out[i + j] += u * b[j]
    return out


def compose_series(q: Polynomial, a: Sequence) -> StreamPrefix:
    """Coefficients of ``q(z, g(z))`` through index ``len(a) - 1``, ``g`` the series ``a``.

    ``q`` is a polynomial in ``(x, y)`` with ``x`` read as ``z``.  Truncated
    products never consult coefficients past the window, so every returned
    coefficient is exact.
    """
    if q.nvars != 2:
        raise ValueError("expected a polynomial in (x, y)")
    n = len(a)
    g = [Fraction(v) for v in a]
    powers = {0: [Fraction(1)] + [Fraction(0)] * (n - 1) if n else []}

    def gpow(k):
        if k not in powers:
            powers[k] = _series_mul(gpow(k - 1), g, n)
        return powers[k]

    total = [Fraction(0)] * n
    for (ex, ey), c in q.items():
        s = gpow(ey)
        for j in range(ex, n):
            total[j] += c * s[j - ex]
    return tuple(total)


def verify_branch(q: Polynomial, a: Sequence) -> bool:
    """Whether the truncated series ``a`` is consistent with being a branch of ``q``.

    True iff every coefficient of ``q(z, g(z))`` up to index ``len(a) - 1`` is 0.
    """
    if q.is_zero():
        raise ValueError("q must be nonzero")
    return not any(compose_series(q, a))


def drift_matrix(sde: SdeSystem) -> list:
    """Coefficient matrix ``A`` of a linear homogeneous system ``x' = A x``.

    Raises :class:`NotLinearError` naming the first offending equation.
    """
    n = sde.n
    a = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        for m, c in sde.drift(i).items():
            if sum(m) != 1 or m[0]:
                raise NotLinearError(
                    f"drift of {sde.names[i - 1]} is not linear homogeneous in the dependent variables"
                )
            a[i - 1][m.index(1) - 1] = c
    return a


def linear_gf(sde: SdeSystem) -> list:
    """Ordinary generating functions of the dependent variables of a linear system.

    Solves ``(I - z A) H = rho`` over the field of rational functions.
    """
    a = drift_matrix(sde)
    n = sde.n
    z = UnivariatePolynomial.z()
    one = RationalFunction(1)
    mat = [
        [RationalFunction(UnivariatePolynomial((int(i == j),)) - z * a[i][j]) for j in range(n)]
        for i in range(n)
    ]
    rhs = [RationalFunction(r) for r in sde.rho]
    return solve(mat, rhs, one, RationalFunction(0))


def linear_ode_solution_prefix(sde: SdeSystem, length: int) -> list:
    """Taylor coefficients at 0 of the solution ``x_i(z)`` of a linear system.

    Coefficient ``j`` is the ``j``-th Taylor coefficient of ``H_i`` divided by
    ``j!``.
    """
    return [egf_to_ogf(taylor(h, length)) for h in linear_gf(sde)]
