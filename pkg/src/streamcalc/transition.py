"""Output and transition functions on polynomials.

A :class:`Context` pairs a product with a drift system.  ``delta`` is defined
on monomials by peeling off the smallest variable and applying the product's
derivative law ``F``; it extends linearly to polynomials.  ``output`` evaluates
at the initial point ``(0, rho)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from .algebra import Polynomial, compose_into, min_variable
from .products import ProductSpec


@dataclass(frozen=True)
class SdeSystem:
    """Drifts ``x_i' = drifts[i-1]`` and initial values ``x_i(0) = rho[i-1]``.

    The independent variable ``x`` (index 0) has drift 1 and initial value 0
    implicitly.  Drifts are polynomials in ``n + 1`` variables.
    """

    drifts: tuple
    rho: tuple
    names: tuple | None = None

    def __post_init__(self):
        drifts = tuple(self.drifts)
        rho = tuple(Fraction(r) for r in self.rho)
        n = len(drifts)
        if len(rho) != n:
            raise ValueError(f"{n} drifts but {len(rho)} initial values")
        for i, d in enumerate(drifts, 1):
            if d.nvars != n + 1:
                raise ValueError(f"drift of x{i} lives in {d.nvars} variables, expected {n + 1}")
        names = tuple(self.names) if self.names is not None else tuple(f"x{i}" for i in range(1, n + 1))
        if len(names) != n:
            raise ValueError("one name per dependent variable required")
        object.__setattr__(self, "drifts", drifts)
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "names", names)

    @classmethod
    def from_text(cls, drifts: Mapping[str, str], initial: Mapping[str, object]) -> "SdeSystem":
        """Build a system from ``{name: drift expression}`` and ``{name: value}``.

        Variable order follows the iteration order of ``drifts``.
        """
        from .parsing import parse_polynomial, parse_rational

        names = list(drifts)
        ring = ["x"] + names
        if set(initial) != set(names):
            raise ValueError("initial values must be given for exactly the drift variables")
        polys = [parse_polynomial(drifts[v], ring) for v in names]
        rho = [parse_rational(initial[v]) if isinstance(initial[v], str) else Fraction(initial[v]) for v in names]
        return cls(tuple(polys), tuple(rho), tuple(names))

    @property
    def n(self) -> int:
        return len(self.drifts)

    @property
    def nvars(self) -> int:
        return self.n + 1

    @property
    def ring_names(self) -> list:
        return ["x", *self.names]

    def drift(self, i: int) -> Polynomial:
        if i == 0:
            return Polynomial.one(self.nvars)
        return self.drifts[i - 1]

    def point(self) -> tuple:
        return (Fraction(0),) + self.rho

    def var(self, i: int) -> Polynomial:
        return Polynomial.variable(i, self.nvars)


class Context:
    """A product together with a drift system.

    Memo tables cache ``delta`` and output sequences per monomial.  Entries are
    deterministic functions of the monomial, so concurrent writers can only
    store equal values and a single dict assignment is atomic; no lock needed.
    """

    def __init__(self, spec: ProductSpec, sde: SdeSystem):
        self.spec = spec
        self.sde = sde
        self._g1 = spec.g_at_one()
        self._delta_memo: dict = {}
        self._out_memo: dict = {}
        self._point = sde.point()
        # Hadamard (F = y2*y4, G(1) = 1): delta substitutes the drifts, so
        # output(delta^j(p)) is p at the j-th iterate of the drift map.
        # Infiltration (F = y2*y3 + y1*y4 + y2*y4, G(1) = 0): 1 + delta is
        # multiplicative, so the same holds for x -> x + drift(x) after a
        # binomial inversion.  Symbolic iterates blow up in degree otherwise.
        y = [Polynomial.variable(i, 5) for i in range(5)]
        self._shift = None
        if spec.F == y[2] * y[4] and self._g1 == 1:
            self._shift = 0
        elif spec.F == y[2] * y[3] + y[1] * y[4] + y[2] * y[4] and self._g1 == 0:
            self._shift = 1
        self._orbit = {0: self._point}

    @property
    def nvars(self) -> int:
        return self.sde.nvars

    def clear_cache(self):
        self._delta_memo.clear()
        self._out_memo.clear()

    def substitute_f(self, y1: Polynomial, y2: Polynomial, y3: Polynomial, y4: Polynomial) -> Polynomial:
        x = self.sde.var(0)
        return compose_into(self.spec.F, [x, y1, y2, y3, y4], self.nvars)

    def delta_monomial(self, m: tuple) -> Polynomial:
        hit = self._delta_memo.get(m)
        if hit is not None:
            return hit
        if not any(m):
            result = Polynomial.constant(self._g1, self.nvars)
        else:
            i = min_variable(m)
            rest = m[:i] + (m[i] - 1,) + m[i + 1:]
            if not any(rest):
                result = self.sde.drift(i)
            else:
                result = self.substitute_f(
                    self.sde.var(i),
                    self.sde.drift(i),
                    Polynomial.monomial(rest),
                    self.delta_monomial(rest),
                )
        self._delta_memo[m] = result
        return result

    def _orbit_point(self, j: int) -> tuple:
        # keyed by index so that racing writers store identical entries
        k = len(self._orbit) - 1
        while k < j:
            pt = self._orbit[k]
            k += 1
            self._orbit[k] = tuple(self._shift * v + self.sde.drift(i).evaluate(pt) for i, v in enumerate(pt))
        return self._orbit[j]

    def monomial_output(self, m: tuple, j: int) -> Fraction:
        """``output(iterated_delta(m, j))`` computed through memoized linearity."""
        key = (m, j)
        hit = self._out_memo.get(key)
        if hit is not None:
            return hit
        if j == 0:
            value = Polynomial.monomial(m).evaluate(self._point)
        elif self._shift == 0:
            value = Polynomial.monomial(m).evaluate(self._orbit_point(j))
        elif self._shift == 1:
            mono = Polynomial.monomial(m)
            value = sum(
                (comb(j, k) * (-1) ** (j - k) * mono.evaluate(self._orbit_point(k)) for k in range(j + 1)),
                Fraction(0),
            )
        else:
            value = Fraction(0)
            for m2, c in self.delta_monomial(m).items():
                value += c * self.monomial_output(m2, j - 1)
        self._out_memo[key] = value
        return value


def _check_ring(p: Polynomial, ctx: Context):
    if p.nvars != ctx.nvars:
        raise ValueError(f"polynomial in {p.nvars} variables, context ring has {ctx.nvars}")


def delta(p: Polynomial, ctx: Context) -> Polynomial:
    """The transition function: linear extension of the monomial rule."""
    _check_ring(p, ctx)
    acc: dict = {}
    for m, c in p.items():
        for m2, c2 in ctx.delta_monomial(m).items():
            acc[m2] = acc.get(m2, 0) + c * c2
    return Polynomial(ctx.nvars, acc)


def f_bracket(p: Polynomial, q: Polynomial, ctx: Context) -> Polynomial:
    """``F(x, p, delta(p), q, delta(q))``."""
    return ctx.substitute_f(p, delta(p, ctx), q, delta(q, ctx))


def iterated_delta(p: Polynomial, j: int, ctx: Context) -> Polynomial:
    if j < 0:
        raise ValueError("j must be non-negative")
    for _ in range(j):
        p = delta(p, ctx)
    return p


def output(p: Polynomial, ctx: Context) -> Fraction:
    _check_ring(p, ctx)
    return p.evaluate(ctx._point)


def lie_derivative(p: Polynomial, sde: SdeSystem) -> Polynomial:
    """Sum of ``dp/dx_i * drift_i`` with drift 1 for ``x``."""
    total = Polynomial.zero(sde.nvars)
    for i in range(sde.nvars):
        dp = p.partial(i)
        if dp:
            total = total + dp * sde.drift(i)
    return total


# -- randomized admissibility checks --------------------------------------


def random_monomial(rng: random.Random, nvars: int, max_degree: int) -> tuple:
    d = rng.randint(0, max_degree)
    m = [0] * nvars
    for _ in range(d):
        m[rng.randrange(nvars)] += 1
    return tuple(m)


def random_polynomial(rng: random.Random, nvars: int, max_degree: int, max_terms: int = 4) -> Polynomial:
    """Random polynomial with coefficients in -3..3."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_monomial(rng, nvars, max_degree)] = rng.randint(-3, 3)
    return Polynomial(nvars, terms)


@dataclass
class Counterexample:
    condition: str
    operands: tuple
    lhs: Polynomial
    rhs: Polynomial


@dataclass
class WellBehavedReport:
    seed: int
    trials: int
    max_degree: int
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def conditions_failed(self) -> set:
        return {c.condition for c in self.counterexamples}


def check_well_behaved(ctx: Context, trials: int = 100, max_degree: int = 4, seed: int = 0) -> WellBehavedReport:
    """Randomized test of the well-behavedness equalities.

    Each trial checks, on fresh random operands: ``F[1;q] = delta(q)``,
    ``F[x_i m1; m2] = F[m1; x_i m2]``, linearity of ``F[.;q]`` in its first
    argument, symmetry ``F[p;q] = F[q;p]`` and the product rule
    ``delta(p q) = F[p;q]``.  Failures are collected, not raised.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    report = WellBehavedReport(seed, trials, max_degree)
    nv = ctx.nvars
    one = Polynomial.one(nv)

    def record(cond, operands, lhs, rhs):
        if lhs != rhs:
            report.counterexamples.append(Counterexample(cond, operands, lhs, rhs))

    for _ in range(trials):
        p = random_polynomial(rng, nv, max_degree)
        q = random_polynomial(rng, nv, max_degree)
        record("identity", (one, q), f_bracket(one, q, ctx), delta(q, ctx))

        m1 = random_monomial(rng, nv, max(max_degree - 1, 0))
        m2 = random_monomial(rng, nv, max(max_degree - 1, 0))
        i = rng.randrange(nv)
        xi = ctx.sde.var(i)
        pm1, pm2 = Polynomial.monomial(m1), Polynomial.monomial(m2)
        record("exchange", (xi * pm1, pm2), f_bracket(xi * pm1, pm2, ctx), f_bracket(pm1, xi * pm2, ctx))

        linear = Polynomial.zero(nv)
        for m, c in p.items():
            linear = linear + f_bracket(Polynomial.monomial(m), q, ctx).scale(c)
        record("linearity", (p, q), f_bracket(p, q, ctx), linear)

        record("symmetry", (p, q), f_bracket(p, q, ctx), f_bracket(q, p, ctx))
        record("product_rule", (p, q), delta(p * q, ctx), f_bracket(p, q, ctx))
    return report
