"""Deciding whether a polynomial denotes the zero stream, and finding such polynomials.

:func:`is_zero` walks the chain ``p, delta(p), delta^2(p), ...``.  It answers NO
as soon as some derivative has nonzero output, and YES as soon as a derivative
falls into the ideal generated by its predecessors; the ascending chain
condition guarantees one of the two happens.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .algebra import Polynomial
from .groebner import GRLEX, GroebnerBasis, extend
from .linalg import nullspace
from .products import f_in_ideal_y3y4
from .transition import Context, _check_ring, delta, output

DEFAULT_CAP = 256


class PreconditionError(ValueError):
    """The product's derivative law is not in the ideal generated by y3 and y4."""


class Answer(enum.Enum):
    YES = "YES"
    NO = "NO"
    CAP_EXCEEDED = "CAP_EXCEEDED"


@dataclass(frozen=True)
class TraceStep:
    k: int
    derivative: Polynomial
    output: Fraction
    member: bool | None  # None when the step stopped at the output test


@dataclass(frozen=True)
class Verdict:
    """Outcome of a zero test.

    For NO, ``witness`` is ``(k, value)`` with ``value`` the nonzero output of
    the ``k``-th derivative.  For YES, ``quotients[i]`` multiplies the ``i``-th
    derivative so that their sum is the ``steps``-th derivative.
    """

    answer: Answer
    steps: int
    trace: tuple
    witness: tuple | None = None
    quotients: tuple | None = None

    def __bool__(self):
        return self.answer is Answer.YES

    @property
    def chain(self) -> tuple:
        return tuple(s.derivative for s in self.trace)


def _require_hypothesis(ctx: Context):
    if not f_in_ideal_y3y4(ctx.spec):
        raise PreconditionError(
            f"product {ctx.spec.name!r}: F is not in the ideal <y3, y4>; "
            "the zero test is only sound when F = h1*y3 + h2*y4"
        )


def is_zero(p: Polynomial, ctx: Context, cap: int = DEFAULT_CAP) -> Verdict:
    """Decide whether ``p`` denotes the zero stream under ``ctx``."""
    _require_hypothesis(ctx)
    _check_ring(p, ctx)
    basis = GroebnerBasis((), GRLEX, (), ())
    trace = []
    current = p
    for k in range(cap):
        out = output(current, ctx)
        if out:
            trace.append(TraceStep(k, current, out, None))
            return Verdict(Answer.NO, k, tuple(trace), witness=(k, out))
        quotients = basis.lift(current)
        trace.append(TraceStep(k, current, out, quotients is not None))
        if quotients is not None:
            return Verdict(Answer.YES, k, tuple(trace), quotients=tuple(quotients))
        basis = extend(basis, current)
        current = delta(current, ctx)
    return Verdict(Answer.CAP_EXCEEDED, cap, tuple(trace))


def are_equal(p: Polynomial, q: Polynomial, ctx: Context, cap: int = DEFAULT_CAP) -> Verdict:
    return is_zero(p - q, ctx, cap)


def monomials_up_to(nvars: int, max_degree: int) -> list:
    """All exponent vectors of total degree at most ``max_degree``, by increasing degree."""
    out = []
    for d in range(max_degree + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            m = [0] * nvars
            for i in combo:
                m[i] += 1
            out.append(tuple(m))
    return out


@dataclass
class IdentitySearch:
    """Result of :func:`find_identities`.

    ``identities`` spans the confirmed zero polynomials found; ``rejected``
    holds candidates that could not be confirmed, and ``partial`` is set when a
    confirmation ran out of iterations.
    """

    identities: list
    rejected: list = field(default_factory=list)
    constraints: int = 0
    partial: bool = False

    def __iter__(self):
        return iter(self.identities)

    def __len__(self):
        return len(self.identities)


def find_identities(
    ctx: Context,
    max_degree: int,
    stabilization_window: int = 2,
    cap: int = DEFAULT_CAP,
    max_rounds: int = 8,
) -> IdentitySearch:
    """Polynomials of degree at most ``max_degree`` that denote the zero stream.

    The template of all monomials up to ``max_degree`` is constrained by
    ``output(delta^j(p)) = 0`` for ``j = 0, 1, ...`` until the solution space
    keeps its dimension for ``stabilization_window`` further constraints.  Each
    basis vector is then confirmed with :func:`is_zero`.  A NO answer at index
    ``k`` means constraints up to ``k`` are needed, so the search resumes from
    there (at most ``max_rounds`` times).
    """
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    _require_hypothesis(ctx)
    nv = ctx.nvars
    template = monomials_up_to(nv, max_degree)
    rows = []

    def add_row():
        j = len(rows)
        rows.append([ctx.monomial_output(m, j) for m in template])

    def stabilize(min_rows):
        while len(rows) < min_rows:
            add_row()
        dim = len(nullspace(rows, len(template)))
        steady = 0
        while steady < stabilization_window and dim > 0:
            add_row()
            new_dim = len(nullspace(rows, len(template)))
            steady = steady + 1 if new_dim == dim else 0
            dim = new_dim

    need = 1
    for _ in range(max_rounds):
        stabilize(need)
        basis = nullspace(rows, len(template))
        candidates = [Polynomial(nv, dict(zip(template, v))) for v in basis]
        confirmed, rejected, partial, refuted = [], [], False, False
        for cand in candidates:
            verdict = is_zero(cand, ctx, cap)
            if verdict.answer is Answer.YES:
                confirmed.append(cand)
                continue
            rejected.append(cand)
            if verdict.answer is Answer.NO:
                # every constraint below len(rows) holds, so the witness lies beyond them
                refuted = True
                need = max(need, verdict.witness[0] + 1)
            else:
                partial = True
        if not refuted:
            break
    return IdentitySearch(confirmed, rejected, len(rows), partial)
