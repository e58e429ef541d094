"""Multivariate division, Buchberger's algorithm and ideal membership.

Bases can optionally track cofactors: for every basis element ``g_i`` a vector
``c_i`` with ``g_i = sum_j c_ij * f_j`` over the input generators ``f_j``.  With
those, :meth:`GroebnerBasis.lift` expresses an ideal member in terms of the
original generators, which is what a replayable membership certificate needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    GRLEX,
    MonomialOrder,
    Polynomial,
    monomial_div,
    monomial_divides,
    monomial_lcm,
)


def divide(p: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder = GRLEX):
    """Divide ``p`` by an ordered list of divisors.

    Returns ``(quotients, remainder)`` with ``p == sum(q*d) + remainder`` and no
    term of the remainder divisible by a divisor's leading monomial.
    """
    for d in divisors:
        if not isinstance(d, Polynomial) or d.is_zero():
            raise ValueError("cannot divide by the zero polynomial")
        if d.nvars != p.nvars:
            raise ValueError("divisor lives in a different ring")
    leads = [(d.leading_monomial(order), d.leading_coefficient(order)) for d in divisors]
    quotients = [dict() for _ in divisors]
    rest = p.terms()
    remainder = {}
    while rest:
        m = max(rest, key=order.key)
        c = rest[m]
        for k, (lm, lc) in enumerate(leads):
            if monomial_divides(lm, m):
                qm = monomial_div(m, lm)
                qc = c / lc
                quotients[k][qm] = quotients[k].get(qm, 0) + qc
                for dm, dc in divisors[k].items():
                    tm = tuple(a + b for a, b in zip(dm, qm))
                    v = rest.get(tm, 0) - qc * dc
                    if v:
                        rest[tm] = v
                    else:
                        rest.pop(tm, None)
                break
        else:
            remainder[m] = c
            del rest[m]
    return [Polynomial(p.nvars, q) for q in quotients], Polynomial(p.nvars, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GRLEX) -> Polynomial:
    return _s_parts(f, g, order)[0]


def _s_parts(f, g, order):
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = monomial_lcm(lf, lg)
    mf, cf = monomial_div(lcm, lf), 1 / f.leading_coefficient(order)
    mg, cg = monomial_div(lcm, lg), 1 / g.leading_coefficient(order)
    return f.mul_term(mf, cf) - g.mul_term(mg, cg), (mf, cf), (mg, cg)


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Gröbner basis.

    ``generators`` are monic and sorted by increasing leading monomial, so two
    reduced bases of the same ideal under the same order compare equal.
    """

    generators: tuple
    order: MonomialOrder = GRLEX
    inputs: tuple = ()
    cofactors: tuple | None = None

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    @property
    def tracked(self) -> bool:
        return self.cofactors is not None

    def reduce(self, p: Polynomial) -> Polynomial:
        if not self.generators:
            return p
        return divide(p, self.generators, self.order)[1]

    def contains(self, p: Polynomial) -> bool:
        return self.reduce(p).is_zero()

    def lift(self, p: Polynomial):
        """Quotients ``h_j`` with ``p == sum(h_j * inputs[j])``, or None if ``p`` is not a member."""
        if self.cofactors is None:
            raise ValueError("basis was built without cofactor tracking")
        zero = Polynomial.zero(p.nvars)
        if not self.generators:
            return [zero for _ in self.inputs] if p.is_zero() else None
        quotients, r = divide(p, self.generators, self.order)
        if r:
            return None
        out = [zero] * len(self.inputs)
        for q, row in zip(quotients, self.cofactors):
            if q:
                out = [o + q * c for o, c in zip(out, row)]
        return out


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = GRLEX, track: bool = False) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``."""
    gens = tuple(gens)
    return _complete(gens, [], [], [], order, track)


def extend(basis: GroebnerBasis, new: Polynomial) -> GroebnerBasis:
    """Basis of the ideal generated by ``basis.inputs`` and ``new``.

    Pairs among the existing (already reduced) basis are not revisited.
    """
    track = basis.tracked
    inputs = basis.inputs + (new,)
    polys = list(basis.generators)
    cofs = None
    if track:
        zero = Polynomial.zero(new.nvars)
        cofs = [list(row) + [zero] for row in basis.cofactors]
    return _complete(inputs, polys, cofs or [], [len(inputs) - 1], basis.order, track)


def _complete(inputs, polys, cofs, fresh, order, track):
    """Run Buchberger from a partial state.

    ``polys``/``cofs`` hold elements whose mutual pairs are already known to
    reduce to zero; ``fresh`` indexes the inputs still to be added, or is empty
    to add every input.
    """
    polys, cofs = list(polys), list(cofs)
    nvars = next((f.nvars for f in inputs), None)
    if nvars is None:
        return GroebnerBasis((), order, inputs, () if track else None)
    zero = Polynomial.zero(nvars)
    todo = fresh if fresh else range(len(inputs))
    pairs = []
    for j in todo:
        f = inputs[j]
        if f.is_zero():
            continue
        if track:
            unit = [zero] * len(inputs)
            unit[j] = Polynomial.one(nvars)
            cofs.append(unit)
        polys.append(f)
        new = len(polys) - 1
        pairs.extend((k, new) for k in range(new))

    leads = [g.leading_monomial(order) for g in polys]
    while pairs:
        # normal selection strategy: smallest lcm first
        best = min(range(len(pairs)), key=lambda t: order.key(monomial_lcm(leads[pairs[t][0]], leads[pairs[t][1]])))
        i, j = pairs.pop(best)
        li, lj = leads[i], leads[j]
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # coprime leading monomials: S-polynomial reduces to 0
        s, (mi, ci), (mj, cj) = _s_parts(polys[i], polys[j], order)
        quotients, r = divide(s, polys, order)
        if r.is_zero():
            continue
        if track:
            row = [a.mul_term(mi, ci) - b.mul_term(mj, cj) for a, b in zip(cofs[i], cofs[j])]
            for q, crow in zip(quotients, cofs):
                if q:
                    row = [x - q * c for x, c in zip(row, crow)]
            cofs.append(row)
        polys.append(r)
        leads.append(r.leading_monomial(order))
        new = len(polys) - 1
        pairs.extend((k, new) for k in range(new))

    return _reduce_basis(inputs, polys, cofs if track else None, order)


def _reduce_basis(inputs, polys, cofs, order):
    leads = [g.leading_monomial(order) for g in polys]
    keep = []
    for i, li in enumerate(leads):
        dominated = False
        for j, lj in enumerate(leads):
            if j == i or not monomial_divides(lj, li):
                continue
            # drop i if another lead divides it; among equal leads keep the first
            if lj != li or j < i:
                dominated = True
                break
        if not dominated:
            keep.append(i)
    gs = [polys[i] for i in keep]
    cs = [cofs[i] for i in keep] if cofs is not None else None

    for k in range(len(gs)):
        others = gs[:k] + gs[k + 1:]
        if others:
            quotients, r = divide(gs[k], others, order)
            if cs is not None:
                row = cs[k]
                ocs = cs[:k] + cs[k + 1:]
                for q, crow in zip(quotients, ocs):
                    if q:
                        row = [x - q * c for x, c in zip(row, crow)]
                cs[k] = row
            gs[k] = r
        lc = gs[k].leading_coefficient(order)
        if lc != 1:
            inv = Fraction(1) / lc
            gs[k] = gs[k].scale(inv)
            if cs is not None:
                cs[k] = [c.scale(inv) for c in cs[k]]

    idx = sorted(range(len(gs)), key=lambda t: order.key(gs[t].leading_monomial(order)))
    generators = tuple(gs[t] for t in idx)
    cofactors = tuple(tuple(cs[t]) for t in idx) if cs is not None else None
    return GroebnerBasis(generators, order, tuple(inputs), cofactors)


def ideal_member(p: Polynomial, basis: GroebnerBasis) -> bool:
    """Membership of ``p`` in the ideal generated by a Gröbner basis."""
    return basis.contains(p)
