"""Finite stream prefixes and direct product formulas.

A prefix is a plain tuple of :class:`Fraction`.  :func:`prefix` reads the
semantics of a polynomial off the transition system; the ``*_oracle``
functions compute the four products straight from their stream definitions and
never touch ``delta``, so they serve as independent evidence.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .algebra import Polynomial
from .transition import Context, _check_ring

StreamPrefix = tuple


def as_prefix(values) -> StreamPrefix:
    return tuple(Fraction(v) for v in values)


def prefix(p: Polynomial, length: int, ctx: Context) -> StreamPrefix:
    """First ``length`` elements of the stream denoted by ``p``.

    Element ``j`` is the output of the ``j``-th transition of ``p``; by
    linearity it is accumulated monomial by monomial through the context memo.
    """
    if length < 0:
        raise ValueError("length must be non-negative")
    _check_ring(p, ctx)
    values = []
    for j in range(length):
        values.append(sum((c * ctx.monomial_output(m, j) for m, c in p.items()), Fraction(0)))
    return tuple(values)


def _same_length(a, b):
    if len(a) != len(b):
        raise ValueError(f"prefix lengths differ: {len(a)} vs {len(b)}")


def add(a: Sequence, b: Sequence) -> StreamPrefix:
    _same_length(a, b)
    return tuple(Fraction(u) + v for u, v in zip(a, b))


def scale(c, a: Sequence) -> StreamPrefix:
    return tuple(Fraction(c) * v for v in a)


def conv_oracle(a: Sequence, b: Sequence) -> StreamPrefix:
    """Cauchy product."""
    _same_length(a, b)
    return tuple(sum((Fraction(a[j]) * b[i - j] for j in range(i + 1)), Fraction(0)) for i in range(len(a)))


def shuffle_oracle(a: Sequence, b: Sequence) -> StreamPrefix:
    """Binomial convolution."""
    _same_length(a, b)
    return tuple(
        sum((comb(i, j) * Fraction(a[j]) * b[i - j] for j in range(i + 1)), Fraction(0))
        for i in range(len(a))
    )


def hadamard_oracle(a: Sequence, b: Sequence) -> StreamPrefix:
    _same_length(a, b)
    return tuple(Fraction(u) * v for u, v in zip(a, b))


def infiltration_oracle(a: Sequence, b: Sequence) -> StreamPrefix:
    """Infiltration product from its stream differential equation.

    With ``f(i, j, k)`` the ``k``-th element of ``a^(i) ^ b^(j)`` (``^`` for
    infiltration, ``(i)`` for the ``i``-th derivative) the equation reads
    ``f(i, j, 0) = a[i] b[j]`` and
    ``f(i, j, k) = f(i+1, j, k-1) + f(i, j+1, k-1) + f(i+1, j+1, k-1)``.
    Element ``k`` only uses inputs up to index ``k``.
    """
    _same_length(a, b)
    a = as_prefix(a)
    b = as_prefix(b)

    @lru_cache(maxsize=None)
    def f(i, j, k):
        if k == 0:
            return a[i] * b[j]
        return f(i + 1, j, k - 1) + f(i, j + 1, k - 1) + f(i + 1, j + 1, k - 1)

    return tuple(f(0, 0, k) for k in range(len(a)))


ORACLES = {
    "convolution": conv_oracle,
    "shuffle": shuffle_oracle,
    "hadamard": hadamard_oracle,
    "infiltration": infiltration_oracle,
}


def identity_stream(product: str, length: int) -> StreamPrefix:
    """Prefix of the product's identity: all ones for Hadamard, ``(1, 0, 0, ...)`` otherwise."""
    if product == "hadamard":
        return (Fraction(1),) * length
    if product not in ORACLES:
        raise KeyError(product)
    return tuple(Fraction(int(i == 0)) for i in range(length))


def factorial_streams(length: int):
    """``(0!, 1!, 2!, ...)`` and its Hadamard inverse ``(1/0!, 1/1!, ...)``."""
    fact = tuple(Fraction(factorial(j)) for j in range(length))
    return fact, tuple(1 / f for f in fact)


def render(a: Sequence) -> str:
    return "(" + ", ".join(str(v) for v in a) + ")"
