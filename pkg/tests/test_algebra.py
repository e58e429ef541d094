import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from streamcalc.algebra import (
    GRLEX,
    LEX,
    DimensionError,
    Polynomial,
    compare,
    min_variable,
    monomial_mul,
    to_text,
)
from streamcalc.decide import monomials_up_to
from streamcalc.parsing import parse_polynomial

from conftest import polynomials

NAMES = ["x", "x1", "x2"]


def P(text, names=NAMES):
    return parse_polynomial(text, names)


def textbook_grlex_greater(a, b):
    # Cox-Little-O'Shea: compare total degree, then the leftmost nonzero entry of
    # the difference vector, with variables listed from largest (xn) to smallest (x).
    if sum(a) != sum(b):
        return sum(a) > sum(b)
    diff = [i - j for i, j in zip(reversed(a), reversed(b))]
    for d in diff:
        if d:
            return d > 0
    return False


class TestRingOps:
    def test_difference_of_squares(self):
        assert P("(x1 + 1)*(x1 - 1)") == P("x1^2 - 1")

    def test_fibonacci_polynomial_expands(self):
        p = P("x1*(1 - x - x^2) - x")
        assert p == P("-x^2*x1 - x*x1 + x1 - x")
        assert to_text(p, NAMES) == "-x^2*x1 - x*x1 + x1 - x"

    def test_zero_absorbs(self, rng):
        for _ in range(20):
            p = Polynomial(3, {(rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-5, 5)})
            assert (0 * p).is_zero()
            assert (p * Polynomial.zero(3)).is_zero()

    def test_canonical_form_drops_zeros(self):
        p = Polynomial(2, {(1, 0): 3, (0, 1): 0})
        assert p.terms() == {(1, 0): 3}
        assert (P("x1") - P("x1")).terms() == {}

    def test_coefficients_are_reduced_fractions(self):
        p = Polynomial(1, {(1,): Fraction(6, 4)})
        c = p.coefficient((1,))
        assert isinstance(c, Fraction)
        assert (c.numerator, c.denominator) == (3, 2)
        assert to_text(p, ["x"]) == "3/2*x"

    def test_power(self):
        assert P("x1 + 1") ** 3 == P("x1^3 + 3*x1^2 + 3*x1 + 1")
        assert P("x2") ** 0 == Polynomial.one(3)
        with pytest.raises(ValueError):
            P("x") ** -1

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            Polynomial.variable(1, 2) + Polynomial.variable(1, 3)
        with pytest.raises(DimensionError):
            Polynomial(2, {(1, 0, 0): 1})

    def test_float_coefficients_rejected(self):
        with pytest.raises(TypeError):
            Polynomial(1, {(1,): 0.5})

    @settings(max_examples=60, deadline=None)
    @given(polynomials(), polynomials(), polynomials())
    def test_ring_axioms(self, p, q, r):
        one, zero = Polynomial.one(3), Polynomial.zero(3)
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p + q == q + p
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r
        assert p + zero == p and p * one == p
        assert p - p == zero

    @settings(max_examples=60, deadline=None)
    @given(polynomials(), polynomials())
    def test_equal_polynomials_hash_equal(self, p, q):
        s = (p + q) - q
        assert s == p and hash(s) == hash(p)


class TestEvaluate:
    def test_examples(self):
        assert P("x1*(1 - x - x^2) - x").evaluate((0, 0, 1)) == 0
        assert Polynomial.one(3).evaluate((5, Fraction(1, 3), -2)) == 1
        assert P("x2 - x1 - x1*x - 1").evaluate((0, 0, 1)) == 0

    def test_returns_fraction(self):
        assert isinstance(P("x1").evaluate((0, 3, 0)), Fraction)

    def test_wrong_point_length(self):
        with pytest.raises(DimensionError):
            P("x1").evaluate((0, 1))

    @settings(max_examples=60, deadline=None)
    @given(polynomials(), polynomials(), st.lists(st.fractions(-3, 3, max_denominator=5), min_size=3, max_size=3))
    def test_homomorphism(self, p, q, v):
        assert (p * q).evaluate(v) == p.evaluate(v) * q.evaluate(v)
        assert (p + q).evaluate(v) == p.evaluate(v) + q.evaluate(v)


class TestPartial:
    def test_examples(self):
        assert P("x1^2").partial(1) == P("2*x1")
        assert P("x*x1").partial(0) == P("x1")
        names = ["x", "y"]
        assert P("y^2*(x - 1/2) + 1/2", names).partial(1) == P("2*y*x - y", names)

    @settings(max_examples=60, deadline=None)
    @given(polynomials(), polynomials(), st.integers(0, 2))
    def test_leibniz(self, p, q, i):
        assert (p * q).partial(i) == p * q.partial(i) + q * p.partial(i)


class TestMonomials:
    def test_min_variable(self):
        assert min_variable((1, 0, 1)) == 0
        assert min_variable((0, 1, 2)) == 1
        assert min_variable((0, 0, 0, 3)) == 3
        with pytest.raises(ValueError):
            min_variable((0, 0))

    def test_grlex_examples(self):
        # x1^2 against x*x2: equal degree, x2 is the largest variable so x*x2 wins
        assert compare((0, 2, 0), (1, 0, 1), GRLEX) == -1
        assert compare((0, 3, 0), (0, 1, 1), GRLEX) == 1
        assert compare((2, 1, 0), (2, 1, 0), GRLEX) == 0

    def test_grlex_matches_textbook_definition(self):
        monos = monomials_up_to(3, 3)
        for a, b in itertools.product(monos, repeat=2):
            expected = 1 if textbook_grlex_greater(a, b) else (-1 if textbook_grlex_greater(b, a) else 0)
            assert compare(a, b, GRLEX) == expected

    def test_degree_two_sorted(self):
        deg2 = sorted((m for m in monomials_up_to(3, 2) if sum(m) == 2), key=GRLEX.key)
        names = [to_text(Polynomial.monomial(m), NAMES) for m in deg2]
        assert names == ["x^2", "x*x1", "x1^2", "x*x2", "x1*x2", "x2^2"]

    def test_lex_ignores_degree(self):
        assert compare((5, 0, 0), (0, 1, 0), LEX) == -1

    @pytest.mark.parametrize("order", [GRLEX, LEX])
    def test_total_order_and_compatibility(self, order, rng):
        sample = [tuple(rng.randint(0, 3) for _ in range(3)) for _ in range(40)]
        for a, b, c in zip(sample, sample[1:], sample[2:]):
            assert compare(a, b, order) == -compare(b, a, order)
            if compare(a, b, order) < 0 and compare(b, c, order) < 0:
                assert compare(a, c, order) < 0
            if compare(a, b, order) < 0:
                assert compare(monomial_mul(c, a), monomial_mul(c, b), order) < 0
        assert sorted(sample, key=order.key)[0] == min(sample, key=order.key)
