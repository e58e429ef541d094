import random
import sys

import pytest
from hypothesis import strategies as st

from streamcalc.algebra import Polynomial
from streamcalc.parsing import parse_document, parse_polynomial
from streamcalc.products import builtin
from streamcalc.transition import Context, SdeSystem

FIB_DOC = """\
# Fibonacci
product = convolution
x1' = x2   ; x1(0) = 0
x2' = x1 + x2 ; x2(0) = 1
"""


def system(drifts, initial):
    return SdeSystem.from_text(drifts, initial)


def context(product, drifts, initial):
    return Context(builtin(product), system(drifts, initial))


def poly(ctx, text):
    return parse_polynomial(text, ctx.sde.ring_names)


@pytest.fixture
def fib():
    doc = parse_document(FIB_DOC)
    return Context(doc.product, doc.sde)


@pytest.fixture
def rng():
    return random.Random(1234)


# small exact coefficients keep hypothesis examples readable
coefficients = st.integers(-4, 4) | st.fractions(min_value=-3, max_value=3, max_denominator=4)


def polynomials(nvars=3, max_degree=3, max_terms=5):
    monomial = st.lists(st.integers(0, max_degree), min_size=nvars, max_size=nvars).map(tuple)
    return st.dictionaries(monomial, coefficients, max_size=max_terms).map(lambda t: Polynomial(nvars, t))


def pytest_terminal_summary(terminalreporter):
    # one line per acceptance criterion, in order, whenever that module ran
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
