# coding: utf-8

# # Double factorials and the shuffle product
#
# With the shuffle product the transition map is the ordinary derivative, so
# a drift y' = y^3 describes the exponential stream of 1, 1, 3, 15, 105, ...

from pathlib import Path

from streamcalc.algebra import to_text
from streamcalc.decide import is_zero
from streamcalc.genfun import egf_to_ogf, verify_branch
from streamcalc.parsing import parse_document, parse_polynomial
from streamcalc.streams import prefix, render

doc = parse_document((Path(__file__).parent / "data" / "double_factorial.sde").read_text())
ctx = doc.context()
y = prefix(doc.parse("y"), 9, ctx)
print(render(y))

# The solution of y' = y^3, y(0) = 1 is (1 - 2x)^(-1/2), which means
# y^2 (x - 1/2) + 1/2 vanishes.  One step suffices, and the certificate is
# the quotient expressing the derivative as a multiple of the polynomial.

verdict = is_zero(doc.parse("y^2*(x - 1/2) + 1/2"), ctx)
print(verdict.answer.value, "at k =", verdict.steps)
print("quotient:", to_text(verdict.quotients[0], ctx.sde.ring_names))

# The same polynomial is satisfied by the exponential generating function,
# i.e. by the stream divided termwise by factorials.

q = parse_polynomial("y^2*(x - 1/2) + 1/2", ["x", "y"])
print(verify_branch(q, egf_to_ogf(y)))
