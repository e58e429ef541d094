# coding: utf-8

# # Catalan numbers under convolution
#
# The drift y' = y^2 with y(0) = 1 under convolution gives the stream
# sigma with sigma = 1 + x*sigma^2, whose terms are the Catalan numbers.

from pathlib import Path

from streamcalc.decide import is_zero
from streamcalc.genfun import compose_series, verify_branch
from streamcalc.parsing import parse_document, parse_polynomial
from streamcalc.streams import prefix, render

doc = parse_document((Path(__file__).parent / "data" / "catalan.sde").read_text())
ctx = doc.context()
catalan = prefix(doc.parse("y"), 10, ctx)
print(render(catalan))

# The defining relation is decided as an identity of streams

print(is_zero(doc.parse("y - x*y^2 - 1"), ctx).answer.value)

# and the generating function (1 - sqrt(1 - 4z)) / 2z is a root of the same
# polynomial in (z, y).  `verify_branch` substitutes the series and checks
# that every coefficient in the window cancels.

q = parse_polynomial("y - x*y^2 - 1", ["x", "y"])
print(verify_branch(q, catalan))

# A polynomial that is not an annihilator leaves nonzero coefficients behind.

bad = parse_polynomial("y - x*y - y^2 - 1", ["x", "y"])
print(verify_branch(bad, catalan), render(compose_series(bad, catalan)))
