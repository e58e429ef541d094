# coding: utf-8

# # Linear systems and rational generating functions
#
# When every drift is linear in the dependent variables, the stream of each
# variable has a rational ordinary generating function obtained by solving
# (I - zA) H = rho exactly.

from pathlib import Path

from streamcalc.genfun import linear_gf, linear_ode_solution_prefix, render_rational_function, taylor
from streamcalc.parsing import parse_document
from streamcalc.streams import prefix, render

doc = parse_document((Path(__file__).parent / "data" / "rotation.sde").read_text())
ctx = doc.context()
hs = linear_gf(ctx.sde)
for name, h in zip(doc.names, hs):
    print(name, "=", render_rational_function(h))

# The Taylor coefficients of H match the stream computed from the drifts

print(render(taylor(hs[0], 8)))
print(render(prefix(doc.parse("x1"), 8, ctx)))

# Read as a differential equation, the same system is solved by cos and sin.
# Their Taylor coefficients are the stream divided by factorials.

cos, sin = linear_ode_solution_prefix(ctx.sde, 8)
print(render(cos))
print(render(sin))
