# coding: utf-8

# # One system, four products
#
# The same drifts describe different streams depending on the product.  Here
# we compare the four built-in products on a small nonlinear system and check
# each against a direct computation on stream prefixes.

import random

from streamcalc.parsing import parse_polynomial
from streamcalc.products import BUILTINS, builtin
from streamcalc.streams import ORACLES, factorial_streams, hadamard_oracle, prefix, render
from streamcalc.transition import Context, SdeSystem, check_well_behaved, random_polynomial

sde = SdeSystem.from_text({"u": "v", "v": "u^3 - x*v + 1"}, {"u": 1, "v": "-1/2"})

for name in sorted(BUILTINS):
    ctx = Context(builtin(name), sde)
    print(name, render(prefix(parse_polynomial("u", sde.ring_names), 6, ctx)))

# Mapping a polynomial to its stream turns multiplication of polynomials into
# the chosen stream product.  Random spot checks:

rng = random.Random(0)
for name in sorted(BUILTINS):
    ctx = Context(builtin(name), sde)
    ok = all(
        prefix(p * q, 8, ctx) == ORACLES[name](prefix(p, 8, ctx), prefix(q, 8, ctx))
        for p, q in ((random_polynomial(rng, 3, 2), random_polynomial(rng, 3, 2)) for _ in range(20))
    )
    print(name, "homomorphism holds:", ok)
    print(name, "well-behaved:", check_well_behaved(ctx, trials=20).ok)

# ## Harmonic numbers
#
# Under shuffle, y' = y^2 gives factorials and w' = y integrates them.  The
# product y*w divided termwise by factorials is the harmonic sequence.

ctx = Context(builtin("shuffle"), SdeSystem.from_text({"y": "y^2", "w": "y"}, {"y": 1, "w": 0}))
_, inverse = factorial_streams(8)
print(render(hadamard_oracle(inverse, prefix(parse_polynomial("y*w", ctx.sde.ring_names), 8, ctx))))
