# coding: utf-8

# # Fibonacci numbers as a polynomial stream
#
# A stream is described by a polynomial together with a system of drifts.
# Under the convolution product, x1' = x2 and x2' = x1 + x2 with x1(0) = 0,
# x2(0) = 1 make x1 the Fibonacci stream.

from pathlib import Path

from streamcalc.decide import find_identities, is_zero
from streamcalc.parsing import parse_document
from streamcalc.streams import prefix, render
from streamcalc.algebra import to_text

doc = parse_document((Path(__file__).parent / "data" / "fib.sde").read_text())
ctx = doc.context()

# ## The first terms
#
# `prefix` reads the stream off by repeatedly applying the transition map and
# evaluating at the initial point.

print(render(prefix(doc.parse("x1"), 12, ctx)))

# ## Proving the generating function identity
#
# The ordinary generating function of Fibonacci is z / (1 - z - z^2), so the
# polynomial x1*(1 - x - x^2) - x should denote the zero stream.  The decision
# procedure either finds an ideal membership certificate or a nonzero output.

verdict = is_zero(doc.parse("x1*(1 - x - x^2) - x"), ctx)
for step in verdict.trace:
    print(step.k, to_text(step.derivative, ctx.sde.ring_names), step.member)
print(verdict.answer.value, "at k =", verdict.steps)

# A wrong guess is refuted with an explicit witness: the index and value of
# the first nonzero output.

verdict = is_zero(doc.parse("x1*(1 - x) - x"), ctx)
k, value = verdict.witness
print(verdict.answer.value, "at k =", k, "with output", value)

# ## Searching for identities
#
# Instead of guessing, we can ask for every polynomial identity up to a
# degree.  Each one returned has been confirmed by the decision procedure.

for p in find_identities(ctx, 3):
    print(to_text(p, ctx.sde.ring_names))
