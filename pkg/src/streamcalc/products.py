"""Stream products given by a derivative law ``F`` and an identity law ``G``.

``F`` lives in the ring on ``(x, y1, y2, y3, y4)`` where, for a product of
``sigma`` and ``tau``, ``y1 = sigma``, ``y2 = sigma'``, ``y3 = tau`` and
``y4 = tau'``.  ``G`` lives in the one-variable ring on ``y1`` and describes the
derivative of the product's identity stream.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Polynomial
from .groebner import buchberger, ideal_member

F_NAMES = ("x", "y1", "y2", "y3", "y4")
G_NAMES = ("y1",)


def _f(terms) -> Polynomial:
    return Polynomial(5, terms)


@dataclass(frozen=True)
class ProductSpec:
    name: str
    F: Polynomial
    G: Polynomial

    def __post_init__(self):
        if not isinstance(self.F, Polynomial) or self.F.nvars != 5:
            raise ValueError("F must be a polynomial in (x, y1, y2, y3, y4)")
        if not isinstance(self.G, Polynomial) or self.G.nvars != 1:
            raise ValueError("G must be a polynomial in y1 alone")

    def g_at_one(self):
        """``G`` evaluated at the identity polynomial 1."""
        return self.G.evaluate((1,))


# y2*y3 etc. written as exponent vectors over (x, y1, y2, y3, y4)
_Y2Y3 = (0, 0, 1, 1, 0)
_Y1Y4 = (0, 1, 0, 0, 1)
_Y2Y4 = (0, 0, 1, 0, 1)
_XY2Y4 = (1, 0, 1, 0, 1)

BUILTINS = {
    "convolution": ProductSpec("convolution", _f({_Y2Y3: 1, _Y1Y4: 1, _XY2Y4: -1}), Polynomial(1)),
    "shuffle": ProductSpec("shuffle", _f({_Y2Y3: 1, _Y1Y4: 1}), Polynomial(1)),
    "hadamard": ProductSpec("hadamard", _f({_Y2Y4: 1}), Polynomial(1, {(1,): 1})),
    "infiltration": ProductSpec("infiltration", _f({_Y2Y3: 1, _Y1Y4: 1, _Y2Y4: 1}), Polynomial(1)),
}


def builtin(name: str) -> ProductSpec:
    try:
        return BUILTINS[name]
    except KeyError:
        raise KeyError(f"unknown product {name!r}; expected one of {sorted(BUILTINS)}") from None


_Y3Y4_IDEAL = buchberger([Polynomial.variable(3, 5), Polynomial.variable(4, 5)])


def f_in_ideal_y3y4(spec: ProductSpec) -> bool:
    """Whether ``F`` lies in the ideal generated by ``y3`` and ``y4``."""
    return ideal_member(spec.F, _Y3Y4_IDEAL)
