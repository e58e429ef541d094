"""Exact Gaussian elimination over an arbitrary field.

Entries only need ``+ - * /`` and truthiness (zero is falsy), so the same code
serves :class:`fractions.Fraction` and :class:`streamcalc.genfun.RationalFunction`.
"""

from __future__ import annotations

from fractions import Fraction


class SingularMatrixError(ZeroDivisionError):
    pass


def rref(rows, ncols: int):
    """Reduced row echelon form.

    Returns ``(matrix, pivots)`` where ``pivots`` lists the pivot column of each
    nonzero row.  Entries must be field elements (plain ints would divide to
    floats).  The input is not modified.
    """
    a = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [v * inv for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [u - f * v for u, v in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def nullspace(rows, ncols: int) -> list:
    """Basis of ``{v : rows @ v = 0}`` over the rationals, one vector per free column."""
    reduced, pivots = rref([[Fraction(v) for v in r] for r in rows], ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(matrix, rhs, one, zero):
    """Solve the square system ``matrix @ v = rhs``.

    ``one`` and ``zero`` are the field's identities; a singular matrix raises
    :class:`SingularMatrixError`.
    """
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = one / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [u - f * v for u, v in zip(aug[i], aug[col])]
    return [aug[i][n] if aug[i][n] else zero for i in range(n)]
