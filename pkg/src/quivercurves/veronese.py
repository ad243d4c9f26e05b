"""The d-uple Veronese embedding of P^2 and the index matrix whose rank-1 locus is its image.

All monomial orderings in the package come from :func:`exponent_tuples`:
descending lexicographic order on ``(m0, m1, m2)``. For ``d = 3`` this is
x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

from .errors import DimensionMismatchError, EmptyPolynomialError, NotInImageError
from .field import FieldScalar
from .projective import ProjPoint


@lru_cache(maxsize=None)
def exponent_tuples(d: int) -> tuple:
    """All ``(m0, m1, m2)`` with ``m0 + m1 + m2 = d``, descending lex. Allows ``d = 0``."""
    if d < 0:
        raise ValueError("degree must be a natural number")
    return tuple((a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1))


@dataclass(frozen=True)
class MonomialBasis:
    d: int
    order: tuple
    index_of: dict = field(compare=False, repr=False)

    def __len__(self):
        return len(self.order)


@lru_cache(maxsize=None)
def monomial_basis(d: int) -> MonomialBasis:
    if d < 1:
        raise ValueError(f"monomial basis needs degree d >= 1, got {d}")
    order = exponent_tuples(d)
    return MonomialBasis(d, order, {m: i for i, m in enumerate(order)})


def monomial_values(xs: Sequence[FieldScalar], d: int) -> list:
    """Raw (unnormalized) monomial values ``x^m`` in basis order."""
    x0, x1, x2 = xs
    p0 = [x0**k for k in range(d + 1)]
    p1 = [x1**k for k in range(d + 1)]
    p2 = [x2**k for k in range(d + 1)]
    return [p0[a] * p1[b] * p2[c] for a, b, c in exponent_tuples(d)]


def veronese_map(pt: ProjPoint, d: int) -> ProjPoint:
    """Image of ``pt`` in P^(M-1); coordinate ``index_of(m)`` is ``x^m``."""
    if pt.dim != 2:
        raise DimensionMismatchError(f"Veronese map takes points of P^2, got P^{pt.dim}")
    monomial_basis(d)
    return ProjPoint(monomial_values(pt.coords, d))


@dataclass(frozen=True)
class AMatrixIndices:
    """Index table of A_d: entry ``(n, i)`` is the basis index of ``n + e_i``.

    ``rows`` are the degree ``d - 1`` exponents in descending-lex order.
    """

    d: int
    rows: tuple
    table: tuple

    @property
    def shape(self):
        return (len(self.rows), 3)

    def entry(self, n, i: int) -> int:
        r = n if isinstance(n, int) else self.rows.index(tuple(n))
        return self.table[r][i]

    def column(self, i: int) -> tuple:
        return tuple(row[i] for row in self.table)


@lru_cache(maxsize=None)
def a_matrix_indices(d: int) -> AMatrixIndices:
    basis = monomial_basis(d)
    rows = exponent_tuples(d - 1)
    table = tuple(
        tuple(basis.index_of[(n[0] + (i == 0), n[1] + (i == 1), n[2] + (i == 2))] for i in range(3))
        for n in rows
    )
    return AMatrixIndices(d, rows, table)


def _values(y):
    return y.coords if isinstance(y, ProjPoint) else tuple(y)


def evaluate_a_matrix(idx: AMatrixIndices, y) -> tuple:
    """M' x 3 matrix with entry ``(n, i) = y[idx.entry(n, i)]``."""
    ys = _values(y)
    M = len(monomial_basis(idx.d))
    if len(ys) != M:
        raise DimensionMismatchError(f"degree {idx.d} needs {M} coordinates, got {len(ys)}")
    return tuple(tuple(ys[j] for j in row) for row in idx.table)


def first_nonzero_minor(mat) -> Optional[tuple]:
    """``(r1, r2, c1, c2, value)`` for the first nonvanishing 2x2 minor, else ``None``."""
    ncols = len(mat[0]) if mat else 0
    col_pairs = list(combinations(range(ncols), 2))
    for r1, r2 in combinations(range(len(mat)), 2):
        a, b = mat[r1], mat[r2]
        for c1, c2 in col_pairs:
            det = a[c1] * b[c2] - a[c2] * b[c1]
            if not det.is_zero():
                return (r1, r2, c1, c2, det)
    return None


def rank_at_most_one(mat) -> bool:
    """True iff every 2x2 minor vanishes. Division-free."""
    return first_nonzero_minor(mat) is None


def linearize(P) -> tuple:
    """Coefficient vector of ``P`` in Veronese coordinates, so ``f . nu_d(x) = P(x)``."""
    if P.is_zero():
        raise EmptyPolynomialError("cannot linearize the zero polynomial")
    return tuple(P.coefficient(m) for m in monomial_basis(P.degree).order)


def dot(f: Sequence[FieldScalar], y) -> FieldScalar:
    ys = _values(y)
    if len(f) != len(ys):
        raise DimensionMismatchError(f"length {len(f)} form against {len(ys)} coordinates")
    total = f[0] * ys[0]
    for a, b in zip(f[1:], ys[1:]):
        if not a.is_zero():
            total = total + a * b
    return total


def inverse_veronese(y: ProjPoint, d: int) -> ProjPoint:
    """The unique ``x`` in P^2 with ``nu_d(x) = y``.

    Row ``n`` of A_d(y) equals ``x^n * (x0, x1, x2)``; the first nonzero row
    is returned. Raises :class:`NotInImageError` when the rank exceeds 1.
    """
    idx = a_matrix_indices(d)
    mat = evaluate_a_matrix(idx, y)
    if not rank_at_most_one(mat):
        raise NotInImageError(f"{y} is not on the degree-{d} Veronese image")
    for row in mat:
        if any(not c.is_zero() for c in row):
            return ProjPoint(row)
    raise NotInImageError("A-matrix vanishes identically")
