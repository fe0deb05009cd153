"""Exact rational linear algebra.

Everything here works over :class:`fractions.Fraction`. Matrices are dense
and immutable; subspaces are kept in canonical reduced row-echelon form so
that two subspaces are equal exactly when their bases are equal.

Elimination is done row by row against the pivots found so far, touching
only the nonzero entries of each row. The result is the unique reduced
row-echelon form, so the order in which rows arrive does not matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import InputError

__all__ = [
    "Fraction",
    "Matrix",
    "RrefResult",
    "EchelonBasis",
    "as_fraction",
    "rref",
    "rref_rows",
    "nullspace",
    "sparse_nullspace",
    "solve",
    "subspace_contains",
    "subspace_sum",
]

Vector = tuple  # tuple[Fraction, ...]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use Fraction or int")
    return Fraction(x)


def _vector(v: Iterable) -> Vector:
    return tuple(as_fraction(x) for x in v)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of Fractions."""

    rows: tuple
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise InputError(f"ragged matrix: row of length {len(r)}, expected {self.ncols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: Optional[int] = None) -> "Matrix":
        rows = tuple(_vector(r) for r in rows)
        if ncols is None:
            if not rows:
                raise InputError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        return cls(rows, ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        zero = Fraction(0)
        return cls(tuple((zero,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(
            tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)), n
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(
            tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols)), self.nrows
        )

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise InputError(f"vector of length {len(v)} does not match {self.ncols} columns")
        out = []
        for r in self.rows:
            s = Fraction(0)
            for a, b in zip(r, v):
                if a and b:
                    s += a * b
            out.append(s)
        return tuple(out)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise InputError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.ncols)]
        return Matrix(
            tuple(
                tuple(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols)
                for r in self.rows
            ),
            other.ncols,
        )

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)


class RrefResult(NamedTuple):
    reduced: Matrix
    rank: int
    pivot_cols: tuple


def _sparse(row: Sequence) -> dict:
    return {j: as_fraction(x) for j, x in enumerate(row) if x}


def _echelonize(rows: Iterable[dict], ncols: int) -> dict:
    """Reduce sparse rows to a fully reduced echelon basis keyed by pivot column."""
    pivots: dict = {}
    for row in rows:
        r = {j: as_fraction(x) for j, x in row.items() if x}
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                lead = r[c]
                if lead != 1:
                    inv = 1 / lead
                    r = {j: x * inv for j, x in r.items()}
                pivots[c] = r
                break
            f = r[c]
            for j, x in p.items():
                y = r.get(j, 0) - f * x
                if y:
                    r[j] = y
                else:
                    r.pop(j, None)
        if len(pivots) == ncols:
            break
    # back substitution, largest pivot first; reduced rows have zeros at every other pivot
    order = sorted(pivots, reverse=True)
    done: dict = {}
    for c in order:
        r = pivots[c]
        for q in [j for j in r if j != c and j in done]:
            f = r[q]
            for j, x in done[q].items():
                y = r.get(j, 0) - f * x
                if y:
                    r[j] = y
                else:
                    r.pop(j, None)
        done[c] = r
    return done


def rref_rows(rows: Iterable[dict], ncols: int) -> list:
    """Canonical reduced basis, as sparse rows sorted by pivot, of the span of sparse ``rows``."""
    piv = _echelonize(rows, ncols)
    return [piv[c] for c in sorted(piv)]


def _densify(r: dict, ncols: int) -> Vector:
    zero = Fraction(0)
    out = [zero] * ncols
    for j, x in r.items():
        out[j] = x
    return tuple(out)


def rref(m: Matrix) -> RrefResult:
    """Reduced row-echelon form of ``m``, with zero rows kept at the bottom."""
    reduced = rref_rows((_sparse(r) for r in m.rows), m.ncols)
    pivots = tuple(min(r) for r in reduced)
    dense = [_densify(r, m.ncols) for r in reduced]
    dense.extend((Fraction(0),) * m.ncols for _ in range(m.nrows - len(dense)))
    return RrefResult(Matrix(tuple(dense), m.ncols), len(reduced), pivots)


@dataclass(frozen=True)
class EchelonBasis:
    """A subspace of Q^ambient_dim stored by its reduced row-echelon basis."""

    ambient_dim: int
    rows: tuple  # tuple of dense vectors, RREF, no zero rows

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "EchelonBasis":
        sparse = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise InputError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
            sparse.append(_sparse(v))
        return cls._from_sparse(sparse, ambient_dim)

    @classmethod
    def _from_sparse(cls, rows: Iterable[dict], ambient_dim: int) -> "EchelonBasis":
        reduced = rref_rows(rows, ambient_dim)
        return cls(ambient_dim, tuple(_densify(r, ambient_dim) for r in reduced))

    @classmethod
    def zero(cls, ambient_dim: int) -> "EchelonBasis":
        return cls(ambient_dim, ())

    @classmethod
    def whole(cls, ambient_dim: int) -> "EchelonBasis":
        return cls(ambient_dim, Matrix.identity(ambient_dim).rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivot_cols(self) -> tuple:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.rows)

    def as_matrix(self) -> Matrix:
        return Matrix(self.rows, self.ambient_dim)

    def contains(self, v: Sequence) -> bool:
        return subspace_contains(self, v)

    def coordinates(self, v: Sequence) -> Optional[Vector]:
        """Coefficients of ``v`` in this basis, or None if ``v`` lies outside."""
        if len(v) != self.ambient_dim:
            raise InputError(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        v = _vector(v)
        coeffs = tuple(v[p] for p in self.pivot_cols)
        residual = list(v)
        for a, r in zip(coeffs, self.rows):
            if a:
                for j, x in enumerate(r):
                    if x:
                        residual[j] -= a * x
        return coeffs if not any(residual) else None

    def is_subspace_of(self, other: "EchelonBasis") -> bool:
        return all(other.contains(r) for r in self.rows)

    def __add__(self, other: "EchelonBasis") -> "EchelonBasis":
        return subspace_sum(self, other)


def nullspace(m: Matrix) -> EchelonBasis:
    """Right kernel ``{v : m v = 0}`` in canonical form."""
    return EchelonBasis._from_sparse(sparse_nullspace((_sparse(r) for r in m.rows), m.ncols), m.ncols)


def sparse_nullspace(rows: Iterable[dict], n: int) -> list:
    """Kernel basis (sparse dicts, one per free column) of the system given by sparse ``rows``.

    Used by the solvers that assemble their constraint rows directly as
    ``{unknown: coefficient}`` dicts instead of building a dense Matrix.
    """
    reduced = rref_rows(rows, n)
    pivot_of = {min(r): r for r in reduced}
    free = [j for j in range(n) if j not in pivot_of]
    vecs = []
    for f in free:
        v = {f: Fraction(1)}
        for p, r in pivot_of.items():
            x = r.get(f)
            if x:
                v[p] = -x
        vecs.append(v)
    return vecs


def solve(a: Matrix, b: Sequence) -> Optional[Vector]:
    """One solution of ``a x = b`` (free variables set to zero), or None."""
    if a.nrows != len(b):
        raise InputError(f"right-hand side of length {len(b)} for {a.nrows} equations")
    n = a.ncols
    aug = []
    for r, bi in zip(a.rows, b):
        s = _sparse(r)
        bi = as_fraction(bi)
        if bi:
            s[n] = bi
        aug.append(s)
    reduced = rref_rows(aug, n + 1)
    x = [Fraction(0)] * n
    for r in reduced:
        p = min(r)
        if p == n:
            return None
        x[p] = r.get(n, Fraction(0))
    return tuple(x)


def subspace_contains(s: EchelonBasis, v: Sequence) -> bool:
    return s.coordinates(v) is not None


def subspace_sum(s1: EchelonBasis, s2: EchelonBasis) -> EchelonBasis:
    if s1.ambient_dim != s2.ambient_dim:
        raise InputError(
            f"ambient dimensions differ: {s1.ambient_dim} and {s2.ambient_dim}"
        )
    return EchelonBasis.span(s1.rows + s2.rows, s1.ambient_dim)
