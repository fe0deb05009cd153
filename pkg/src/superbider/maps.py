"""Spaces of homogeneous linear maps: superderivations, centroid, super-commuting maps.

A map ``f`` is stored as a square matrix acting on coordinate columns, so
``f(e_c) = sum_r M[r][c] e_r``. For a degree ``tau`` the only entries that
may be nonzero are those with ``parity(r) = parity(c) + tau``; the solvers
use exactly those entries as unknowns, in row-major order. Every identity is
imposed on basis pairs, which is enough by bilinearity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .certificate import FAIL, PASS, Certificate
from .errors import InputError, PreconditionError, SuperbiderError
from .exactlinalg import EchelonBasis, Matrix, sparse_nullspace
from .invariants import hypotheses
from .superalgebra import EVEN, LieSuperalgebra, Parity, bracket, sign

__all__ = [
    "GradedLinearMap",
    "MapSpace",
    "unknown_cells",
    "derivation_space",
    "centroid_space",
    "commuting_map_space",
    "derivation_violations",
    "centroid_violations",
    "commuting_violations",
    "verify_commuting_in_centroid",
]


def unknown_cells(L: LieSuperalgebra, degree: Parity) -> list:
    """Matrix positions ``(r, c)`` a degree-``degree`` map may use, row-major."""
    n = L.dim
    return [(r, c) for r in range(n) for c in range(n) if L.p(r) == (L.p(c) + degree) % 2]


@dataclass(frozen=True)
class GradedLinearMap:
    matrix: Matrix
    degree: Parity

    def __post_init__(self):
        if self.matrix.nrows != self.matrix.ncols:
            raise InputError(f"linear map matrix must be square, got {self.matrix.shape}")

    def check_grading(self, L: LieSuperalgebra) -> None:
        if self.matrix.nrows != L.dim:
            raise InputError(f"map of size {self.matrix.nrows} on an algebra of dimension {L.dim}")
        for r, row in enumerate(self.matrix.rows):
            for c, x in enumerate(row):
                if x and L.p(r) != (L.p(c) + self.degree) % 2:
                    raise InputError(
                        f"entry ({r}, {c}) = {x} breaks the block structure of a {self.degree} map"
                    )

    @classmethod
    def identity(cls, n: int, scale=1) -> "GradedLinearMap":
        s = Fraction(scale)
        return cls(
            Matrix(tuple(tuple(s if i == j else Fraction(0) for j in range(n)) for i in range(n)), n),
            EVEN,
        )

    @classmethod
    def zero(cls, n: int, degree: Parity = EVEN) -> "GradedLinearMap":
        return cls(Matrix.zeros(n, n), degree)

    @classmethod
    def from_vector(cls, v: Sequence, n: int, degree: Parity) -> "GradedLinearMap":
        """Inverse of :meth:`vectorize`."""
        return cls(Matrix.from_rows((v[r * n:(r + 1) * n] for r in range(n)), n), degree)

    @property
    def size(self) -> int:
        return self.matrix.nrows

    def vectorize(self) -> tuple:
        return tuple(x for row in self.matrix.rows for x in row)

    def __call__(self, v: Sequence) -> tuple:
        return self.matrix.apply(v)

    def image_of_basis(self, c: int) -> tuple:
        return self.matrix.column(c)

    def __add__(self, other: "GradedLinearMap") -> "GradedLinearMap":
        if self.degree != other.degree:
            raise InputError("cannot add maps of different degrees")
        return GradedLinearMap.from_vector(
            tuple(a + b for a, b in zip(self.vectorize(), other.vectorize())), self.size, self.degree
        )

    def scale(self, a) -> "GradedLinearMap":
        a = Fraction(a)
        return GradedLinearMap.from_vector(tuple(a * x for x in self.vectorize()), self.size, self.degree)


@dataclass(frozen=True)
class MapSpace:
    degree: Parity
    kind: str
    space: EchelonBasis  # over the row-major vectorization, length n*n
    size: int

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> tuple:
        return tuple(GradedLinearMap.from_vector(r, self.size, self.degree) for r in self.space.rows)

    def contains(self, f: GradedLinearMap) -> bool:
        return f.degree == self.degree and self.space.contains(f.vectorize())

    def combination(self, coeffs: Sequence) -> GradedLinearMap:
        if len(coeffs) != self.dim:
            raise InputError(f"{len(coeffs)} coefficients for a space of dimension {self.dim}")
        acc = [Fraction(0)] * (self.size * self.size)
        for a, r in zip(coeffs, self.space.rows):
            a = Fraction(a)
            for k, x in enumerate(r):
                if x:
                    acc[k] += a * x
        return GradedLinearMap.from_vector(acc, self.size, self.degree)


def _solve_space(L: LieSuperalgebra, degree: Parity, kind: str, rows: Iterable[dict]) -> MapSpace:
    n = L.dim
    cells = unknown_cells(L, degree)
    kernel = sparse_nullspace(rows, len(cells))
    vecs = []
    for v in kernel:
        full = [Fraction(0)] * (n * n)
        for u, x in v.items():
            r, c = cells[u]
            full[r * n + c] = x
        vecs.append(full)
    space = MapSpace(degree, kind, EchelonBasis.span(vecs, n * n), n)
    check = {"derivation": derivation_violations, "centroid": centroid_violations,
             "commuting": commuting_violations}[kind]
    for f in space.basis:
        bad = check(L, f)
        if bad:
            raise SuperbiderError(f"{kind} solver returned a non-solution: {bad[0]}")
    return space


class _Rows:
    """Collects one constraint row per output coordinate for a basis pair."""

    def __init__(self, index: dict):
        self.index = index
        self.rows: dict = {}

    def add(self, k: int, cell: tuple, coef) -> None:
        u = self.index.get(cell)
        if u is None:
            return
        row = self.rows.setdefault(k, {})
        y = row.get(u, 0) + coef
        if y:
            row[u] = y
        else:
            del row[u]

    def flush(self) -> list:
        out = [r for r in self.rows.values() if r]
        self.rows = {}
        return out


def _add_f_of_bracket(acc: _Rows, L: LieSuperalgebra, i: int, j: int, coef=1) -> None:
    # f([e_i, e_j]) at coordinate k: sum_l c_ij^l M[k][l]
    n = L.dim
    for l, c in L.sparse[i][j]:
        for k in range(n):
            acc.add(k, (k, l), coef * c)


def _add_f_left(acc: _Rows, L: LieSuperalgebra, i: int, j: int, coef=1) -> None:
    # [f(e_i), e_j] at k: sum_r M[r][i] c_rj^k
    for r in range(L.dim):
        for k, c in L.sparse[r][j]:
            acc.add(k, (r, i), coef * c)


def _add_f_right(acc: _Rows, L: LieSuperalgebra, i: int, j: int, coef=1) -> None:
    # [e_i, f(e_j)] at k: sum_r M[r][j] c_ir^k
    for r in range(L.dim):
        for k, c in L.sparse[i][r]:
            acc.add(k, (r, j), coef * c)


def _assemble(L: LieSuperalgebra, degree: Parity, terms) -> list:
    index = {cell: u for u, cell in enumerate(unknown_cells(L, degree))}
    acc = _Rows(index)
    rows = []
    for i in range(L.dim):
        for j in range(L.dim):
            terms(acc, i, j)
            rows.extend(acc.flush())
    return rows


def derivation_space(L: LieSuperalgebra, degree: Parity) -> MapSpace:
    """Degree-``degree`` superderivations: D[x,y] = [Dx,y] + (-1)^{|D||x|} [x,Dy]."""
    degree = Parity(degree)

    def terms(acc, i, j):
        _add_f_of_bracket(acc, L, i, j)
        _add_f_left(acc, L, i, j, -1)
        _add_f_right(acc, L, i, j, -sign(degree * L.p(i)))

    return _solve_space(L, degree, "derivation", _assemble(L, degree, terms))


def centroid_space(L: LieSuperalgebra, degree: Parity) -> MapSpace:
    """Degree-``degree`` centroid: g[x,y] = (-1)^{|g||x|} [x, g y]."""
    degree = Parity(degree)

    def terms(acc, i, j):
        _add_f_of_bracket(acc, L, i, j)
        _add_f_right(acc, L, i, j, -sign(degree * L.p(i)))

    return _solve_space(L, degree, "centroid", _assemble(L, degree, terms))


def commuting_map_space(L: LieSuperalgebra) -> MapSpace:
    """Even maps with [f x, y] = [x, f y]."""

    def terms(acc, i, j):
        _add_f_left(acc, L, i, j)
        _add_f_right(acc, L, i, j, -1)

    return _solve_space(L, EVEN, "commuting", _assemble(L, EVEN, terms))


# direct re-substitution checks

def _basis_data(L: LieSuperalgebra, f: GradedLinearMap):
    f.check_grading(L)
    n = L.dim
    images = [f.image_of_basis(c) for c in range(n)]
    basis = [L.basis_vector(i) for i in range(n)]
    return n, images, basis


def derivation_violations(L: LieSuperalgebra, f: GradedLinearMap) -> list:
    n, fe, e = _basis_data(L, f)
    out = []
    for i in range(n):
        for j in range(n):
            lhs = f(L.bracket_basis(i, j))
            a = bracket(L, fe[i], e[j])
            b = bracket(L, e[i], fe[j])
            s = sign(f.degree * L.p(i))
            rhs = tuple(x + s * y for x, y in zip(a, b))
            if lhs != rhs:
                out.append(((i, j), lhs, rhs))
    return out


def centroid_violations(L: LieSuperalgebra, f: GradedLinearMap) -> list:
    n, fe, e = _basis_data(L, f)
    out = []
    for i in range(n):
        for j in range(n):
            lhs = f(L.bracket_basis(i, j))
            s = sign(f.degree * L.p(i))
            rhs = tuple(s * x for x in bracket(L, e[i], fe[j]))
            if lhs != rhs:
                out.append(((i, j), lhs, rhs))
    return out


def commuting_violations(L: LieSuperalgebra, f: GradedLinearMap) -> list:
    n, fe, e = _basis_data(L, f)
    out = []
    if f.degree != EVEN:
        out.append(("degree", f.degree, EVEN))
    for i in range(n):
        for j in range(n):
            lhs = bracket(L, fe[i], e[j])
            rhs = bracket(L, e[i], fe[j])
            if lhs != rhs:
                out.append(((i, j), lhs, rhs))
    return out


def _double_bracket_witness(L: LieSuperalgebra, f: GradedLinearMap) -> Optional[tuple]:
    """First basis tuple (x, y, u, w, z) with [[w,z],[u, f[x,y] - [x, f y]]] != 0."""
    n, fe, e = _basis_data(L, f)
    outer = [((w, z), L.bracket_basis(w, z)) for w in range(n) for z in range(n)]
    outer = [(wz, v) for wz, v in outer if any(v)]
    for x in range(n):
        for y in range(n):
            r = tuple(a - b for a, b in zip(f(L.bracket_basis(x, y)), bracket(L, e[x], fe[y])))
            if not any(r):
                continue
            for u in range(n):
                s = bracket(L, e[u], r)
                if not any(s):
                    continue
                for (w, z), v in outer:
                    if any(bracket(L, v, s)):
                        return (x, y, u, w, z)
    return None


def verify_commuting_in_centroid(L: LieSuperalgebra) -> Certificate:
    """Every super-commuting map of L lies in the even centroid, given L = L' and Z_L(L') = 0."""
    h = hypotheses(L)
    if not h.is_perfect:
        raise PreconditionError(f"{L.name} is not perfect (L != L')", "is_perfect")
    if h.centralizer_of_derived_dim != 0:
        raise PreconditionError(
            f"{L.name} has Z_L(L') of dimension {h.centralizer_of_derived_dim}",
            "centralizer_of_derived",
        )
    comm = commuting_map_space(L)
    cent = centroid_space(L, EVEN)
    details = {"commuting_dim": comm.dim, "centroid_even_dim": cent.dim}
    for idx, f in enumerate(comm.basis):
        w = _double_bracket_witness(L, f)
        if w is not None:
            return Certificate("commuting-centroid", FAIL, "double-bracket identity fails",
                               details, {"map": idx, "tuple": w})
        bad = centroid_violations(L, f)
        if bad:
            return Certificate("commuting-centroid", FAIL, "commuting map outside the even centroid",
                               details, {"map": idx, "pair": bad[0][0]})
    if not comm.space.is_subspace_of(cent.space):
        return Certificate("commuting-centroid", FAIL, "commuting space not contained in centroid",
                           details)
    return Certificate("commuting-centroid", PASS, "", details)
