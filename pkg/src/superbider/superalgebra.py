"""Lie superalgebras given by structure constants.

A basis ``e_0, ..., e_{m+n-1}`` is ordered with the ``m`` even vectors first
and the ``n`` odd vectors after them, so the parity of an index is just
``i >= m``. The bracket is ``[e_i, e_j] = sum_k c[i][j][k] e_k``. Constants
are stored for every ordered pair, including ``i > j``; :func:`validate`
checks that the redundant half agrees with super skew-symmetry instead of
rebuilding it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import InputError, ValidationError
from .exactlinalg import Matrix, as_fraction

__all__ = [
    "Parity",
    "EVEN",
    "ODD",
    "sign",
    "LieSuperalgebra",
    "Violation",
    "validate",
    "bracket",
    "direct_sum",
    "quotient_by_center",
    "Quotient",
    "homogeneous_parity",
]


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__

    def __str__(self):
        return self.name.lower()

    @classmethod
    def parse(cls, text: str) -> "Parity":
        try:
            return cls[text.upper()]
        except KeyError:
            raise InputError(f"unknown parity {text!r}; expected 'even' or 'odd'") from None


EVEN = Parity.EVEN
ODD = Parity.ODD


def sign(exponent: int) -> int:
    """(-1) ** exponent."""
    return -1 if exponent & 1 else 1


ZERO = Fraction(0)


@dataclass(frozen=True)
class LieSuperalgebra:
    dim_even: int
    dim_odd: int
    consts: tuple  # consts[i][j][k]
    name: str = field(default="L", compare=False)

    def __post_init__(self):
        n = self.dim_even + self.dim_odd
        if self.dim_even < 0 or self.dim_odd < 0:
            raise InputError("dimensions must be nonnegative")
        if len(self.consts) != n or any(
            len(row) != n or any(len(c) != n for c in row) for row in self.consts
        ):
            raise InputError(f"structure constants must form a {n}x{n}x{n} table")

    @classmethod
    def from_table(cls, dim_even: int, dim_odd: int, table, name: str = "L") -> "LieSuperalgebra":
        consts = tuple(
            tuple(tuple(as_fraction(c) for c in cell) for cell in row) for row in table
        )
        return cls(dim_even, dim_odd, consts, name)

    @classmethod
    def from_entries(
        cls, dim_even: int, dim_odd: int, entries: dict, name: str = "L"
    ) -> "LieSuperalgebra":
        """Build from a ``{(i, j, k): value}`` dict; missing entries are zero."""
        n = dim_even + dim_odd
        table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j, k), c in entries.items():
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise InputError(f"index ({i}, {j}, {k}) out of range for dimension {n}")
            table[i][j][k] = as_fraction(c)
        return cls.from_table(dim_even, dim_odd, table, name)

    @classmethod
    def abelian(cls, dim_even: int, dim_odd: int, name: Optional[str] = None) -> "LieSuperalgebra":
        return cls.from_entries(dim_even, dim_odd, {}, name or f"abelian({dim_even}|{dim_odd})")

    @property
    def dim(self) -> int:
        return self.dim_even + self.dim_odd

    @cached_property
    def parity(self) -> tuple:
        return tuple(EVEN if i < self.dim_even else ODD for i in range(self.dim))

    def p(self, i: int) -> int:
        return 0 if i < self.dim_even else 1

    @cached_property
    def sparse(self) -> tuple:
        """``sparse[i][j]`` lists the nonzero ``(k, c[i][j][k])``."""
        return tuple(
            tuple(tuple((k, c) for k, c in enumerate(cell) if c) for cell in row)
            for row in self.consts
        )

    @cached_property
    def nonzero_entries(self) -> dict:
        return {
            (i, j, k): c
            for i, row in enumerate(self.sparse)
            for j, cell in enumerate(row)
            for k, c in cell
        }

    def basis_vector(self, i: int) -> tuple:
        v = [ZERO] * self.dim
        v[i] = Fraction(1)
        return tuple(v)

    def zero_vector(self) -> tuple:
        return (ZERO,) * self.dim

    def bracket_basis(self, i: int, j: int) -> tuple:
        v = [ZERO] * self.dim
        for k, c in self.sparse[i][j]:
            v[k] = c
        return tuple(v)

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        return bracket(self, x, y)

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of ``v -> [x, v]``; column j is ``[x, e_j]``."""
        cols = [bracket(self, x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix(tuple(tuple(c[r] for c in cols) for r in range(self.dim)), self.dim)

    def validated(self) -> "LieSuperalgebra":
        report = validate(self)
        if report:
            raise ValidationError(report)
        return self

    def __repr__(self):
        return f"LieSuperalgebra({self.name!r}, dims=({self.dim_even}|{self.dim_odd}))"


class Violation(NamedTuple):
    invariant: str
    indices: tuple
    lhs: object
    rhs: object

    def __str__(self):
        return f"{self.invariant} at {self.indices}: {_fmt(self.lhs)} != {_fmt(self.rhs)}"


def _fmt(x) -> str:
    if isinstance(x, tuple):
        return "(" + ", ".join(str(c) for c in x) + ")"
    return str(x)


def _add_scaled(acc: list, s, vec_sparse) -> None:
    for k, c in vec_sparse:
        acc[k] += s * c


def bracket(L: LieSuperalgebra, x: Sequence, y: Sequence) -> tuple:
    """Bilinear extension of the structure constants."""
    n = L.dim
    if len(x) != n or len(y) != n:
        raise InputError(f"vectors of length {len(x)}, {len(y)} for an algebra of dimension {n}")
    out = [ZERO] * n
    ys = [(j, b) for j, b in enumerate(y) if b]
    sp = L.sparse
    for i, a in enumerate(x):
        if not a:
            continue
        row = sp[i]
        for j, b in ys:
            ab = a * b
            for k, c in row[j]:
                out[k] += ab * c
    return tuple(out)


def homogeneous_parity(L: LieSuperalgebra, v: Sequence) -> Optional[Parity]:
    """Parity of ``v`` if it is homogeneous, else None. The zero vector counts as even."""
    m = L.dim_even
    even = any(v[:m])
    odd = any(v[m:])
    if even and odd:
        return None
    return ODD if odd else EVEN


def validate(L: LieSuperalgebra) -> list:
    """All violations of super skew-symmetry, grading, and super-Jacobi."""
    n = L.dim
    c = L.consts
    p = [L.p(i) for i in range(n)]
    report = []
    for i in range(n):
        for j in range(n):
            s = -sign(p[i] * p[j])
            for k in range(n):
                a, b = c[i][j][k], c[j][i][k]
                if a != s * b:
                    report.append(Violation("skew-symmetry", (i, j, k), a, s * b))
                if a and p[k] != (p[i] + p[j]) % 2:
                    report.append(Violation("grading", (i, j, k), a, ZERO))
    # [[e_i,e_j],e_k] = [e_i,[e_j,e_k]] - (-1)^{p_i p_j} [e_j,[e_i,e_k]]
    basis = [L.basis_vector(i) for i in range(n)]
    br = [[L.bracket_basis(i, j) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            s = sign(p[i] * p[j])
            for k in range(n):
                lhs = bracket(L, br[i][j], basis[k])
                r1 = bracket(L, basis[i], br[j][k])
                r2 = bracket(L, basis[j], br[i][k])
                rhs = tuple(a - s * b for a, b in zip(r1, r2))
                if lhs != rhs:
                    report.append(Violation("super-Jacobi", (i, j, k), lhs, rhs))
    return report


def direct_sum(L1: LieSuperalgebra, L2: LieSuperalgebra, name: Optional[str] = None) -> LieSuperalgebra:
    """Block-diagonal sum, reordered as (L1 even, L2 even, L1 odd, L2 odd)."""
    for L in (L1, L2):
        report = validate(L)
        if report:
            raise ValidationError(report)
    index1, index2 = _sum_indices(L1, L2)
    entries = {}
    for L, idx in ((L1, index1), (L2, index2)):
        for (i, j, k), c in L.nonzero_entries.items():
            entries[idx[i], idx[j], idx[k]] = c
    return LieSuperalgebra.from_entries(
        L1.dim_even + L2.dim_even,
        L1.dim_odd + L2.dim_odd,
        entries,
        name or f"{L1.name}+{L2.name}",
    )


def _sum_indices(L1: LieSuperalgebra, L2: LieSuperalgebra) -> tuple:
    """Where each summand's basis vectors land in the direct sum."""
    m1, m2, n1 = L1.dim_even, L2.dim_even, L1.dim_odd
    idx1 = [i if i < m1 else m2 + i for i in range(L1.dim)]
    idx2 = [m1 + i if i < m2 else m1 + n1 + i for i in range(L2.dim)]
    return idx1, idx2


class Quotient(NamedTuple):
    algebra: LieSuperalgebra
    projection: Matrix  # dim(Lbar) x dim(L)


def quotient_by_center(L: LieSuperalgebra) -> Quotient:
    """``L / Z(L)`` on the standard basis vectors at the non-pivot columns of ``Z(L)``.

    For ``v`` in ``L`` the projection subtracts ``v[p] * z_p`` for every
    center basis row ``z_p`` with pivot ``p`` and reads off the remaining
    coordinates, which all sit at complement columns.
    """
    from .invariants import center

    z = center(L)
    pivots = z.pivot_cols
    keep = [j for j in range(L.dim) if j not in set(pivots)]
    rows = []
    for a in keep:
        row = [ZERO] * L.dim
        row[a] = Fraction(1)
        for zr, pc in zip(z.rows, pivots):
            if zr[a]:
                row[pc] = -zr[a]
        rows.append(tuple(row))
    proj = Matrix(tuple(rows), L.dim)
    entries = {}
    for ia, a in enumerate(keep):
        for ib, b in enumerate(keep):
            img = proj.apply(L.bracket_basis(a, b))
            for k, c in enumerate(img):
                if c:
                    entries[ia, ib, k] = c
    m_bar = sum(1 for a in keep if a < L.dim_even)
    Lbar = LieSuperalgebra.from_entries(
        m_bar, len(keep) - m_bar, entries, f"{L.name}/Z"
    )
    return Quotient(Lbar, proj)
