"""Derived algebra, center, centralizers, and the hypothesis flags built on them."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, SuperbiderError
from .exactlinalg import EchelonBasis, Matrix, nullspace, sparse_nullspace
from .superalgebra import LieSuperalgebra, bracket

__all__ = [
    "HypothesisReport",
    "derived_algebra",
    "center",
    "centralizer",
    "hypotheses",
    "is_graded",
]


def _check_graded(L: LieSuperalgebra, s: EchelonBasis, what: str) -> EchelonBasis:
    if not is_graded(L, s):
        raise SuperbiderError(f"{what} of {L.name} is not a graded subspace")
    return s


def is_graded(L: LieSuperalgebra, s: EchelonBasis) -> bool:
    """True if the even and odd blocks of every basis row lie in ``s`` separately."""
    m = L.dim_even
    for r in s.rows:
        even = r[:m] + (0,) * (L.dim - m)
        odd = (0,) * m + r[m:]
        if not (s.contains(even) and s.contains(odd)):
            return False
    return True


def derived_algebra(L: LieSuperalgebra) -> EchelonBasis:
    n = L.dim
    s = EchelonBasis.span(
        (L.bracket_basis(i, j) for i in range(n) for j in range(n)), n
    )
    return _check_graded(L, s, "derived algebra")


def centralizer(L: LieSuperalgebra, S: EchelonBasis) -> EchelonBasis:
    """``{v : [s, v] = 0 for all s in S}``, one block of constraint rows per basis vector of S."""
    n = L.dim
    if S.ambient_dim != n:
        raise InputError(f"subspace of ambient dimension {S.ambient_dim} in an algebra of dimension {n}")
    rows = []
    for s in S.rows:
        rows.extend(L.ad(s).rows)
    if not rows:
        return EchelonBasis.whole(n)
    return _check_graded(L, nullspace(Matrix(tuple(rows), n)), "centralizer")


def center(L: LieSuperalgebra) -> EchelonBasis:
    """``{v : [e_i, v] = 0 for all i}``, rows read straight off the structure constants."""
    n = L.dim
    rows = {}
    for (i, j, k), c in L.nonzero_entries.items():
        rows.setdefault((i, k), {})[j] = c
    if not n:
        return EchelonBasis.zero(0)
    return _check_graded(L, EchelonBasis._from_sparse(sparse_nullspace(rows.values(), n), n), "center")


@dataclass(frozen=True)
class HypothesisReport:
    is_perfect: bool
    is_centerless: bool
    derived_dim: int
    center_dim: int
    centralizer_of_derived_dim: int


def hypotheses(L: LieSuperalgebra) -> HypothesisReport:
    d = derived_algebra(L)
    z = center(L)
    zd = centralizer(L, d)
    return HypothesisReport(
        is_perfect=d.dim == L.dim,
        is_centerless=z.dim == 0,
        derived_dim=d.dim,
        center_dim=z.dim,
        centralizer_of_derived_dim=zd.dim,
    )
