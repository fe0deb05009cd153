"""Super-biderivations and the identities they satisfy.

A bilinear map ``delta`` is a table ``d[i][j][k]`` with
``delta(e_i, e_j) = sum_k d[i][j][k] e_k`` and a parity ``degree``. The
solver never treats all ``n**3`` entries as unknowns: super skew-symmetry
ties ``d[j][i]`` to ``d[i][j]`` and kills ``d[i][i]`` for even ``i``, and
grading kills every entry whose output parity is wrong. What remains are the
entries with ``i < j`` (or ``i == j`` odd) and a correctly graded ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .errors import InputError, PreconditionError, SuperbiderError, TheoremViolation
from .exactlinalg import EchelonBasis, Matrix, nullspace, solve, sparse_nullspace
from .invariants import center, centralizer, derived_algebra, hypotheses
from .maps import (
    GradedLinearMap,
    centroid_violations,
    commuting_violations,
    unknown_cells,
)
from .superalgebra import EVEN, LieSuperalgebra, Parity, Violation, bracket, quotient_by_center, sign

__all__ = [
    "GradedBilinearMap",
    "BiderivationSpace",
    "ResidualReport",
    "is_biderivation",
    "biderivation_space",
    "special_biderivation_space",
    "special_biderivation_spaces",
    "from_commuting_map",
    "from_centroid",
    "check_cross_identity",
    "residual_membership",
    "check_perfect_identity",
    "decompose_via_centroid",
    "check_triviality",
    "induced_on_quotient",
    "check_second_slot_leibniz",
]

ZERO = Fraction(0)


@dataclass(frozen=True)
class GradedBilinearMap:
    d: tuple  # d[i][j] is the coordinate tuple of delta(e_i, e_j)
    degree: Parity

    @classmethod
    def from_values(cls, n: int, values: dict, degree: Parity) -> "GradedBilinearMap":
        """From ``{(i, j): vector}`` or ``{(i, j, k): scalar}``; everything else zero."""
        table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for key, val in values.items():
            if len(key) == 3:
                i, j, k = key
                table[i][j][k] = Fraction(val)
            else:
                i, j = key
                table[i][j] = [Fraction(x) for x in val]
        return cls(tuple(tuple(tuple(c) for c in row) for row in table), Parity(degree))

    @classmethod
    def from_bracket(cls, L: LieSuperalgebra, scale=1) -> "GradedBilinearMap":
        s = Fraction(scale)
        return cls(
            tuple(tuple(tuple(s * c for c in cell) for cell in row) for row in L.consts), EVEN
        )

    @classmethod
    def zero(cls, n: int, degree: Parity = EVEN) -> "GradedBilinearMap":
        return cls.from_values(n, {}, degree)

    @classmethod
    def from_vector(cls, v: Sequence, n: int, degree: Parity) -> "GradedBilinearMap":
        return cls(
            tuple(
                tuple(tuple(v[(i * n + j) * n:(i * n + j + 1) * n]) for j in range(n))
                for i in range(n)
            ),
            Parity(degree),
        )

    @property
    def size(self) -> int:
        return len(self.d)

    def vectorize(self) -> tuple:
        return tuple(c for row in self.d for cell in row for c in cell)

    def __call__(self, x: Sequence, y: Sequence) -> tuple:
        n = self.size
        out = [ZERO] * n
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in ys:
                ab = a * b
                for k, c in enumerate(self.d[i][j]):
                    if c:
                        out[k] += ab * c
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(self.vectorize())


def _check_size(L: LieSuperalgebra, delta: GradedBilinearMap) -> None:
    if delta.size != L.dim:
        raise InputError(f"bilinear map of size {delta.size} on an algebra of dimension {L.dim}")


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _smul(s, a):
    return tuple(s * x for x in a) if s != 1 else a


class _Eval:
    """Basis values needed by the identity checks."""

    def __init__(self, L: LieSuperalgebra, delta: GradedBilinearMap):
        _check_size(L, delta)
        n = L.dim
        self.L = L
        self.delta = delta
        self.n = n
        self.e = [L.basis_vector(i) for i in range(n)]
        self.br = [[L.bracket_basis(i, j) for j in range(n)] for i in range(n)]
        self.dv = delta.d
        self.t = int(delta.degree)
        self.p = [L.p(i) for i in range(n)]


def is_biderivation(L: LieSuperalgebra, delta: GradedBilinearMap) -> list:
    """Violations of grading, super skew-symmetry, and
    delta([x,y],z) = (-1)^{|delta||x|} [x, delta(y,z)] + (-1)^{|y||z|} [delta(x,z), y].
    """
    ev = _Eval(L, delta)
    n, p, t, dv, e = ev.n, ev.p, ev.t, ev.dv, ev.e
    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if dv[i][j][k] and p[k] != (p[i] + p[j] + t) % 2:
                    out.append(Violation("grading", (i, j, k), dv[i][j][k], ZERO))
            rhs = _smul(-sign(p[i] * p[j]), dv[j][i])
            if dv[i][j] != rhs:
                out.append(Violation("skew-symmetry", (i, j), dv[i][j], rhs))
    for a in range(n):
        for b in range(n):
            ab = ev.br[a][b]
            for c in range(n):
                lhs = delta(ab, e[c])
                r1 = bracket(L, e[a], dv[b][c])
                r2 = bracket(L, dv[a][c], e[b])
                s1, s2 = sign(t * p[a]), sign(p[b] * p[c])
                rhs = tuple(s1 * x + s2 * y for x, y in zip(r1, r2))
                if lhs != rhs:
                    out.append(Violation("biderivation", (a, b, c), lhs, rhs))
    return out


def _require_biderivation(L: LieSuperalgebra, delta: GradedBilinearMap) -> None:
    bad = is_biderivation(L, delta)
    if bad:
        raise PreconditionError(f"not a super-biderivation: {bad[0]}", "is_biderivation")


@dataclass(frozen=True)
class BiderivationSpace:
    degree: Parity
    kind: str  # "full" or "special"
    space: EchelonBasis  # over the vectorization of d, length n**3
    size: int

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> tuple:
        return tuple(GradedBilinearMap.from_vector(r, self.size, self.degree) for r in self.space.rows)

    def contains(self, delta: GradedBilinearMap) -> bool:
        return delta.degree == self.degree and self.space.contains(delta.vectorize())

    def combination(self, coeffs: Sequence) -> GradedBilinearMap:
        if len(coeffs) != self.dim:
            raise InputError(f"{len(coeffs)} coefficients for a space of dimension {self.dim}")
        acc = [ZERO] * (self.size ** 3)
        for a, r in zip(coeffs, self.space.rows):
            a = Fraction(a)
            for k, x in enumerate(r):
                if x:
                    acc[k] += a * x
        return GradedBilinearMap.from_vector(acc, self.size, self.degree)


class _Unknowns:
    """Independent entries of a skew-symmetric graded bilinear map."""

    def __init__(self, L: LieSuperalgebra, degree: Parity):
        n = L.dim
        p = [L.p(i) for i in range(n)]
        self.p = p
        self.t = int(degree)
        self.cells = [
            (i, j, k)
            for i in range(n)
            for j in range(i, n)
            if i < j or p[i]
            for k in range(n)
            if p[k] == (p[i] + p[j] + self.t) % 2
        ]
        self.index = {cell: u for u, cell in enumerate(self.cells)}

    def var(self, x: int, y: int, z: int) -> Optional[tuple]:
        """``(unknown, sign)`` with d[x][y][z] = sign * unknown, or None if the entry is 0."""
        if x <= y:
            u = self.index.get((x, y, z))
            return None if u is None else (u, 1)
        u = self.index.get((y, x, z))
        return None if u is None else (u, -sign(self.p[x] * self.p[y]))


class _RowAcc:
    def __init__(self, unknowns: _Unknowns):
        self.unknowns = unknowns
        self.rows: dict = {}

    def add(self, key, x, y, z, coef) -> None:
        v = self.unknowns.var(x, y, z)
        if v is None:
            return
        u, s = v
        row = self.rows.setdefault(key, {})
        val = row.get(u, 0) + s * coef
        if val:
            row[u] = val
        else:
            del row[u]

    def flush(self) -> list:
        out = [r for r in self.rows.values() if r]
        self.rows = {}
        return out


def _biderivation_rows(L: LieSuperalgebra, unk: _Unknowns) -> list:
    # delta([e_a,e_b],e_c) - s1 [e_a, delta(e_b,e_c)] - s2 [delta(e_a,e_c), e_b] = 0,
    # first argument expanded through the structure constants
    n = L.dim
    p = unk.p
    sp = L.sparse
    acc = _RowAcc(unk)
    rows = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for l, cab in sp[a][b]:
                    for k in range(n):
                        acc.add(k, l, c, k, cab)
                s1 = sign(unk.t * p[a])
                for r in range(n):
                    for k, car in sp[a][r]:
                        acc.add(k, b, c, r, -s1 * car)
                s2 = sign(p[b] * p[c])
                for r in range(n):
                    for k, crb in sp[r][b]:
                        acc.add(k, a, c, r, -s2 * crb)
                rows.extend(acc.flush())
    return rows


def _space_from_rows(L: LieSuperalgebra, unk: _Unknowns, rows: list, degree: Parity,
                     kind: str) -> BiderivationSpace:
    n = L.dim
    kernel = sparse_nullspace(rows, len(unk.cells))
    vecs = []
    for v in kernel:
        full = [ZERO] * (n ** 3)
        for (i, j, k), u in unk.index.items():
            x = v.get(u)
            if x:
                full[(i * n + j) * n + k] = x
                if i != j:
                    full[(j * n + i) * n + k] = -sign(unk.p[i] * unk.p[j]) * x
        vecs.append(full)
    space = BiderivationSpace(degree, kind, EchelonBasis.span(vecs, n ** 3), n)
    for delta in space.basis:
        bad = is_biderivation(L, delta)
        if bad:
            raise SuperbiderError(f"biderivation solver returned a non-solution: {bad[0]}")
    return space


def biderivation_space(L: LieSuperalgebra, degree: Parity) -> BiderivationSpace:
    degree = Parity(degree)
    unk = _Unknowns(L, degree)
    return _space_from_rows(L, unk, _biderivation_rows(L, unk), degree, "full")


def special_biderivation_space(L: LieSuperalgebra, degree: Parity) -> BiderivationSpace:
    """Degree-``degree`` biderivations with image in Z_L(L') that vanish on L' x L'."""
    degree = Parity(degree)
    n = L.dim
    unk = _Unknowns(L, degree)
    rows = _biderivation_rows(L, unk)
    derived = derived_algebra(L)
    zd = centralizer(L, derived)
    ann = nullspace(Matrix(zd.rows, n)) if zd.dim else EchelonBasis.whole(n)
    acc = _RowAcc(unk)
    for i in range(n):
        for j in range(i, n):
            for ai, a in enumerate(ann.rows):
                for k, x in enumerate(a):
                    if x:
                        acc.add(ai, i, j, k, x)
            rows.extend(acc.flush())
    for ui, u in enumerate(derived.rows):
        for vi, v in enumerate(derived.rows):
            for i, x in enumerate(u):
                if not x:
                    continue
                for j, y in enumerate(v):
                    if y:
                        for k in range(n):
                            acc.add(k, i, j, k, x * y)
            rows.extend(acc.flush())
    return _space_from_rows(L, unk, rows, degree, "special")


def special_biderivation_spaces(L: LieSuperalgebra) -> dict:
    return {t: special_biderivation_space(L, t) for t in Parity}


def from_commuting_map(L: LieSuperalgebra, f: GradedLinearMap) -> GradedBilinearMap:
    """delta(x, y) = [x, f(y)]."""
    if f.degree != EVEN:
        raise PreconditionError("super-commuting maps are even", "degree")
    bad = commuting_violations(L, f)
    if bad:
        raise PreconditionError(f"map is not super-commuting at {bad[0][0]}", "commuting")
    n = L.dim
    fe = [f.image_of_basis(j) for j in range(n)]
    values = {(i, j): bracket(L, L.basis_vector(i), fe[j]) for i in range(n) for j in range(n)}
    return GradedBilinearMap.from_values(n, values, EVEN)


def from_centroid(L: LieSuperalgebra, gamma: GradedLinearMap) -> GradedBilinearMap:
    """delta(x, y) = gamma([x, y]), of the same degree as gamma."""
    bad = centroid_violations(L, gamma)
    if bad:
        raise PreconditionError(f"map is not in the centroid at {bad[0][0]}", "centroid")
    n = L.dim
    values = {(i, j): gamma(L.bracket_basis(i, j)) for i in range(n) for j in range(n)}
    return GradedBilinearMap.from_values(n, values, gamma.degree)


def check_cross_identity(L: LieSuperalgebra, delta: GradedBilinearMap) -> list:
    """Violations of [delta(x,y), [u,v]] = (-1)^{|delta|(|x|+|y|)} [[x,y], delta(u,v)]."""
    ev = _Eval(L, delta)
    n, p, t, dv, br = ev.n, ev.p, ev.t, ev.dv, ev.br
    out = []
    pairs = [(x, y) for x in range(n) for y in range(n)]
    for x, y in pairs:
        s = sign(t * (p[x] + p[y]))
        for u, v in pairs:
            lhs = bracket(L, dv[x][y], br[u][v])
            rhs = _smul(s, bracket(L, br[x][y], dv[u][v]))
            if lhs != rhs:
                out.append(Violation("cross-identity", (x, y, u, v), lhs, rhs))
    return out


class ResidualReport(NamedTuple):
    """Basis triples (u, x, y) whose residual falls outside Z_L(L').

    ``stated`` uses delta(u,[x,y]) - (-1)^{|delta||u|} [u, delta(x,y)];
    ``signed`` uses (-1)^{|delta||x| + |x||u|} delta(u,[x,y]) - (-1)^{|delta||u|} [u, delta(x,y)].
    """

    stated: list
    signed: list

    @property
    def passed(self) -> bool:
        return not self.stated


def residual_membership(L: LieSuperalgebra, delta: GradedBilinearMap) -> ResidualReport:
    _require_biderivation(L, delta)
    ev = _Eval(L, delta)
    n, p, t, dv, br, e = ev.n, ev.p, ev.t, ev.dv, ev.br, ev.e
    zd = centralizer(L, derived_algebra(L))
    stated, signed = [], []
    for u in range(n):
        for x in range(n):
            for y in range(n):
                a = delta(e[u], br[x][y])
                b = _smul(sign(t * p[u]), bracket(L, e[u], dv[x][y]))
                r = _sub(a, b)
                if not zd.contains(r):
                    stated.append(((u, x, y), r))
                r2 = _sub(_smul(sign(t * p[x] + p[x] * p[u]), a), b)
                if not zd.contains(r2):
                    signed.append(((u, x, y), r2))
    return ResidualReport(stated, signed)


def check_perfect_identity(L: LieSuperalgebra, delta: GradedBilinearMap) -> list:
    """Violations of delta(u, [x,y]) = (-1)^{|delta||u|} [u, delta(x,y)]; needs L = L'."""
    if not hypotheses(L).is_perfect:
        raise PreconditionError(f"{L.name} is not perfect", "is_perfect")
    _require_biderivation(L, delta)
    ev = _Eval(L, delta)
    n, p, t, dv, br, e = ev.n, ev.p, ev.t, ev.dv, ev.br, ev.e
    out = []
    for u in range(n):
        for x in range(n):
            for y in range(n):
                lhs = delta(e[u], br[x][y])
                rhs = _smul(sign(t * p[u]), bracket(L, e[u], dv[x][y]))
                if lhs != rhs:
                    out.append(Violation("perfect-identity", (u, x, y), lhs, rhs))
    return out


def decompose_via_centroid(L: LieSuperalgebra, delta: GradedBilinearMap) -> GradedLinearMap:
    """The centroid element gamma with delta(x, y) = gamma([x, y]).

    Solved from gamma([e_i, e_j]) = delta(e_i, e_j) over all basis pairs;
    the brackets span L because L is perfect.
    """
    h = hypotheses(L)
    if not h.is_perfect:
        raise PreconditionError(f"{L.name} is not perfect", "is_perfect")
    if not h.is_centerless:
        raise PreconditionError(f"{L.name} has a nonzero center", "is_centerless")
    _require_biderivation(L, delta)
    n = L.dim
    cells = unknown_cells(L, delta.degree)
    col = {cell: u for u, cell in enumerate(cells)}
    rows, rhs = [], []
    for i in range(n):
        for j in range(n):
            br = L.sparse[i][j]
            for k in range(n):
                row = [ZERO] * len(cells)
                for l, c in br:
                    u = col.get((k, l))
                    if u is not None:
                        row[u] += c
                rows.append(tuple(row))
                rhs.append(delta.d[i][j][k])
    x = solve(Matrix(tuple(rows), len(cells)), rhs)
    if x is None:
        raise TheoremViolation(
            f"no linear map gamma with gamma([x,y]) = delta(x,y) on {L.name}", delta
        )
    m = [[ZERO] * n for _ in range(n)]
    for (r, c), val in zip(cells, x):
        m[r][c] = val
    gamma = GradedLinearMap(Matrix.from_rows(m, n), delta.degree)
    bad = centroid_violations(L, gamma)
    if bad:
        raise TheoremViolation(f"gamma solved on {L.name} is not in the centroid at {bad[0][0]}", gamma)
    if from_centroid(L, gamma) != delta:
        raise TheoremViolation(f"gamma([x,y]) does not reproduce delta on {L.name}", gamma)
    return gamma


def check_triviality(L: LieSuperalgebra, delta: GradedBilinearMap) -> bool:
    """True iff delta(L, L') = 0."""
    _check_size(L, delta)
    derived = derived_algebra(L)
    return all(
        not any(delta(L.basis_vector(i), v)) for i in range(L.dim) for v in derived.rows
    )


def induced_on_quotient(L: LieSuperalgebra, delta: GradedBilinearMap) -> GradedBilinearMap:
    """The map induced by delta on L / Z(L), after checking delta(Z(L), L) lies in Z(L)."""
    _require_biderivation(L, delta)
    z = center(L)
    n = L.dim
    for zi, zv in enumerate(z.rows):
        for j in range(n):
            v = delta(zv, L.basis_vector(j))
            if not z.contains(v):
                raise TheoremViolation(
                    f"delta(z, e_{j}) is not central for center basis vector {zi} of {L.name}",
                    {"center_vector": zi, "j": j, "value": v},
                )
    Lbar, proj = quotient_by_center(L)
    keep = [j for j in range(n) if j not in set(z.pivot_cols)]
    values = {
        (a, b): proj.apply(delta.d[ka][kb])
        for a, ka in enumerate(keep)
        for b, kb in enumerate(keep)
    }
    dbar = GradedBilinearMap.from_values(Lbar.dim, values, delta.degree)
    bad = is_biderivation(Lbar, dbar)
    if bad:
        raise TheoremViolation(f"induced map on {Lbar.name} is not a super-biderivation: {bad[0]}", dbar)
    return dbar


def check_second_slot_leibniz(L: LieSuperalgebra, delta: GradedBilinearMap) -> list:
    """Violations of delta(u,[x,y]) = [delta(u,x), y] + (-1)^{(|delta|+|u|)|x|} [x, delta(u,y)].

    Not every biderivation satisfies this; the result is a status, not an assertion.
    """
    ev = _Eval(L, delta)
    n, p, t, dv, br, e = ev.n, ev.p, ev.t, ev.dv, ev.br, ev.e
    out = []
    for u in range(n):
        for x in range(n):
            for y in range(n):
                lhs = delta(e[u], br[x][y])
                a = bracket(L, dv[u][x], e[y])
                b = bracket(L, e[x], dv[u][y])
                s = sign((t + p[u]) * p[x])
                rhs = tuple(c + s * d for c, d in zip(a, b))
                if lhs != rhs:
                    out.append(Violation("second-slot", (u, x, y), lhs, rhs))
    return out
