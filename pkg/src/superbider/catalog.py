"""Built-in algebras and the LSA structure-constants file format.

LSA files are line oriented UTF-8 text. ``#`` starts a comment. The first
content line is ``dims <m> <n>``; every other line is
``bracket <i> <j> <k> <num>/<den>`` (a bare integer is also accepted) for a
nonzero constant with ``i <= j``. ``i == j`` only makes sense for odd ``i``.
The loader fills in ``[e_j, e_i]`` by super skew-symmetry and validates the
result.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import FormatError, InputError, ValidationError
from .exactlinalg import Matrix, solve
from .superalgebra import LieSuperalgebra, direct_sum, sign, validate

__all__ = [
    "make",
    "from_tokens",
    "load",
    "dump",
    "CATALOG",
    "catalog_algebras",
    "gl_basis_labels",
    "sl_basis_labels",
]


def _sl2() -> LieSuperalgebra:
    # basis e, h, f
    e, h, f = 0, 1, 2
    entries = {
        (h, e, e): 2, (e, h, e): -2,
        (h, f, f): -2, (f, h, f): 2,
        (e, f, h): 1, (f, e, h): -1,
    }
    return LieSuperalgebra.from_entries(3, 0, entries, "sl2")


def _supermatrix_algebra(basis: list, m: int, n: int, name: str) -> LieSuperalgebra:
    """Structure constants of a graded subalgebra of gl(m|n).

    ``basis`` is a list of ``(matrix_dict, parity)`` with matrix dicts mapping
    ``(row, col)`` to coefficients, already ordered even-first.
    """
    size = m + n
    cells = [(a, b) for a in range(size) for b in range(size)]
    columns = Matrix(
        tuple(tuple(Fraction(mat.get(cell, 0)) for mat, _ in basis) for cell in cells),
        len(basis),
    )

    def product(x: dict, y: dict) -> dict:
        out: dict = {}
        for (a, b), u in x.items():
            for (c, d), v in y.items():
                if b == c:
                    out[a, d] = out.get((a, d), 0) + u * v
        return out

    entries = {}
    for i, (x, px) in enumerate(basis):
        for j, (y, py) in enumerate(basis):
            xy = product(x, y)
            yx = product(y, x)
            s = sign(px * py)
            br = {cell: xy.get(cell, 0) - s * yx.get(cell, 0) for cell in set(xy) | set(yx)}
            coords = solve(columns, [Fraction(br.get(cell, 0)) for cell in cells])
            if coords is None:
                raise InputError(f"{name}: bracket of basis {i}, {j} leaves the subspace")
            for k, c in enumerate(coords):
                if c:
                    entries[i, j, k] = c
    n_even = sum(1 for _, p in basis if p == 0)
    return LieSuperalgebra.from_entries(n_even, len(basis) - n_even, entries, name)


def _block(a: int, m: int) -> int:
    return 0 if a < m else 1


def gl_basis_labels(m: int, n: int) -> list:
    """Elementary matrix positions ``(a, b)`` (0-based) in catalog basis order."""
    size = m + n
    cells = [(a, b) for a in range(size) for b in range(size)]
    even = [c for c in cells if _block(c[0], m) == _block(c[1], m)]
    odd = [c for c in cells if _block(c[0], m) != _block(c[1], m)]
    return even + odd


def _gl(m: int, n: int) -> LieSuperalgebra:
    basis = [({c: 1}, (_block(c[0], m) + _block(c[1], m)) % 2) for c in gl_basis_labels(m, n)]
    return _supermatrix_algebra(basis, m, n, f"gl({m}|{n})")


def sl_basis_labels(m: int, n: int) -> list:
    """Catalog basis of sl(m|n): ``('h', a)`` for the diagonal element
    ``E_aa - (-1)^{p(a)+p(a+1)} E_{a+1,a+1}``, then off-diagonal ``(a, b)``.
    """
    size = m + n
    cells = gl_basis_labels(m, n)
    diag = [("h", a) for a in range(size - 1)]
    even = [c for c in cells if c[0] != c[1] and _block(c[0], m) == _block(c[1], m)]
    odd = [c for c in cells if _block(c[0], m) != _block(c[1], m)]
    return diag + even + odd


def _sl(m: int, n: int) -> LieSuperalgebra:
    basis = []
    for label in sl_basis_labels(m, n):
        if label[0] == "h":
            a = label[1]
            s = sign(_block(a, m) + _block(a + 1, m))
            basis.append(({(a, a): 1, (a + 1, a + 1): -s}, 0))
        else:
            a, b = label
            basis.append(({(a, b): 1}, (_block(a, m) + _block(b, m)) % 2))
    return _supermatrix_algebra(basis, m, n, f"sl({m}|{n})")


def _params(name: str, params: Sequence, count: int) -> list:
    if len(params) != count:
        raise InputError(f"{name} takes {count} parameter(s), got {len(params)}")
    out = []
    for p in params:
        try:
            v = int(p)
        except (TypeError, ValueError):
            raise InputError(f"{name}: parameter {p!r} is not an integer") from None
        if v < 0:
            raise InputError(f"{name}: parameters must be nonnegative, got {v}")
        out.append(v)
    return out


def make(name: str, params: Sequence = ()) -> LieSuperalgebra:
    """Construct a catalog algebra: ``abelian m n``, ``sl2``, ``gl m n``, ``sl m n``."""
    key = name.lower()
    if key == "abelian":
        m, n = _params(name, params, 2)
        L = LieSuperalgebra.abelian(m, n)
    elif key == "sl2":
        _params(name, params, 0)
        L = _sl2()
    elif key == "gl":
        m, n = _params(name, params, 2)
        L = _gl(m, n)
    elif key == "sl":
        m, n = _params(name, params, 2)
        if m == n:
            raise InputError(
                f"sl({m}|{n}) is not in the catalog: its center contains the identity,"
                " so the centerless hypotheses fail"
            )
        L = _sl(m, n)
    else:
        raise InputError(f"unknown algebra {name!r}; expected abelian, sl2, gl, sl")
    report = validate(L)
    if report:
        raise ValidationError(report)
    return L


def from_tokens(tokens: Iterable[str]) -> LieSuperalgebra:
    """Parse ``name [params...] [+ name [params...]]...`` into an algebra.

    ``+`` may also appear inside a token, as in ``sl2+sl2``.
    """
    flat = []
    for t in tokens:
        parts = t.split("+")
        for k, part in enumerate(parts):
            if k:
                flat.append("+")
            if part:
                flat.append(part)
    terms: list = [[]]
    for t in flat:
        if t == "+":
            terms.append([])
        else:
            terms[-1].append(t)
    if any(not term for term in terms):
        raise InputError("empty algebra term")
    algebras = [make(term[0], term[1:]) for term in terms]
    result = algebras[0]
    for other in algebras[1:]:
        result = direct_sum(result, other)
    return result


# name -> tokens, in acceptance order
CATALOG = {
    "abelian(2|1)": ("abelian", "2", "1"),
    "sl2": ("sl2",),
    "gl(1|1)": ("gl", "1", "1"),
    "gl(2|1)": ("gl", "2", "1"),
    "sl(2|1)": ("sl", "2", "1"),
    "sl2+sl2": ("sl2", "+", "sl2"),
}


def catalog_algebras() -> dict:
    return {name: from_tokens(tokens) for name, tokens in CATALOG.items()}


_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def _parse_rational(text: str, line: int) -> Fraction:
    if not _RATIONAL.match(text):
        raise FormatError(f"bad rational {text!r}", line)
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise FormatError(f"zero denominator in {text!r}", line)
    return Fraction(int(num), int(den or 1))


def _parse_index(text: str, line: int) -> int:
    if not text.isdigit():
        raise FormatError(f"bad index {text!r}", line)
    return int(text)


def load(text: str, name: str = "file", check: bool = True) -> LieSuperalgebra:
    """Parse an LSA file. With ``check`` (the default) invalid algebras raise ValidationError."""
    dims = None
    entries: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if dims is None:
            if fields[0] != "dims" or len(fields) != 3:
                raise FormatError("expected 'dims <m> <n>' as the first line", lineno)
            dims = (_parse_index(fields[1], lineno), _parse_index(fields[2], lineno))
            size = sum(dims)
            continue
        if fields[0] == "dims":
            raise FormatError("duplicate 'dims' line", lineno)
        if fields[0] != "bracket" or len(fields) != 5:
            raise FormatError("expected 'bracket <i> <j> <k> <num>/<den>'", lineno)
        i, j, k = (_parse_index(f, lineno) for f in fields[1:4])
        c = _parse_rational(fields[4], lineno)
        if max(i, j, k) >= size:
            raise FormatError(f"index out of range for dimension {size}", lineno)
        if i > j:
            raise FormatError(f"entry with i > j ({i} > {j}); give [e_{j}, e_{i}] instead", lineno)
        if (i, j, k) in entries:
            raise FormatError(f"duplicate entry ({i}, {j}, {k})", lineno)
        if c:
            entries[i, j, k] = c
    if dims is None:
        raise FormatError("missing 'dims' line")
    m, _ = dims
    table = {}
    for (i, j, k), c in entries.items():
        table[i, j, k] = c
        if i != j:
            pi, pj = int(i >= m), int(j >= m)
            table[j, i, k] = -sign(pi * pj) * c
    L = LieSuperalgebra.from_entries(dims[0], dims[1], table, name)
    report = validate(L) if check else None
    if report:
        raise ValidationError(report)
    return L


def dump(L: LieSuperalgebra) -> str:
    lines = [f"dims {L.dim_even} {L.dim_odd}"]
    for (i, j, k), c in sorted(L.nonzero_entries.items()):
        if i < j or (i == j and L.p(i)):
            lines.append(f"bracket {i} {j} {k} {c.numerator}/{c.denominator}")
    return "\n".join(lines) + "\n"
