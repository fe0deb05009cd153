from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from superbider.catalog import make
from superbider.errors import InputError, ValidationError
from superbider.exactlinalg import Matrix
from superbider.invariants import center, derived_algebra
from superbider.superalgebra import (
    EVEN,
    ODD,
    LieSuperalgebra,
    Parity,
    bracket,
    direct_sum,
    homogeneous_parity,
    quotient_by_center,
    sign,
    validate,
)

F = Fraction
E, H, FF = 0, 1, 2  # sl2 basis e, h, f


def test_parity_arithmetic():
    assert EVEN + EVEN == EVEN
    assert EVEN + ODD == ODD
    assert ODD + ODD == EVEN
    assert Parity.parse("odd") is ODD
    with pytest.raises(InputError):
        Parity.parse("both")
    assert sign(0) == 1 and sign(3) == -1


class TestValidate:
    def test_catalog_clean(self, algebras):
        for L in algebras.values():
            assert validate(L) == []

    def test_corrupted_sl2_jacobi(self, sl2):
        entries = dict(sl2.nonzero_entries)
        entries[H, E, E] = 3
        entries[E, H, E] = -3
        bad = LieSuperalgebra.from_entries(3, 0, entries, "bad")
        report = validate(bad)
        assert report
        assert {v.invariant for v in report} == {"super-Jacobi"}
        # by hand at (e, f, h): [[e,f],h] = [h,h] = 0, while
        # [e,[f,h]] - [f,[e,h]] = [e,2f] - [f,-3e] = 2h - 3h = -h
        hit = [v for v in report if v.indices == (E, FF, H)]
        assert hit and hit[0].lhs == (0, 0, 0) and hit[0].rhs == (0, -1, 0)

    def test_one_sided_edit_is_a_skew_violation(self, sl2):
        entries = dict(sl2.nonzero_entries)
        entries[H, E, E] = 3
        report = validate(LieSuperalgebra.from_entries(3, 0, entries))
        assert any(v.invariant == "skew-symmetry" and v.indices == (H, E, E) for v in report)

    def test_grading_violation(self):
        # [even, odd] landing on an even vector
        L = LieSuperalgebra.from_entries(1, 1, {(0, 1, 0): 1, (1, 0, 0): -1})
        report = validate(L)
        assert any(v.invariant == "grading" and v.indices == (0, 1, 0) for v in report)

    def test_bad_shape(self):
        with pytest.raises(InputError):
            LieSuperalgebra(1, 0, ())


class TestBracket:
    def test_sl2(self, sl2):
        assert sl2.bracket(sl2.basis_vector(H), sl2.basis_vector(E)) == (2, 0, 0)

    def test_gl11_anticommutator(self, gl11):
        # basis E11, E22 (even), E12, E21 (odd); compute E12 E21 + E21 E12 as 2x2 matrices
        def mul(a, b):
            return [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]

        e12 = [[0, 1], [0, 0]]
        e21 = [[0, 0], [1, 0]]
        anti = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(mul(e12, e21), mul(e21, e12))]
        expected = (anti[0][0], anti[1][1], anti[0][1], anti[1][0])
        assert gl11.bracket(gl11.basis_vector(2), gl11.basis_vector(3)) == expected == (1, 1, 0, 0)

    def test_abelian(self):
        L = make("abelian", [2, 1])
        for i in range(3):
            for j in range(3):
                assert not any(L.bracket(L.basis_vector(i), L.basis_vector(j)))

    def test_dimension_mismatch(self, sl2):
        with pytest.raises(InputError):
            sl2.bracket((1, 0), (1, 0, 0))

    def test_homogeneous_parity(self, gl11):
        x, y = gl11.basis_vector(2), gl11.basis_vector(3)
        assert homogeneous_parity(gl11, x) is ODD
        assert homogeneous_parity(gl11, bracket(gl11, x, y)) is EVEN
        assert homogeneous_parity(gl11, (1, 0, 1, 0)) is None


def _homogeneous(L, parity, coeffs):
    lo, hi = (0, L.dim_even) if parity == EVEN else (L.dim_even, L.dim)
    return tuple(coeffs[i] if lo <= i < hi else F(0) for i in range(L.dim))


small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
catalog_names = st.sampled_from(["sl2", "gl(1|1)", "gl(2|1)", "sl(2|1)", "sl2+sl2"])


@settings(max_examples=40, deadline=None)
@given(catalog_names, st.sampled_from(list(Parity)), st.sampled_from(list(Parity)), st.data())
def test_super_skew_symmetry_on_homogeneous(algebras, name, px, py, data):
    L = algebras[name]
    coeffs = st.lists(small, min_size=L.dim, max_size=L.dim)
    x = _homogeneous(L, px, data.draw(coeffs))
    y = _homogeneous(L, py, data.draw(coeffs))
    s = -sign(px * py)
    assert bracket(L, x, y) == tuple(s * c for c in bracket(L, y, x))
    out = homogeneous_parity(L, bracket(L, x, y))
    assert out == px + py or not any(bracket(L, x, y))


@settings(max_examples=40, deadline=None)
@given(catalog_names, st.data())
def test_even_self_bracket_vanishes(algebras, name, data):
    L = algebras[name]
    x = _homogeneous(L, EVEN, data.draw(st.lists(small, min_size=L.dim, max_size=L.dim)))
    assert not any(bracket(L, x, x))


class TestDirectSum:
    def test_sl2_sl2(self, sl2):
        S = direct_sum(sl2, sl2)
        assert (S.dim_even, S.dim_odd) == (6, 0)
        assert validate(S) == []
        # derived algebra equals the whole sum: brute-force span of all pairwise brackets
        assert derived_algebra(S).dim == 6

    def test_zero_summand(self, sl2):
        S = direct_sum(sl2, LieSuperalgebra.abelian(0, 0))
        assert S == sl2

    def test_abelian(self):
        assert direct_sum(make("abelian", [1, 0]), make("abelian", [0, 1])) == make("abelian", [1, 1])

    def test_cross_brackets_vanish(self, sl2, gl11):
        S = direct_sum(sl2, gl11)
        assert validate(S) == []
        # sl2 lands on even 0..2; gl(1|1) on even 3..4 and odd 5..6
        first = [0, 1, 2]
        second = [3, 4, 5, 6]
        for i in first:
            for j in second:
                assert not any(S.bracket_basis(i, j))
                assert not any(S.bracket_basis(j, i))

    def test_invalid_summand(self, sl2):
        bad = LieSuperalgebra.from_entries(1, 0, {(0, 0, 0): 1})
        with pytest.raises(ValidationError):
            direct_sum(sl2, bad)

    def test_mixed_parity_order(self, gl11):
        S = direct_sum(gl11, gl11)
        assert (S.dim_even, S.dim_odd) == (4, 4)
        assert validate(S) == []


class TestQuotient:
    def test_centerless(self, sl2):
        Lbar, proj = quotient_by_center(sl2)
        assert Lbar == sl2
        assert proj == Matrix.identity(3)

    def test_gl11(self, gl11):
        Lbar, proj = quotient_by_center(gl11)
        assert (Lbar.dim_even, Lbar.dim_odd) == (1, 2)
        assert validate(Lbar) == []
        z = center(gl11)
        for zv in z.rows:
            assert not any(proj.apply(zv))

    def test_abelian(self):
        Lbar, proj = quotient_by_center(make("abelian", [2, 1]))
        assert Lbar.dim == 0
        assert proj.shape == (0, 3)

    @pytest.mark.parametrize("name", ["gl(1|1)", "gl(2|1)", "abelian(2|1)"])
    def test_well_defined(self, algebras, name):
        L = algebras[name]
        Lbar, proj = quotient_by_center(L)
        assert validate(Lbar) == []
        for zv in center(L).rows:
            for i in range(L.dim):
                x = L.basis_vector(i)
                img = proj.apply(bracket(L, x, zv))
                assert not any(img)
                assert bracket(Lbar, proj.apply(x), proj.apply(zv)) == img
        # the projection is a homomorphism on all basis pairs
        for i in range(L.dim):
            for j in range(L.dim):
                x, y = L.basis_vector(i), L.basis_vector(j)
                assert proj.apply(bracket(L, x, y)) == bracket(Lbar, proj.apply(x), proj.apply(y))


def test_zero_algebra_is_legal():
    Z = LieSuperalgebra.abelian(0, 0)
    assert validate(Z) == []
    assert quotient_by_center(Z).algebra.dim == 0


def test_concurrent_use_is_deterministic(algebras):
    L = algebras["sl(2|1)"]

    def work(_):
        return validate(L), quotient_by_center(L)

    with ThreadPoolExecutor(4) as pool:
        results = list(pool.map(work, range(8)))
    assert all(r == results[0] for r in results)
