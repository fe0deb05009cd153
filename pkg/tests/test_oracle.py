"""Golden dimensions, frozen from the naive reference solver in ``oracle.py``."""

import pytest

import oracle
from superbider.biderivations import biderivation_space
from superbider.catalog import make
from superbider.maps import centroid_space, commuting_map_space, derivation_space
from superbider.superalgebra import EVEN, ODD, LieSuperalgebra

GOLDEN = {
    "abelian(2|1)": {"der": (5, 4), "centroid": (5, 4), "commuting": 5, "bider": (6, 6)},
    "sl2": {"der": (3, 0), "centroid": (1, 0), "commuting": 1, "bider": (1, 0)},
    "gl(1|1)": {"der": (3, 2), "centroid": (2, 0), "commuting": 3, "bider": (1, 0)},
    "gl(2|1)": {"der": (5, 4), "centroid": (2, 0), "commuting": 6, "bider": (1, 0)},
    "sl(2|1)": {"der": (4, 4), "centroid": (1, 0), "commuting": 1, "bider": (1, 0)},
    "sl2+sl2": {"der": (6, 0), "centroid": (2, 0), "commuting": 2, "bider": (2, 0)},
}


def solver_dims(L):
    return {
        "der": (derivation_space(L, EVEN).dim, derivation_space(L, ODD).dim),
        "centroid": (centroid_space(L, EVEN).dim, centroid_space(L, ODD).dim),
        "commuting": commuting_map_space(L).dim,
        "bider": (biderivation_space(L, EVEN).dim, biderivation_space(L, ODD).dim),
    }


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_oracle_matches_frozen(algebras, name):
    assert oracle.all_dims(algebras[name]) == GOLDEN[name]


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_solver_matches_frozen(algebras, name):
    assert solver_dims(algebras[name]) == GOLDEN[name]


@pytest.mark.parametrize("m,n", [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2)])
def test_oracle_abelian(m, n):
    # every graded map commutes with a zero bracket
    L = make("abelian", [m, n])
    assert oracle.centroid_dim(L, 0) == m * m + n * n
    assert oracle.centroid_dim(L, 1) == 2 * m * n
    assert oracle.der_dim(L, 0) == m * m + n * n


def test_oracle_zero_algebra():
    assert oracle.all_dims(LieSuperalgebra.abelian(0, 0)) == {
        "der": (0, 0), "centroid": (0, 0), "commuting": 0, "bider": (0, 0)
    }


def test_oracle_sl2_anchor(sl2):
    assert oracle.der_dim(sl2, 0) == 3
    assert oracle.centroid_dim(sl2, 0) == 1
    assert oracle.bider_dim(sl2, 0) == 1
    assert oracle.commuting_dim(sl2) == 1


def test_oracle_on_extra_algebra():
    # an algebra outside the catalog, compared live rather than frozen
    L = make("sl", [1, 2])
    assert oracle.all_dims(L) == solver_dims(L)
