"""Exact computation of map spaces of finite-dimensional Lie superalgebras.

Superderivations, the centroid, linear super-commuting maps and
super-biderivations are computed as kernels of exactly assembled rational
linear systems, and the relations between them are checked on concrete
algebras.
"""

from .biderivations import (
    BiderivationSpace,
    GradedBilinearMap,
    biderivation_space,
    check_cross_identity,
    check_perfect_identity,
    check_second_slot_leibniz,
    check_triviality,
    decompose_via_centroid,
    from_centroid,
    from_commuting_map,
    induced_on_quotient,
    is_biderivation,
    residual_membership,
    special_biderivation_space,
    special_biderivation_spaces,
)
from .catalog import catalog_algebras, dump, from_tokens, load, make
from .errors import (
    FormatError,
    InputError,
    PreconditionError,
    SuperbiderError,
    TheoremViolation,
    ValidationError,
)
from .exactlinalg import EchelonBasis, Matrix, nullspace, rref, solve, subspace_contains, subspace_sum
from .invariants import HypothesisReport, center, centralizer, derived_algebra, hypotheses
from .maps import (
    GradedLinearMap,
    MapSpace,
    centroid_space,
    commuting_map_space,
    derivation_space,
    verify_commuting_in_centroid,
)
from .superalgebra import EVEN, ODD, LieSuperalgebra, Parity, bracket, direct_sum, quotient_by_center, validate

__version__ = "0.1.0"
