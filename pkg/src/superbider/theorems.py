"""Theorem and lemma checks packaged as certificates.

Each function runs one family of checks on one algebra and returns a
:class:`Certificate`. Hypotheses that do not hold give ``not-applicable``
rather than an error. A ``fail`` status means a computed object contradicts
a statement that should hold on every valid algebra.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .biderivations import (
    biderivation_space,
    check_cross_identity,
    check_perfect_identity,
    check_second_slot_leibniz,
    decompose_via_centroid,
    from_centroid,
    from_commuting_map,
    induced_on_quotient,
    is_biderivation,
    residual_membership,
    special_biderivation_space,
)
from .certificate import FAIL, NOT_APPLICABLE, PASS, Certificate
from .errors import PreconditionError, TheoremViolation
from .exactlinalg import EchelonBasis, rref_rows
from .invariants import hypotheses
from .maps import centroid_space, commuting_map_space, verify_commuting_in_centroid
from .superalgebra import LieSuperalgebra, Parity

__all__ = [
    "bider_centroid",
    "commuting_centroid",
    "special_zero",
    "lemma_suite",
    "random_coefficients",
    "THEOREMS",
]


def _not_perfect_centerless(L: LieSuperalgebra, name: str):
    h = hypotheses(L)
    if not h.is_perfect:
        return Certificate(name, NOT_APPLICABLE, "L not perfect")
    if not h.is_centerless:
        return Certificate(name, NOT_APPLICABLE, "L not centerless")
    return None


def bider_centroid(L: LieSuperalgebra) -> Certificate:
    """Every biderivation of a perfect centerless L is gamma([x,y]) with gamma in the centroid."""
    name = "bider-centroid"
    na = _not_perfect_centerless(L, name)
    if na:
        return na
    details = {}
    for t in Parity:
        cent = centroid_space(L, t)
        bider = biderivation_space(L, t)
        details[f"{t}.centroid_dim"] = cent.dim
        details[f"{t}.bider_dim"] = bider.dim
        for idx, delta in enumerate(bider.basis):
            try:
                decompose_via_centroid(L, delta)
            except TheoremViolation as exc:
                return Certificate(name, FAIL, str(exc), details, {"degree": str(t), "basis": idx})
        images = [from_centroid(L, g).vectorize() for g in cent.basis]
        rank = len(rref_rows(({k: x for k, x in enumerate(v) if x} for v in images), L.dim ** 3))
        details[f"{t}.injective"] = rank == cent.dim
        image = EchelonBasis.span(images, L.dim ** 3)
        details[f"{t}.surjective"] = image == bider.space
        if rank != cent.dim or image != bider.space or cent.dim != bider.dim:
            return Certificate(name, FAIL, f"centroid and biderivations differ in degree {t}", details)
    return Certificate(name, PASS, "", details)


def commuting_centroid(L: LieSuperalgebra) -> Certificate:
    try:
        return verify_commuting_in_centroid(L)
    except PreconditionError as exc:
        reason = "L not perfect" if exc.flag == "is_perfect" else "Z_L(L') nonzero"
        return Certificate("commuting-centroid", NOT_APPLICABLE, reason)


def special_zero(L: LieSuperalgebra) -> Certificate:
    name = "special-zero"
    na = _not_perfect_centerless(L, name)
    if na:
        return na
    details = {f"{t}.special_dim": special_biderivation_space(L, t).dim for t in Parity}
    if any(details.values()):
        return Certificate(name, FAIL, "nonzero special super-biderivation", details)
    return Certificate(name, PASS, "", details)


def random_coefficients(rng: random.Random, count: int) -> list:
    return [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(count)]


def lemma_suite(L: LieSuperalgebra, samples: int = 20, seed: int = 0) -> Certificate:
    """Constructor lemmas, the cross-bracket identity, centralizer residuals,
    the perfect-case identity, and the center containment behind the quotient.

    The second-slot Leibniz identity is only recorded, since it is an extra
    assumption rather than a consequence.
    """
    name = "lemma-suite"
    h = hypotheses(L)
    rng = random.Random(seed)
    details: dict = {}
    failures = []

    comm = commuting_map_space(L)
    for s in range(samples if comm.dim else 0):
        f = comm.combination(random_coefficients(rng, comm.dim))
        if is_biderivation(L, from_commuting_map(L, f)):
            failures.append(("commuting-constructor", s))
    details["commuting_samples"] = samples if comm.dim else 0

    for t in Parity:
        cent = centroid_space(L, t)
        for s in range(samples if cent.dim else 0):
            g = cent.combination(random_coefficients(rng, cent.dim))
            if is_biderivation(L, from_centroid(L, g)):
                failures.append(("centroid-constructor", str(t), s))
        details[f"{t}.centroid_samples"] = samples if cent.dim else 0

        bider = biderivation_space(L, t)
        signed_fail = 0
        second_slot_fail = 0
        for idx, delta in enumerate(bider.basis):
            if check_cross_identity(L, delta):
                failures.append(("cross-identity", str(t), idx))
            res = residual_membership(L, delta)
            if not res.passed:
                failures.append(("residual", str(t), idx, res.stated[0][0]))
            signed_fail += bool(res.signed)
            if h.is_perfect and check_perfect_identity(L, delta):
                failures.append(("perfect-identity", str(t), idx))
            try:
                induced_on_quotient(L, delta)
            except TheoremViolation as exc:
                failures.append(("quotient", str(t), idx, str(exc)))
            second_slot_fail += bool(check_second_slot_leibniz(L, delta))
        details[f"{t}.bider_checked"] = bider.dim
        details[f"{t}.signed_residual_failures"] = signed_fail
        details[f"{t}.second_slot_failures"] = second_slot_fail

    details["perfect_identity_checked"] = h.is_perfect
    if failures:
        return Certificate(name, FAIL, f"{len(failures)} lemma violation(s)", details, failures)
    return Certificate(name, PASS, "", details)


THEOREMS = {
    "bider-centroid": bider_centroid,
    "commuting-centroid": commuting_centroid,
    "special-zero": special_zero,
    "lemma-suite": lemma_suite,
}
