"""Acceptance criteria, one test each. Every test records a PASS/FAIL line
that is printed in the terminal summary under "acceptance criteria"."""

import random
import subprocess
import sys
import time

import pytest

import oracle
from conftest import record_criterion
from superbider.biderivations import (
    biderivation_space,
    check_cross_identity,
    check_perfect_identity,
    decompose_via_centroid,
    from_centroid,
    from_commuting_map,
    induced_on_quotient,
    is_biderivation,
    residual_membership,
    special_biderivation_space,
)
from superbider.catalog import dump, load, make
from superbider.errors import FormatError, PreconditionError, ValidationError
from superbider.invariants import center, hypotheses
from superbider.maps import centroid_space, commuting_map_space, verify_commuting_in_centroid
from superbider.superalgebra import EVEN, Parity, quotient_by_center, validate
from superbider.theorems import random_coefficients
from test_oracle import solver_dims

PERFECT_CENTERLESS = ["sl2", "sl(2|1)", "sl2+sl2"]


def _finish(number, title, problems, note=""):
    ok = not problems
    record_criterion(number, title, ok, note if ok else f"{problems[0]}")
    assert ok, problems


def test_01_axiom_suite(algebras):
    start = time.perf_counter()
    problems = [(name, validate(L)[:1]) for name, L in algebras.items() if validate(L)]
    elapsed = time.perf_counter() - start
    if elapsed >= 1.0:
        problems.append(f"took {elapsed:.2f} s")
    _finish(1, "axiom suite on the catalog", problems, f"{elapsed * 1000:.0f} ms")


def test_02_golden_dimensions(algebras):
    problems = []
    for name, L in algebras.items():
        ours, ref = solver_dims(L), oracle.all_dims(L)
        if ours != ref:
            problems.append((name, ours, ref))
    sl2 = solver_dims(algebras["sl2"])
    if (sl2["centroid"][0], sl2["bider"][0], sl2["der"][0], sl2["commuting"]) != (1, 1, 3, 1):
        problems.append(("sl2 anchor", sl2))
    for m, n in [(2, 1), (1, 2), (3, 0)]:
        if centroid_space(make("abelian", [m, n]), EVEN).dim != m * m + n * n:
            problems.append(("abelian anchor", m, n))
    _finish(2, "golden dimensions match the oracle", problems, f"{len(algebras)} algebras")


def test_03_main_theorem(algebras):
    problems = []
    for name in PERFECT_CENTERLESS:
        L = algebras[name]
        for t in Parity:
            bider = biderivation_space(L, t)
            cent = centroid_space(L, t)
            if bider.dim != cent.dim:
                problems.append((name, str(t), "dim", cent.dim, bider.dim))
            for idx, delta in enumerate(bider.basis):
                gamma = decompose_via_centroid(L, delta)
                if from_centroid(L, gamma) != delta or not cent.contains(gamma):
                    problems.append((name, str(t), idx))
    _finish(3, "biderivations factor through the centroid", problems)


def test_04_lemma_suite(algebras):
    problems = []
    checked = 0
    for name, L in algebras.items():
        perfect = hypotheses(L).is_perfect
        for t in Parity:
            for idx, delta in enumerate(biderivation_space(L, t).basis):
                checked += 1
                if check_cross_identity(L, delta):
                    problems.append((name, str(t), idx, "cross"))
                if not residual_membership(L, delta).passed:
                    problems.append((name, str(t), idx, "residual"))
                if perfect and check_perfect_identity(L, delta):
                    problems.append((name, str(t), idx, "perfect"))
    _finish(4, "lemma suite on every biderivation basis element", problems, f"{checked} maps")


def test_05_commuting_theorem(algebras):
    problems = []
    for name in PERFECT_CENTERLESS:
        if not verify_commuting_in_centroid(algebras[name]).passed:
            problems.append((name, "did not pass"))
    for name in ["gl(1|1)", "abelian(2|1)"]:
        try:
            verify_commuting_in_centroid(algebras[name])
            problems.append((name, "no precondition error"))
        except PreconditionError:
            pass
    _finish(5, "commuting maps lie in the even centroid", problems)


def test_06_special_zero(algebras):
    problems = [
        (name, str(t), special_biderivation_space(algebras[name], t).dim)
        for name in PERFECT_CENTERLESS
        for t in Parity
        if special_biderivation_space(algebras[name], t).dim
    ]
    _finish(6, "special biderivations vanish", problems)


def test_07_constructor_lemmas(algebras):
    rng = random.Random(2024)
    problems = []
    for name, L in algebras.items():
        comm = commuting_map_space(L)
        for s in range(20 if comm.dim else 0):
            f = comm.combination(random_coefficients(rng, comm.dim))
            if is_biderivation(L, from_commuting_map(L, f)):
                problems.append((name, "commuting", s))
        for t in Parity:
            cent = centroid_space(L, t)
            for s in range(20 if cent.dim else 0):
                g = cent.combination(random_coefficients(rng, cent.dim))
                if is_biderivation(L, from_centroid(L, g)):
                    problems.append((name, "centroid", str(t), s))
    _finish(7, "constructor lemmas on random combinations", problems)


def test_08_quotient(gl11):
    problems = []
    z = center(gl11)
    Lbar, _ = quotient_by_center(gl11)
    for t in Parity:
        for idx, delta in enumerate(biderivation_space(gl11, t).basis):
            for zv in z.rows:
                for j in range(gl11.dim):
                    if not z.contains(delta(zv, gl11.basis_vector(j))):
                        problems.append((str(t), idx, "center", j))
            if is_biderivation(Lbar, induced_on_quotient(gl11, delta)):
                problems.append((str(t), idx, "induced"))
    _finish(8, "biderivations descend to gl(1|1)/Z", problems)


def test_09_format_round_trip(algebras, fixtures_dir):
    problems = []
    for name, L in algebras.items():
        text = dump(L)
        if dump(load(text)) != text:
            problems.append((name, "round trip"))
    expected = {
        "skew_violation.lsa": ValidationError,
        "grading_violation.lsa": ValidationError,
        "order_violation.lsa": FormatError,
    }
    for fname, cls in expected.items():
        try:
            load((fixtures_dir / fname).read_text())
            problems.append((fname, "accepted"))
        except cls:
            pass
        except Exception as exc:  # noqa: BLE001 - wrong class is a failure, not a crash
            problems.append((fname, type(exc).__name__))
    _finish(9, "LSA round trip and malformed fixtures", problems)


@pytest.mark.slow
def test_10_determinism():
    argv = [sys.executable, "-m", "superbider", "compute", "bider",
            "--algebra", "sl", "2", "1", "--degree", "both", "--json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    problems = [] if first == second and first else ["outputs differ"]
    _finish(10, "compute bider output is byte-identical across runs", problems, f"{len(first)} bytes")
