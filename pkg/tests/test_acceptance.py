"""Acceptance criteria: one test per criterion, exact unless stated.

The sweep is every dominant integral weight with components in [-2, 3]
for all signatures m <= 3, n <= 2, and every branching candidate below
each of those weights.  Oracle-scope modules are the unique-multiplicity
highest weight components of V^(x)k, k <= 3, m + n <= 3, with the
characteristic matrix dimension capped at 81.
"""

import json
import time
from fractions import Fraction

import pytest

from qwig import (
    AdmissibilityError,
    DegenerateRoots,
    MultiplicityAmbiguous,
    NotRealized,
    NotScalar,
    ONE,
    PoleAtOne,
    Signature,
    Weight,
    ZERO,
    branch_candidates,
    chi_C1,
    chi_v,
    is_typical,
    linear_system_residuals,
    mu,
    omega,
    omega_classical,
    omega_coupled,
    sum_rule_residual,
)
from qwig.wigner import MU_SHIFT_DEFAULT, _Side
from conftest import ORACLE_SIGS, dominant_weights

ORACLE_SKIPS = (DegenerateRoots, NotRealized, NotScalar,
                MultiplicityAmbiguous, AdmissibilityError)


def test_criterion_01_sum_rules(sweep_branchings):
    start = time.monotonic()
    checked = degenerate = 0
    for b in sweep_branchings:
        for variant in ("lower", "raise"):
            try:
                residual = sum_rule_residual(b, variant)
            except DegenerateRoots:
                degenerate += 1
                continue
            assert residual == ZERO, (str(b), variant)
            checked += 1
    elapsed = time.monotonic() - start
    assert checked >= 1000
    assert elapsed < 60.0, "sum-rule sweep took %.1fs" % elapsed


def test_criterion_02_vanishing_rules(sweep_branchings):
    for b in sweep_branchings:
        for k in b.I0bar:
            assert omega(b, k, "lower") == ZERO
            assert omega(b, k, "lower", "qnumber_phase") == ZERO
        for k in b.I0:
            assert omega(b, k, "raise") == ZERO
            assert omega(b, k, "raise", "qnumber_phase") == ZERO


def test_criterion_03_linear_system_residuals(sweep_branchings):
    checked = 0
    for b in sweep_branchings:
        for variant in ("lower", "raise"):
            try:
                residuals = linear_system_residuals(b, variant)
            except DegenerateRoots:
                continue
            for r, value in residuals.items():
                assert value == ZERO, (str(b), variant, r)
                checked += 1
    assert checked >= 1000


def test_criterion_04_form_equivalence(sweep_branchings):
    # the mu shift convention was fixed by the oracle factorization
    # identity (test_oracle.py); a flip here must be reported, not accepted
    assert MU_SHIFT_DEFAULT == "unshifted", (
        "mu shift convention changed without oracle revalidation"
    )
    for b in sweep_branchings:
        for variant in ("lower", "raise"):
            side = _Side(b, variant)
            for k in side.K:
                try:
                    rp = omega(b, k, variant, "root_product")
                except DegenerateRoots:
                    break
                assert rp == omega(b, k, variant, "qnumber_phase"), (
                    "omega forms disagree at %s %s k=%d" % (b, variant, k)
                )
            for r in side.L:
                for convention in ("unshifted", "shifted"):
                    try:
                        rp = mu(b, r, variant, "root_product", convention)
                    except DegenerateRoots:
                        continue
                    assert rp == mu(b, r, variant, "qnumber_phase", convention), (
                        "mu forms disagree at %s %s r=%d (%s)"
                        % (b, variant, r, convention)
                    )
            for k in side.K:
                for r in side.L:
                    try:
                        rp = omega_coupled(b, k, r, variant, "root_product")
                    except DegenerateRoots:
                        continue
                    assert rp == omega_coupled(b, k, r, variant, "qnumber_phase"), (
                        "coupled forms disagree at %s %s k=%d r=%d"
                        % (b, variant, k, r)
                    )


def test_criterion_05_characteristic_identities(oracle_modules):
    from qwig.oracle import char_identity_check

    start = time.monotonic()
    checked = skipped = 0
    for (m, n), modules in oracle_modules.items():
        for lam, M in modules:
            assert (m + n) * M.dim <= 81
            for kind in ("atilde", "adual"):
                try:
                    holds = char_identity_check(M, lam, kind)
                except DegenerateRoots:
                    skipped += 1
                    continue
                assert holds, "identity fails for %s %s" % (lam, kind)
                checked += 1
    elapsed = time.monotonic() - start
    assert checked >= 20
    assert elapsed < 120.0, "characteristic sweep took %.1fs" % elapsed


def test_criterion_06_oracle_equality(oracle_modules):
    from qwig import QFraction, index_sets, qnum, qpow
    from qwig.oracle import coupled_oracle, wigner_oracle, vector_rep

    # the specific gl(1|1) table required by the criterion
    V = vector_rep(Signature(1, 1))
    lam11 = Weight(Signature(1, 1), (1, 0))
    assert wigner_oracle(V, lam11, (1,), 1, "raise") == QFraction(qpow(-1), qnum(2))
    assert wigner_oracle(V, lam11, (1,), 2, "raise") == QFraction(qpow(1), qnum(2))
    b11 = index_sets(lam11, (1,))
    assert omega(b11, 1, "raise") == QFraction(qpow(-1), qnum(2))

    matched = {"wigner": 0, "coupled": 0}
    for (m, n), modules in oracle_modules.items():
        sig = Signature(m, n)
        for lam, M in modules:
            for b in branch_candidates(lam):
                for kind in ("lower", "raise"):
                    side = _Side(b, kind)
                    for k in range(1, sig.d + 1):
                        try:
                            closed = omega(b, k, kind)
                            oracle = wigner_oracle(M, lam, b.lam0, k, kind)
                        except ORACLE_SKIPS:
                            continue
                        assert closed == oracle, (
                            "wigner mismatch %s %s k=%d" % (b, kind, k)
                        )
                        matched["wigner"] += 1
                    for k in side.K:
                        for r in side.L:
                            try:
                                closed = omega_coupled(b, k, r, kind)
                                oracle = coupled_oracle(M, lam, b.lam0, k, r, kind)
                            except ORACLE_SKIPS:
                                continue
                            assert closed == oracle, (
                                "coupled mismatch %s %s k=%d r=%d" % (b, kind, k, r)
                            )
                            matched["coupled"] += 1
    assert matched["wigner"] >= 100
    assert matched["coupled"] >= 100


def test_criterion_07_r_matrix_identities():
    from qwig.oracle import coproduct_check, qybe_check

    for m, n in ORACLE_SIGS:
        sig = Signature(m, n)
        assert qybe_check(sig), "qybe fails exactly for gl(%d|%d)" % (m, n)
        assert coproduct_check(sig), "coproduct fails exactly for gl(%d|%d)" % (m, n)
    big = Signature(2, 2)
    for q0 in (0.7, 2.0):
        assert qybe_check(big, q0, tol=1e-9)
        assert coproduct_check(big, q0, tol=1e-9)


def test_criterion_08_invariant_eigenvalues(oracle_modules, sweep_weights):
    from qwig.oracle import supertrace_invariant

    dual_checked = adjoint_checked = 0
    for (m, n), modules in oracle_modules.items():
        for lam, M in modules:
            try:
                oracle = supertrace_invariant(M, "adual", 1)
            except NotScalar:
                continue
            assert chi_C1(lam, "dual") == oracle, "C1 mismatch at %s" % lam
            dual_checked += 1
            # the adjoint-form closed eigenvalue holds on the typical
            # (Zariski-dense) set; on atypical weights the oracle value
            # collapses onto the dual closed form instead
            try:
                oracle_t = supertrace_invariant(M, "atilde", 1)
            except NotScalar:
                continue
            if is_typical(lam):
                assert chi_C1(lam, "adjoint") == oracle_t, (
                    "C1-tilde mismatch at typical %s" % lam
                )
                adjoint_checked += 1
            else:
                assert oracle_t == chi_C1(lam, "dual"), (
                    "atypical C1-tilde deviates from the degenerate value at %s"
                    % lam
                )
    assert dual_checked >= 10 and adjoint_checked >= 5

    for m in range(1, 5):
        for n in range(1, 5):
            zero = Weight(Signature(m, n), (0,) * (m + n))
            assert chi_C1(zero, "dual") == ZERO
            assert chi_C1(zero, "adjoint") == ZERO

    for lam in sweep_weights:
        assert chi_v(lam, "v") * chi_v(lam, "vtilde") == ONE


def test_criterion_09_classical_limit(sweep_branchings):
    checked = 0
    for b in sweep_branchings:
        side = _Side(b, "raise")
        for k in side.K:
            try:
                value = omega(b, k, "raise")
            except DegenerateRoots:
                break
            try:
                limit = value.limit_q1()
            except PoleAtOne:
                pytest.fail("omega-tilde has a pole at q=1 for %s k=%d" % (b, k))
            assert limit == omega_classical(b, k, "raise"), (
                "classical limit mismatch at %s k=%d" % (b, k)
            )
            checked += 1
    assert checked >= 1000


def test_criterion_10_cli_determinism(capsys):
    from qwig.cli import main

    argvs = [
        ["roots", "--weight", "2,-1|1", "--variant", "dual"],
        ["branch", "--weight", "2,1|0"],
        ["wigner", "--weight", "1,0|0", "--lower", "0,0",
         "--kind", "lower", "--form", "both"],
        ["wigner", "--weight", "2,1|0", "--lower", "1,1",
         "--kind", "raise", "--coupled", "--form", "both"],
        ["invariants", "--weight", "1,0|0"],
        ["verify", "--m", "1", "--n", "1", "--suite", "all"],
    ]
    for argv in argvs:
        outputs = []
        for _ in range(3):
            code = main(argv)
            outputs.append(capsys.readouterr().out)
            assert code == 0
        assert outputs[0] == outputs[1] == outputs[2]
        json.loads(outputs[0])
