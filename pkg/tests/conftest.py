"""Shared fixtures: the dominant weight sweep and oracle-realized modules."""

import itertools

import pytest

from qwig import Signature, Weight, branch_candidates

SWEEP_SIGS = [(m, n) for m in (1, 2, 3) for n in (1, 2)]
ORACLE_SIGS = [(1, 1), (2, 1), (1, 2)]


def dominant_weights(m, n, lo=-2, hi=3):
    """All dominant integral weights of gl(m|n) with components in [lo, hi]."""
    sig = Signature(m, n)

    def blocks(size):
        return [
            c
            for c in itertools.product(range(hi, lo - 1, -1), repeat=size)
            if all(a >= b for a, b in zip(c, c[1:]))
        ]

    return [Weight(sig, ev + od) for ev in blocks(m) for od in blocks(n)]


@pytest.fixture(scope="session")
def sweep_weights():
    return [w for m, n in SWEEP_SIGS for w in dominant_weights(m, n)]


@pytest.fixture(scope="session")
def sweep_branchings(sweep_weights):
    return [b for w in sweep_weights for b in branch_candidates(w)]


def realized_modules(sig, k_max=3):
    """Unique-multiplicity highest weight modules inside V^(x)k, with the
    characteristic matrix dimension d*dim capped at 81."""
    from qwig.oracle import (
        highest_weight_vectors,
        submodule,
        tensor_module,
        vector_rep,
    )

    dim_cap = 81 // sig.d
    seen, out, W = set(), [], None
    for _ in range(k_max):
        W = vector_rep(sig) if W is None else tensor_module(W, vector_rep(sig))
        for wt, vecs in highest_weight_vectors(W):
            if wt in seen or len(vecs) != 1:
                continue
            seen.add(wt)
            M, _ = submodule(W, [vecs[0]])
            if M.dim <= dim_cap:
                out.append((Weight(sig, tuple(int(c) for c in wt)), M))
    return out


@pytest.fixture(scope="session")
def oracle_modules():
    """Criterion-scope module list: m+n <= 3, V^(x)k with k <= 3."""
    return {mn: realized_modules(Signature(*mn)) for mn in ORACLE_SIGS}
