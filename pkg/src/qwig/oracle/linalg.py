"""Dense exact linear algebra over the q^(1/2) function field.

Matrices are numpy object arrays of QFraction.  Products skip zero entries,
which matters: the big operators built here are weight-sparse.
"""

from __future__ import annotations

import numpy as np

from ..errors import NotScalar
from ..exactq import ONE, ZERO, QFraction

__all__ = [
    "zeros",
    "identity",
    "matmul",
    "mat_add",
    "mat_scale",
    "is_zero_matrix",
    "mat_pow",
    "gkron",
    "nullspace",
    "rank",
    "mat_inverse",
    "solve_coords",
    "scalar_of",
    "GradedMatrix",
]


def zeros(r, c=None):
    c = r if c is None else c
    out = np.empty((r, c), dtype=object)
    out[:] = ZERO
    return out


def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = ONE
    return out


def matmul(A, B):
    n, m = A.shape
    m2, p = B.shape
    assert m == m2
    rows_b = [[(j, B[k, j]) for j in range(p) if B[k, j]] for k in range(m)]
    C = zeros(n, p)
    for i in range(n):
        Ai = A[i]
        for k in range(m):
            a = Ai[k]
            if not a:
                continue
            row = rows_b[k]
            Ci = C[i]
            for j, bv in row:
                Ci[j] = Ci[j] + a * bv
    return C


def mat_add(A, B):
    return A + B


def mat_scale(A, c):
    n, m = A.shape
    C = zeros(n, m)
    for i in range(n):
        for j in range(m):
            if A[i, j]:
                C[i, j] = A[i, j] * c
    return C


def mat_pow(A, p):
    out = identity(A.shape[0])
    for _ in range(p):
        out = matmul(out, A)
    return out


def is_zero_matrix(A):
    return all(not x for x in A.flat)


def gkron(ops, slot_parities):
    """Graded Kronecker product of operators acting on consecutive slots.

    ops: list of (matrix, operator parity 0/1); slot_parities: per slot,
    the list of basis parities.  The Koszul sign for moving the j-th
    operator past the first j-1 basis factors is
    (-1)^(p_j * (par(a_1) + ... + par(a_{j-1}))).
    """
    dims = [m.shape[0] for m, _ in ops]
    total = 1
    for d in dims:
        total *= d
    out = zeros(total, total)
    k = len(ops)

    # operator j picks up the basis parities of slots 0..j-1, so process
    # left to right carrying the accumulated column parity
    def rec2(slot, row, col, acc, carried):
        if slot == k:
            out[row, col] = out[row, col] + acc
            return
        mat, p = ops[slot]
        d = dims[slot]
        pars = slot_parities[slot]
        for a in range(d):
            sgn = -1 if (p and carried % 2) else 1
            for b in range(d):
                v = mat[b, a]
                if not v:
                    continue
                nacc = acc * v
                if sgn == -1:
                    nacc = -nacc
                rec2(slot + 1, row * d + b, col * d + a, nacc, carried + pars[a])
        return

    rec2(0, 0, 0, ONE, 0)
    return out


def _echelon(rows):
    """Row-reduce a list of row vectors (lists of QFraction) in place.

    Returns (pivots, reduced rows) with unit pivots, rows without full
    back-substitution (forward elimination plus normalization).
    """
    rows = [list(r) for r in rows]
    pivots = []
    out = []
    ncols = len(rows[0]) if rows else 0
    for r in rows:
        for p, base in zip(pivots, out):
            if r[p]:
                c = r[p]
                for j in range(ncols):
                    if base[j]:
                        r[j] = r[j] - c * base[j]
        lead = next((j for j in range(ncols) if r[j]), None)
        if lead is None:
            continue
        inv = r[lead].inverse()
        r = [x * inv for x in r]
        pivots.append(lead)
        out.append(r)
    return pivots, out


def rank(A):
    return len(_echelon(A.tolist())[0])


def mat_inverse(A):
    """Inverse of a square exact matrix; ValueError when singular."""
    n = A.shape[0]
    aug = []
    for i in range(n):
        row = list(A[i])
        row.extend(ONE if j == i else ZERO for j in range(n))
        aug.append(row)
    pivots, rows = _echelon(aug)
    if sorted(pivots) != list(range(n)):
        raise ValueError("matrix is singular")
    for i in range(len(rows) - 1, -1, -1):
        p = pivots[i]
        for k in range(i):
            c = rows[k][p]
            if c:
                rows[k] = [x - c * y for x, y in zip(rows[k], rows[i])]
    out = zeros(n)
    for p, row in zip(pivots, rows):
        for j in range(n):
            out[p, j] = row[n + j]
    return out


def nullspace(A):
    """Basis of the right nullspace of A, as a list of length-n vectors."""
    n = A.shape[1]
    pivots, rows = _echelon(A.tolist())
    # back substitution to reduced echelon
    for i in range(len(rows) - 1, -1, -1):
        p = pivots[i]
        for k in range(i):
            c = rows[k][p]
            if c:
                rows[k] = [x - c * y for x, y in zip(rows[k], rows[i])]
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for fj in free:
        v = [ZERO] * n
        v[fj] = ONE
        for p, row in zip(pivots, rows):
            v[p] = -row[fj]
        basis.append(v)
    return basis


def solve_coords(basis_cols, target):
    """Coordinates of target in the span of basis_cols (lists of QFraction).

    Raises ValueError when the target lies outside the span.
    """
    ncols = len(basis_cols)
    rows = len(target)
    aug = [[basis_cols[j][i] for j in range(ncols)] + [target[i]] for i in range(rows)]
    pivots, red = _echelon(aug)
    coords = [ZERO] * ncols
    # reduce fully
    for i in range(len(red) - 1, -1, -1):
        p = pivots[i]
        if p == ncols:
            raise ValueError("target not in span")
        for k in range(i):
            c = red[k][p]
            if c:
                red[k] = [x - c * y for x, y in zip(red[k], red[i])]
    for p, row in zip(pivots, red):
        coords[p] = row[ncols]
    return coords


def scalar_of(A, label="operator"):
    """The scalar c with A = c * I, or NotScalar."""
    n = A.shape[0]
    c = A[0, 0]
    for i in range(n):
        for j in range(n):
            want = c if i == j else ZERO
            if A[i, j] != want:
                raise NotScalar("%s is not scalar at entry (%d,%d)" % (label, i, j))
    return c


class GradedMatrix:
    """A square matrix tagged with basis parities (and optional weights)."""

    def __init__(self, data, parities, weights=None):
        self.data = data
        self.parities = list(parities)
        self.weights = weights

    @property
    def dim(self):
        return self.data.shape[0]

    def __matmul__(self, other):
        o = other.data if isinstance(other, GradedMatrix) else other
        return GradedMatrix(matmul(self.data, o), self.parities, self.weights)

    def supertrace(self):
        total = ZERO
        for i in range(self.dim):
            t = self.data[i, i]
            total = total + (-t if self.parities[i] % 2 else t)
        return total

    def __getitem__(self, key):
        return self.data[key]
