"""L-operators and characteristic matrices on vector x module spaces.

Each L-operator acts on V (x) W or V* (x) W, where V is the defining
module and W an arbitrary module; it is assembled as sum over elementary
matrices in the first slot tensored with algebra elements represented on W.
The four characteristic matrices are affine functions of products of two
such operators.  Their eigenvalues are simple affine-exponential functions
of the highest weight, and the Lagrange interpolation polynomials in them
project onto the irreducible summands of V (x) W or V* (x) W.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DegenerateRoots
from ..exactq import ONE, ZERO, QFraction, Q_MINUS_QINV, qnum, qpow
from ..superweight import char_roots, rho, subalgebra_roots
from .expressions import etilde_expr
from .linalg import gkron, identity, matmul, mat_scale, zeros

__all__ = [
    "eij_matrix",
    "etilde_matrix",
    "l_operator",
    "char_matrix",
    "char_eigenvalue",
    "char_eigenvalues",
    "projector",
    "big_entry",
    "vector_slot_parities",
    "L_KINDS",
    "CHAR_KINDS",
]

# which L-operator: (first-slot elementary matrix order, antipode power,
# dual sign rule); i <= j throughout
L_KINDS = ("R", "RT", "Rtilde", "RtildeT", "dualR", "dualRT")
CHAR_KINDS = ("ahat", "atilde", "adual", "abar")


def etilde_matrix(W, i, j, spower=0):
    """Matrix on W of the L-operator entry generator, optionally with the
    antipode (spower=1) or its inverse (spower=-1) applied first."""
    key = ("Et", i, j, spower)
    if key not in W._cache:
        expr = etilde_expr(W.sig, i, j)
        if spower:
            expr = expr.antipode(W.sig, spower)
        W._cache[key] = expr.evaluate(W)
    return W._cache[key]


def eij_matrix(W, i, j):
    """Matrix on W of the non-simple root element E_ij (i != j), built by
    the recursion E_ij = E_ik E_kj - q^(-(k)) E_kj E_ik."""
    from .expressions import eij_expr

    key = ("Eij", i, j)
    if key not in W._cache:
        W._cache[key] = eij_expr(W.sig, i, j).evaluate(W)
    return W._cache[key]


def vector_slot_parities(sig):
    return [sig.parity(i + 1) for i in range(sig.d)]


def _elementary(d, i, j):
    m = zeros(d)
    m[i - 1, j - 1] = ONE
    return m


def l_operator(W, which, top=None):
    """The big matrix of an L-operator on V' (x) W.

    V' is the defining module of the full algebra (top=None) or of the
    subalgebra spanned by the first `top` basis directions, in which case
    only generators with both indices <= top enter.  Kinds:

      R:       sum_{i<=j} e_ji (x) Et_ij
      RT:      sum_{i<=j} e_ij (x) Et_ji
      Rtilde:  sum_{i<=j} e_ij (x) S(Et_ji)
      RtildeT: sum_{i<=j} e_ji (x) S^-1(Et_ij)
      dualR:   sum_{i<=j} (-1)^([j]([i]+[j])) e_ij (x) S^-1(Et_ij)
      dualRT:  sum_{i<=j} (-1)^([i]([i]+[j])) e_ji (x) S^-1(Et_ji)
    """
    sig = W.sig
    d = sig.d if top is None else top
    slot_pars = [vector_slot_parities(sig)[:d], W.parities]
    total = zeros(d * W.dim)
    for i in range(1, d + 1):
        for j in range(i, d + 1):
            pi, pj = sig.parity(i), sig.parity(j)
            p = (pi + pj) % 2
            sgn = 1
            if which == "R":
                first, mat = _elementary(d, j, i), etilde_matrix(W, i, j)
            elif which == "RT":
                first, mat = _elementary(d, i, j), etilde_matrix(W, j, i)
            elif which == "Rtilde":
                first, mat = _elementary(d, i, j), etilde_matrix(W, j, i, 1)
            elif which == "RtildeT":
                first, mat = _elementary(d, j, i), etilde_matrix(W, i, j, -1)
            elif which == "dualR":
                first, mat = _elementary(d, i, j), etilde_matrix(W, i, j, -1)
                sgn = -1 if (pj * p) % 2 else 1
            elif which == "dualRT":
                first, mat = _elementary(d, j, i), etilde_matrix(W, j, i, -1)
                sgn = -1 if (pi * p) % 2 else 1
            else:
                raise ValueError("unknown L-operator kind %r" % (which,))
            term = gkron([(first, p), (mat, p)], slot_pars)
            total = total + (mat_scale(term, QFraction(sgn)) if sgn < 0 else term)
    return total


def char_matrix(W, kind, top=None):
    """A characteristic matrix on V' (x) W (or V'* (x) W for the duals).

      ahat:   (q - q^-1)^-1 (RT R - I)          adjoint, roots -q^abar [abar]
      atilde: (q - q^-1)^-1 (I - RtildeT Rtilde) adjoint, roots q^-abar [abar]
      adual:  (q - q^-1)^-1 (I - dualRT dualR)   dual, roots q^-a [a]
      abar:   D adual D^-1, D = q^-(rho, eps_i) on the first slot (same roots)
    """
    sig = W.sig
    d = sig.d if top is None else top
    N = d * W.dim
    ident = identity(N)
    inv = Q_MINUS_QINV.inverse()
    if kind == "ahat":
        prod = matmul(l_operator(W, "RT", top), l_operator(W, "R", top))
        return mat_scale(ident - prod, inv)
    if kind == "atilde":
        prod = matmul(
            l_operator(W, "RtildeT", top), l_operator(W, "Rtilde", top)
        )
        return mat_scale(ident - prod, inv)
    if kind in ("adual", "abar"):
        prod = matmul(l_operator(W, "dualRT", top), l_operator(W, "dualR", top))
        A = mat_scale(ident - prod, inv)
        if kind == "adual":
            return A
        r = rho(sig)
        # (rho, eps_i) carries the grading sign of the bilinear form
        rp = [sig.sign(i + 1) * r[i] for i in range(d)]
        out = zeros(N, N)
        for bi in range(d):
            for bj in range(d):
                scale = QFraction(qpow(rp[bj] - rp[bi]))
                for s in range(W.dim):
                    for t in range(W.dim):
                        v = A[bi * W.dim + s, bj * W.dim + t]
                        if v:
                            out[bi * W.dim + s, bj * W.dim + t] = v * scale
        return out
    raise ValueError("unknown characteristic matrix kind %r" % (kind,))


def char_eigenvalue(alpha, kind):
    """Deformed eigenvalue of a characteristic matrix from its classical
    root exponent."""
    if kind == "ahat":
        return -QFraction(qpow(alpha) * qnum(alpha))
    if kind in ("atilde", "adual", "abar"):
        return QFraction(qpow(-alpha) * qnum(alpha))
    raise ValueError("unknown characteristic matrix kind %r" % (kind,))


def char_eigenvalues(lam, kind, subalgebra=False):
    """All deformed eigenvalues for V(' ) (x) V(lam), indexed 1..d.

    With subalgebra=True, lam is a subalgebra weight of the parent
    signature lam.sig and the subalgebra root exponents are used.
    """
    variant = "adjoint" if kind in ("ahat", "atilde") else "dual"
    if subalgebra:
        alphas = subalgebra_roots(lam, variant, lam.sig)
    else:
        alphas = char_roots(lam, variant)
    return tuple(char_eigenvalue(a, kind) for a in alphas)


def projector(A, eigenvalues, r):
    """Lagrange interpolation projector onto the r-th eigenspace (1-based).

    A is a characteristic matrix, eigenvalues its full deformed spectrum.
    """
    vals = list(eigenvalues)
    target = vals[r - 1]
    out = identity(A.shape[0])
    for k, v in enumerate(vals, start=1):
        if k == r:
            continue
        if v == target:
            raise DegenerateRoots(
                "eigenvalues %d and %d coincide (%s)" % (r, k, v)
            )
        shifted = A - mat_scale(identity(A.shape[0]), v)
        out = matmul(out, mat_scale(shifted, (target - v).inverse()))
    return out


def big_entry(M, dW, i, j):
    """The (i, j) operator-valued entry of a big matrix on V' (x) W, as a
    dW x dW block (1-based first-slot indices)."""
    return M[(i - 1) * dW : i * dW, (j - 1) * dW : j * dW]
