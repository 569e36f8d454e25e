"""Concrete finite-dimensional modules: vector module, tensor powers,
highest weight vectors and cyclic submodules.

Generator conventions on the vector module: e_a -> e_{a,a+1},
f_a -> e_{a+1,a}, E_aa -> e_aa (the Cartan action stays classical).  On a
graded tensor product the generators act through the coproduct
x -> q^(h_a/2) (x) x + x (x) q^(-h_a/2) with the Koszul sign built into the
graded Kronecker product.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..errors import MultiplicityAmbiguous, NotRealized
from ..exactq import ONE, ZERO, QFraction, qpow
from .linalg import gkron, solve_coords, zeros

__all__ = [
    "RepModule",
    "vector_rep",
    "tensor_module",
    "highest_weight_vectors",
    "submodule",
    "module_from_highest_weight",
    "subalgebra_highest_vector",
    "subalgebra_components",
]


class RepModule:
    """A finite-dimensional weight module with explicit generator matrices.

    weights[i] is the tuple of E_jj eigenvalues (Fractions) of basis vector
    i, parities[i] its grading.  e[a]/f[a] are the simple generator
    matrices for a = 1..m+n-1.
    """

    def __init__(self, sig, weights, parities, e, f):
        self.sig = sig
        self.weights = [tuple(Fraction(c) for c in w) for w in weights]
        self.parities = list(parities)
        self.e = e
        self.f = f
        self.dim = len(self.weights)
        self._cache = {}

    def cartan(self, coeffs, shift=Fraction(0)):
        """Diagonal matrix of q^(sum_j coeffs_j E_jj + shift)."""
        out = zeros(self.dim)
        for i, w in enumerate(self.weights):
            exp = sum((c * wj for c, wj in zip(coeffs, w)), Fraction(0)) + shift
            out[i, i] = QFraction(qpow(exp))
        return out

    def h_rho_power(self, mult):
        """Diagonal matrix of q^(mult * h_rho), h_rho acting as (rho, wt)."""
        from ..superweight import rho

        r = rho(self.sig)
        signs = [self.sig.sign(j + 1) for j in range(self.sig.d)]
        out = zeros(self.dim)
        for i, w in enumerate(self.weights):
            exp = sum(
                (Fraction(s) * rj * wj for s, rj, wj in zip(signs, r, w)),
                Fraction(0),
            ) * mult
            out[i, i] = QFraction(qpow(exp))
        return out


def vector_rep(sig):
    """The defining (m+n)-dimensional module."""
    d = sig.d
    weights = []
    for i in range(d):
        w = [Fraction(0)] * d
        w[i] = Fraction(1)
        weights.append(tuple(w))
    parities = [sig.parity(i + 1) for i in range(d)]
    e = {}
    f = {}
    for a in range(1, d):
        ma = zeros(d)
        ma[a - 1, a] = ONE
        e[a] = ma
        mf = zeros(d)
        mf[a, a - 1] = ONE
        f[a] = mf
    return RepModule(sig, weights, parities, e, f)


def _h_coeffs(sig, a):
    """Coefficient vector of h_a = (a) E_aa - (a+1) E_{a+1,a+1}."""
    c = [Fraction(0)] * sig.d
    c[a - 1] = Fraction(sig.sign(a))
    c[a] = -Fraction(sig.sign(a + 1))
    return c


def tensor_module(W1, W2):
    """Graded tensor product with the coproduct action of the generators."""
    assert W1.sig == W2.sig
    sig = W1.sig
    weights = []
    parities = []
    for i in range(W1.dim):
        for j in range(W2.dim):
            weights.append(
                tuple(a + b for a, b in zip(W1.weights[i], W2.weights[j]))
            )
            parities.append((W1.parities[i] + W2.parities[j]) % 2)
    slot_pars = [W1.parities, W2.parities]
    e = {}
    f = {}
    for a in range(1, sig.d):
        ha = _h_coeffs(sig, a)
        half = [c / 2 for c in ha]
        neg_half = [-c for c in half]
        p = 1 if a == sig.m else 0
        e[a] = gkron(
            [(W1.cartan(half), 0), (W2.e[a], p)], slot_pars
        ) + gkron([(W1.e[a], p), (W2.cartan(neg_half), 0)], slot_pars)
        f[a] = gkron(
            [(W1.cartan(half), 0), (W2.f[a], p)], slot_pars
        ) + gkron([(W1.f[a], p), (W2.cartan(neg_half), 0)], slot_pars)
    return RepModule(sig, weights, parities, e, f)


class _WeightEchelon:
    """Per-weight echelon bases for building spans of weight vectors."""

    def __init__(self, dim):
        self.dim = dim
        self.spaces = {}  # weight -> list of (pivot, vector)

    def reduce(self, wt, vec):
        vec = list(vec)
        for pivot, base in self.spaces.get(wt, ()):
            c = vec[pivot]
            if c:
                for j in range(self.dim):
                    if base[j]:
                        vec[j] = vec[j] - c * base[j]
        return vec

    def insert(self, wt, vec):
        """Reduce and insert; returns True when vec enlarged the span."""
        vec = self.reduce(wt, vec)
        lead = next((j for j in range(self.dim) if vec[j]), None)
        if lead is None:
            return False
        inv = vec[lead].inverse()
        vec = [x * inv for x in vec]
        self.spaces.setdefault(wt, []).append((lead, vec))
        return True

    def vectors(self):
        for wt in sorted(self.spaces):
            for _, v in self.spaces[wt]:
                yield wt, v


def _apply(mat, vec):
    n = mat.shape[0]
    out = [ZERO] * n
    for j, c in enumerate(vec):
        if not c:
            continue
        for i in range(n):
            if mat[i, j]:
                out[i] = out[i] + mat[i, j] * c
    return out


def highest_weight_vectors(W, gens=None):
    """Vectors killed by all raising generators, grouped by weight.

    gens restricts the raising set (used for subalgebra highest weight
    vectors).  Returns a sorted list of (weight, [vectors]).
    """
    sig = W.sig
    if gens is None:
        gens = range(1, sig.d)
    gens = list(gens)
    by_weight = {}
    for i, wt in enumerate(W.weights):
        by_weight.setdefault(wt, []).append(i)
    out = []
    for wt in sorted(by_weight):
        idxs = by_weight[wt]
        # stack the raising images of the weight-space basis vectors
        cols = []
        for i in idxs:
            col = []
            for a in gens:
                v = [W.e[a][r, i] for r in range(W.dim)]
                col.extend(v)
            cols.append(col)
        A = np.empty((len(cols[0]), len(cols)), dtype=object)
        for j, col in enumerate(cols):
            for i, x in enumerate(col):
                A[i, j] = x
        from .linalg import nullspace

        null = nullspace(A)
        vecs = []
        for coeffs in null:
            v = [ZERO] * W.dim
            for c, i in zip(coeffs, idxs):
                v[i] = c
            vecs.append(v)
        if vecs:
            out.append((wt, vecs))
    return out


def submodule(W, start_vectors):
    """The span generated from start_vectors under all lowering generators.

    start_vectors must be weight vectors.  Returns (module, basis) where
    basis is the list of spanning vectors in W coordinates.
    """
    sig = W.sig
    ech = _WeightEchelon(W.dim)

    def weight_of(vec):
        wts = {W.weights[i] for i, c in enumerate(vec) if c}
        assert len(wts) == 1, "not a weight vector"
        return next(iter(wts))

    queue = []
    for v in start_vectors:
        wt = weight_of(v)
        if ech.insert(wt, v):
            queue.append((wt, ech.spaces[wt][-1][1]))
    while queue:
        wt, v = queue.pop()
        for a in range(1, sig.d):
            img = _apply(W.f[a], v)
            if not any(img):
                continue
            wt2 = weight_of(img)
            if ech.insert(wt2, img):
                queue.append((wt2, ech.spaces[wt2][-1][1]))
    basis = []
    weights = []
    for wt, v in ech.vectors():
        basis.append(v)
        weights.append(wt)
    parities = [_parity_of_weight(sig, wt) for wt in weights]
    # express generator images in the new basis
    by_weight = {}
    for j, wt in enumerate(weights):
        by_weight.setdefault(wt, []).append(j)
    dim = len(basis)
    e = {a: zeros(dim) for a in range(1, sig.d)}
    f = {a: zeros(dim) for a in range(1, sig.d)}
    for j, v in enumerate(basis):
        for a in range(1, sig.d):
            for gens, target in ((W.e[a], e[a]), (W.f[a], f[a])):
                img = _apply(gens, v)
                if not any(img):
                    continue
                wt2 = weight_of(img)
                idxs = by_weight.get(wt2)
                if idxs is None:
                    raise NotRealized("span not closed under the action")
                coords = solve_coords([basis[i] for i in idxs], img)
                for c, i in zip(coords, idxs):
                    target[i, j] = c
    mod = RepModule(sig, weights, parities, e, f)
    return mod, basis


def _parity_of_weight(sig, wt):
    """In a tensor power of the vector module the weight fixes the parity."""
    odd = sum(wt[sig.m :], Fraction(0))
    assert odd.denominator == 1
    return int(odd) % 2


def module_from_highest_weight(k_max, sig, lam):
    """Realize V(lam) as a cyclic submodule of a tensor power V^(x)k, k <= k_max.

    Returns (module, power k).  Raises NotRealized when lam never appears as
    a highest weight, MultiplicityAmbiguous when its multiplicity exceeds 1.
    """
    target = tuple(Fraction(c) for c in lam.comps)
    W = None
    for k in range(1, k_max + 1):
        W = vector_rep(sig) if W is None else tensor_module(W, vector_rep(sig))
        for wt, vecs in highest_weight_vectors(W):
            if wt == target:
                if len(vecs) > 1:
                    raise MultiplicityAmbiguous(
                        "weight %s occurs %d times at power %d"
                        % (lam, len(vecs), k)
                    )
                mod, _ = submodule(W, [vecs[0]])
                return mod, k
    raise NotRealized("%s not found in tensor powers up to %d" % (lam, k_max))


def _lowering_span(W, start, gens):
    """Echelonized basis of the cyclic span of a weight vector under the
    lowering generators in gens."""
    ech = _WeightEchelon(W.dim)

    def weight_of(vec):
        wts = {W.weights[i] for i, c in enumerate(vec) if c}
        assert len(wts) == 1, "not a weight vector"
        return next(iter(wts))

    wt = weight_of(start)
    ech.insert(wt, start)
    queue = [(wt, ech.spaces[wt][-1][1])]
    while queue:
        wt, v = queue.pop()
        for a in gens:
            img = _apply(W.f[a], v)
            if not any(img):
                continue
            wt2 = weight_of(img)
            if ech.insert(wt2, img):
                queue.append((wt2, ech.spaces[wt2][-1][1]))
    return [v for _, v in ech.vectors()]


def subalgebra_components(W):
    """Decomposition of W into its subalgebra components.

    Each component is the cyclic span of a subalgebra highest weight
    vector under the subalgebra lowering generators.  Returns a list of
    (lam0, basis) pairs, lam0 the first d-1 weight coordinates of the
    component's highest weight.  Raises NotRealized when the spans fail to
    exhaust W (restriction not semisimple, or a span not closed).
    """
    sig = W.sig
    gens = list(range(1, sig.d - 1))
    comps = []
    for wt, vecs in highest_weight_vectors(W, gens=gens):
        for v in vecs:
            comps.append((wt[: sig.d - 1], _lowering_span(W, v, gens)))
    joint = _WeightEchelon(W.dim)
    total = 0
    for _, basis in comps:
        for v in basis:
            wts = {W.weights[i] for i, c in enumerate(v) if c}
            if not joint.insert(next(iter(wts)), v):
                raise NotRealized("subalgebra components are not independent")
            total += 1
    if total != W.dim:
        raise NotRealized("subalgebra restriction is not semisimple")
    return comps


def subalgebra_highest_vector(W, lam0, e_last):
    """The gl(m|n-1) highest weight vector of weight (lam0, e_last) in W.

    Returns its index-coefficient list, raising NotRealized or
    MultiplicityAmbiguous as appropriate.
    """
    sig = W.sig
    target = tuple(Fraction(c) for c in lam0) + (Fraction(e_last),)
    hits = [
        vecs
        for wt, vecs in highest_weight_vectors(W, gens=range(1, sig.d - 1))
        if wt == target
    ]
    if not hits or not hits[0]:
        raise NotRealized("no subalgebra highest weight vector for %s" % (lam0,))
    vecs = hits[0]
    if len(vecs) > 1:
        raise MultiplicityAmbiguous(
            "subalgebra weight %s has multiplicity %d" % (lam0, len(vecs))
        )
    return vecs[0]
