"""Symbolic algebra elements built from simple generators and Cartan
exponentials, with antipode rewriting.

An expression is a sum of terms, each a field coefficient times an ordered
product of atoms.  Atoms are either a simple generator e_a/f_a or a diagonal
exponential q^(sum_j c_j E_jj + shift).  The antipode and its inverse act by
reversing products with Koszul signs and conjugating generators by
q^(-+ h_a/2); they never touch matrices directly, so an expression can be
rewritten first and evaluated on any module afterwards.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..exactq import ONE, QFraction, Q_MINUS_QINV, qpow
from .linalg import identity, matmul, zeros

__all__ = ["GenAtom", "CartanAtom", "Expr", "eij_expr", "etilde_expr"]


class GenAtom:
    """A simple raising or lowering generator."""

    __slots__ = ("kind", "a", "parity")

    def __init__(self, kind, a, parity):
        self.kind = kind  # 'e' or 'f'
        self.a = a
        self.parity = parity

    def key(self):
        return ("g", self.kind, self.a)


class CartanAtom:
    """The diagonal element q^(sum_j coeffs_j E_jj + shift)."""

    __slots__ = ("coeffs", "shift", "parity")

    def __init__(self, coeffs, shift=Fraction(0)):
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        self.shift = Fraction(shift)
        self.parity = 0

    def key(self):
        return ("c", self.coeffs, self.shift)


def _h_coeffs(sig, a):
    c = [Fraction(0)] * sig.d
    c[a - 1] = Fraction(sig.sign(a))
    c[a] = -Fraction(sig.sign(a + 1))
    return tuple(c)


class Expr:
    """A sum of coefficient-weighted ordered products of atoms."""

    def __init__(self, terms):
        self.terms = tuple(terms)

    @classmethod
    def gen(cls, sig, kind, a):
        parity = 1 if a == sig.m else 0
        return cls([(ONE, (GenAtom(kind, a, parity),))])

    @classmethod
    def cartan(cls, coeffs, shift=Fraction(0)):
        return cls([(ONE, (CartanAtom(coeffs, shift),))])

    def scale(self, c):
        return Expr([(coeff * c, atoms) for coeff, atoms in self.terms])

    def __add__(self, other):
        return Expr(self.terms + other.terms)

    def __sub__(self, other):
        return self + other.scale(QFraction(-1))

    def __mul__(self, other):
        out = []
        for c1, a1 in self.terms:
            for c2, a2 in other.terms:
                out.append((c1 * c2, a1 + a2))
        return Expr(out)

    def parity(self):
        """Grading of a homogeneous expression."""
        ps = {sum(a.parity for a in atoms) % 2 for _, atoms in self.terms}
        assert len(ps) <= 1, "expression is not homogeneous"
        return ps.pop() if ps else 0

    def antipode(self, sig, power=1):
        """Apply S (power=+1) or S^-1 (power=-1) by term rewriting."""
        assert power in (1, -1)
        out = []
        for coeff, atoms in self.terms:
            # Koszul sign for reversing the ordered product
            pars = [a.parity for a in atoms]
            swaps = sum(
                pars[i] * pars[j]
                for i in range(len(pars))
                for j in range(i + 1, len(pars))
            )
            c = coeff if swaps % 2 == 0 else -coeff
            new_atoms = []
            for atom in reversed(atoms):
                if isinstance(atom, CartanAtom):
                    # the scalar part q^shift is central and fixed by S
                    new_atoms.append(
                        CartanAtom([-x for x in atom.coeffs], atom.shift)
                    )
                else:
                    h = _h_coeffs(sig, atom.a)
                    half = tuple(x / 2 for x in h)
                    neg = tuple(-x for x in half)
                    first, last = (neg, half) if power == 1 else (half, neg)
                    c = -c
                    new_atoms.extend(
                        [CartanAtom(first), atom, CartanAtom(last)]
                    )
            out.append((c, tuple(new_atoms)))
        return Expr(out)

    def evaluate(self, W):
        """The matrix of the expression on a module."""
        total = zeros(W.dim)
        for coeff, atoms in self.terms:
            acc = None
            for atom in atoms:
                if isinstance(atom, CartanAtom):
                    m = W.cartan(atom.coeffs, atom.shift)
                else:
                    m = (W.e if atom.kind == "e" else W.f)[atom.a]
                acc = m if acc is None else matmul(acc, m)
            if acc is None:
                acc = identity(W.dim)
            for i in range(W.dim):
                for j in range(W.dim):
                    if acc[i, j]:
                        total[i, j] = total[i, j] + coeff * acc[i, j]
        return total


@lru_cache(maxsize=None)
def _eij_cached(m, n, i, j):
    from ..superweight import Signature

    sig = Signature(m, n)
    if abs(i - j) == 1:
        kind = "e" if i < j else "f"
        return Expr.gen(sig, kind, min(i, j))
    # peel off the generator adjacent to j
    k = j - 1 if i < j else j + 1
    Eik = _eij_cached(m, n, i, k)
    Ekj = _eij_cached(m, n, k, j)
    return Eik * Ekj - (Ekj * Eik).scale(QFraction(qpow(-sig.sign(k))))


def eij_expr(sig, i, j):
    """The non-simple generator E_ij = E_ik E_kj - q^(-(k)) E_kj E_ik."""
    assert i != j
    return _eij_cached(sig.m, sig.n, i, j)


@lru_cache(maxsize=None)
def _etilde_cached(m, n, i, j):
    from ..superweight import Signature

    sig = Signature(m, n)
    d = sig.d
    coeffs = [Fraction(0)] * d
    if i == j:
        coeffs[i - 1] = Fraction(sig.sign(i))
        return Expr.cartan(coeffs)
    coeffs[i - 1] = Fraction(sig.sign(i), 2)
    coeffs[j - 1] = Fraction(sig.sign(j), 2)
    # the parity label and half-shift both come from the row index
    shift = -Fraction(sig.sign(i), 2)
    sgn = 1 if sig.parity(i) == 0 else -1
    head = Expr.cartan(coeffs, shift)
    return (head * _eij_cached(m, n, i, j)).scale(Q_MINUS_QINV * sgn)


def etilde_expr(sig, i, j):
    """The L-operator entry generator: for i < j (raising)
    (q - q^-1)(-1)^[i] q^((1/2)((i)E_ii + (j)E_jj - (i))) E_ij,
    for i > j (lowering) the same with (j) <-> (i) labels swapped, and
    q^((i)E_ii) on the diagonal.
    """
    return _etilde_cached(sig.m, sig.n, i, j)
