"""Weights, gradings and characteristic roots for gl(m|n).

Basis indices run 1..m+n; indices 1..m are even and m+1..m+n are odd.
The invariant bilinear form is graded: (eps_i, eps_j) = sign(i) delta_ij
with sign +1 on the even block and -1 on the odd block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    DegenerateRoots,
    IndexOutOfRange,
    NonIntegralWeight,
    SignatureMismatch,
)
from .exactq import QFraction, qpow, qnum

__all__ = [
    "Signature",
    "Weight",
    "RootSet",
    "parity",
    "sign",
    "bilinear_form",
    "rho",
    "rho_even_odd",
    "char_roots",
    "subalgebra_roots",
    "deformed_root",
    "check_generic",
    "is_typical",
]


@dataclass(frozen=True)
class Signature:
    """The pair (m, n) of even and odd basis dimensions, both >= 1."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("signature needs m >= 1 and n >= 1")

    @property
    def d(self):
        return self.m + self.n

    def parity(self, i):
        """0 for even indices 1..m, 1 for odd indices m+1..m+n."""
        if not 1 <= i <= self.d:
            raise IndexOutOfRange("index %d outside 1..%d" % (i, self.d))
        return 0 if i <= self.m else 1

    def sign(self, i):
        """(i) = (-1)^[i], the grading sign of basis index i."""
        return 1 if self.parity(i) == 0 else -1

    def sub(self):
        """Signature of the gl(m|n-1) subalgebra (n must exceed 1)."""
        if self.n < 2:
            raise ValueError("gl(%d|%d) has no gl(m|n-1) subalgebra of the "
                             "same kind" % (self.m, self.n))
        return Signature(self.m, self.n - 1)

    def __str__(self):
        return "gl(%d|%d)" % (self.m, self.n)


def parity(sig, i):
    return sig.parity(i)


def sign(sig, i):
    return sig.sign(i)


@dataclass(frozen=True)
class Weight:
    """An integral gl(m|n) weight, components in the eps basis."""

    sig: Signature
    comps: tuple

    def __post_init__(self):
        if len(self.comps) != self.sig.d:
            raise ValueError(
                "expected %d components, got %d" % (self.sig.d, len(self.comps))
            )
        if not all(isinstance(c, int) for c in self.comps):
            raise NonIntegralWeight("weight components must be integers")

    def __getitem__(self, i):
        """Component at 1-based index i."""
        if not 1 <= i <= self.sig.d:
            raise IndexOutOfRange("index %d outside 1..%d" % (i, self.sig.d))
        return self.comps[i - 1]

    @property
    def even(self):
        return self.comps[: self.sig.m]

    @property
    def odd(self):
        return self.comps[self.sig.m :]

    def is_dominant(self):
        """Weakly decreasing within each graded block (no cross constraint)."""
        return all(a >= b for a, b in zip(self.even, self.even[1:])) and all(
            a >= b for a, b in zip(self.odd, self.odd[1:])
        )

    def shifted(self, i, delta):
        """The weight with component i changed by delta."""
        c = list(self.comps)
        c[i - 1] += delta
        return Weight(self.sig, tuple(c))

    @classmethod
    def parse(cls, sig, text):
        """Parse 'a,b|c' into a Weight of the given signature."""
        even_s, _, odd_s = text.partition("|")
        try:
            even = tuple(int(x) for x in even_s.split(",")) if even_s else ()
            odd = tuple(int(x) for x in odd_s.split(",")) if odd_s else ()
        except ValueError:
            raise NonIntegralWeight("cannot parse weight %r" % text)
        w = cls(sig, even + odd)
        return w

    def __str__(self):
        return "%s|%s" % (
            ",".join(str(c) for c in self.even),
            ",".join(str(c) for c in self.odd),
        )


def _check_same_sig(a, b):
    if a.sig != b.sig:
        raise SignatureMismatch("%s vs %s" % (a.sig, b.sig))


def bilinear_form(lam, mu):
    """Graded form (lam, mu) = sum_i sign(i) lam_i mu_i, exact Fraction."""
    _check_same_sig(lam, mu)
    sig = lam.sig
    return sum(
        (Fraction(sig.sign(i)) * lam[i] * mu[i] for i in range(1, sig.d + 1)),
        Fraction(0),
    )


def _form_with(sig, comps, i):
    """(w, eps_i) for a component tuple of Fractions."""
    return Fraction(sig.sign(i)) * comps[i - 1]


def rho(sig):
    """Half-sum of even positive roots minus half-sum of odd positive roots.

    Returned as a tuple of Fractions in the eps basis; components are
    (m - n - 2i + 1)/2 on the even block and (m + n - 2u + 1)/2 on the odd
    block.  The closed form is asserted against direct enumeration of the
    positive roots.
    """
    r0, r1 = rho_even_odd(sig)
    out = tuple(a - b for a, b in zip(r0, r1))
    m, n = sig.m, sig.n
    closed = tuple(
        Fraction(m - n - 2 * i + 1, 2) for i in range(1, m + 1)
    ) + tuple(Fraction(m + n - 2 * u + 1, 2) for u in range(1, n + 1))
    assert out == closed
    return out


def rho_even_odd(sig):
    """(rho_even, rho_odd): half-sums over even and odd positive roots.

    Positive roots are eps_a - eps_b for a < b; the root is odd exactly
    when a, b straddle the grading boundary.
    """
    d = sig.d
    r0 = [Fraction(0)] * d
    r1 = [Fraction(0)] * d
    for a in range(1, d + 1):
        for b in range(a + 1, d + 1):
            target = r1 if sig.parity(a) != sig.parity(b) else r0
            target[a - 1] += Fraction(1, 2)
            target[b - 1] -= Fraction(1, 2)
    return tuple(r0), tuple(r1)


def char_roots(lam, variant):
    """Classical characteristic root exponents of the weight lam.

    variant 'adjoint': alpha_i = lam_i + 1 - i (even),
                       alpha_u = u - m - 1 - lam_u (odd, u = 1..n);
    variant 'dual':    alpha_i = lam_i + m - n - i,
                       alpha_u = u - n - lam_u.
    Returns a tuple of ints indexed by global position 1..m+n.
    """
    sig = lam.sig
    m, n = sig.m, sig.n
    if variant == "adjoint":
        ev = tuple(lam[i] + 1 - i for i in range(1, m + 1))
        od = tuple(u - m - 1 - lam[m + u] for u in range(1, n + 1))
    elif variant == "dual":
        ev = tuple(lam[i] + m - n - i for i in range(1, m + 1))
        od = tuple(u - n - lam[m + u] for u in range(1, n + 1))
    else:
        raise ValueError("variant must be 'adjoint' or 'dual'")
    return ev + od


def subalgebra_roots(lam0, variant, parent_sig):
    """Characteristic roots of a gl(m|n-1) weight, in the parent's labels.

    lam0 is a Weight of parent_sig.sub() when n - 1 >= 1, or a bare tuple
    of m integers when n - 1 = 0 (plain gl(m)).  The adjoint exponents do
    not depend on n, the dual ones use n - 1 in place of n.
    """
    m, n = parent_sig.m, parent_sig.n
    comps = lam0.comps if isinstance(lam0, Weight) else tuple(lam0)
    if len(comps) != m + n - 1:
        raise SignatureMismatch(
            "subalgebra weight needs %d components" % (m + n - 1)
        )
    if variant == "adjoint":
        ev = tuple(comps[i - 1] + 1 - i for i in range(1, m + 1))
        od = tuple(u - m - 1 - comps[m + u - 1] for u in range(1, n))
    elif variant == "dual":
        ev = tuple(comps[i - 1] + m - (n - 1) - i for i in range(1, m + 1))
        od = tuple(u - (n - 1) - comps[m + u - 1] for u in range(1, n))
    else:
        raise ValueError("variant must be 'adjoint' or 'dual'")
    return ev + od


@lru_cache(maxsize=None)
def deformed_root(alpha, variant):
    """q-deformation of a classical root exponent alpha.

    adjoint: (1 - q^(-2 alpha))/(q - q^-1) = q^-alpha [alpha]_q,
    dual: the same expression; the variants differ only through which
    exponent is fed in, so a single formula serves both.
    """
    if variant not in ("adjoint", "dual"):
        raise ValueError("variant must be 'adjoint' or 'dual'")
    return QFraction(qpow(-alpha) * qnum(alpha))


def is_typical(lam):
    """Whether (lam + rho, eps_i - eps_u) != 0 for every even i, odd u.

    Atypical weights label modules whose irreducible character degenerates;
    several closed forms hold only on the typical (Zariski-dense) set.
    """
    sig = lam.sig
    r = rho(sig)
    nu = [lam[i] + r[i - 1] for i in range(1, sig.d + 1)]
    # graded form: (nu, eps_i - eps_u) = nu_i + nu_u for even i, odd u
    return all(
        nu[i - 1] + nu[u - 1] != 0
        for i in range(1, sig.m + 1)
        for u in range(sig.m + 1, sig.d + 1)
    )


def check_generic(alphas, label="characteristic roots"):
    """Raise DegenerateRoots unless all exponents are pairwise distinct."""
    seen = {}
    for pos, a in enumerate(alphas, start=1):
        if a in seen:
            raise DegenerateRoots(
                "%s coincide at positions %d and %d (value %s)"
                % (label, seen[a], pos, a)
            )
        seen[a] = pos


@dataclass(frozen=True)
class RootSet:
    """Characteristic data of a weight: classical and deformed roots."""

    weight: Weight
    variant: str
    alphas: tuple
    deformed: tuple

    @classmethod
    def of(cls, lam, variant):
        alphas = char_roots(lam, variant)
        return cls(
            weight=lam,
            variant=variant,
            alphas=alphas,
            deformed=tuple(deformed_root(a, variant) for a in alphas),
        )

    def is_generic(self):
        return len(set(self.alphas)) == len(self.alphas)

    def require_generic(self):
        check_generic(self.alphas, "%s roots of %s" % (self.variant, self.weight))

    def to_json(self):
        return {
            "weight": str(self.weight),
            "signature": [self.weight.sig.m, self.weight.sig.n],
            "variant": self.variant,
            "classical": list(self.alphas),
            "deformed": [
                {"value": f.to_json(), "str": str(f)} for f in self.deformed
            ],
            "generic": self.is_generic(),
        }
