"""Exact arithmetic over the field of rational functions in q^(1/2).

Elements are quotients of Laurent polynomials in the half-integer power
q^(1/2) with rational coefficients.  Exponents are stored doubled, so the
monomial q^(k/2) lives at integer key k and every object is hashable and
exactly comparable.  Monomials are units of the Laurent ring, which keeps
most denominators equal to 1 and makes gcd reduction cheap in practice.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import PoleAtOne, PoleAtPoint

__all__ = [
    "HalfLaurent",
    "QFraction",
    "qpow",
    "qnum",
    "qnum_frac",
    "ZERO",
    "ONE",
    "Q_MINUS_QINV",
]


def _as_fraction(c):
    """Validate a coefficient.  Plain ints are kept as ints: integer
    arithmetic is much faster than Fraction arithmetic and the two compare
    and hash identically, so mixed representations stay consistent."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError("coefficients must be int or Fraction, got %r" % (c,))


def _coeff_div(a, b):
    """Exact coefficient quotient, demoted to int when integral."""
    r = Fraction(a) / b
    return r.numerator if r.denominator == 1 else r


class HalfLaurent:
    """Laurent polynomial in q^(1/2) over the rationals.

    Terms map doubled exponents (int) to nonzero Fraction coefficients;
    the empty map is zero.  Instances are immutable.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for k, c in (terms.items() if isinstance(terms, dict) else terms):
                c = _as_fraction(c)
                if c:
                    c0 = t.get(k)
                    c = c if c0 is None else c0 + c
                    if c:
                        t[k] = c
                    elif k in t:
                        del t[k]
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t):
        # internal: t already a clean dict
        p = cls.__new__(cls)
        p._t = t
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        c = _as_fraction(c)
        return cls._raw({0: c} if c else {})

    def items(self):
        return self._t.items()

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if isinstance(other, HalfLaurent):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self == HalfLaurent.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __neg__(self):
        return HalfLaurent._raw({k: -c for k, c in self._t.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HalfLaurent.const(other)
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        if not self._t:
            return other
        if not other._t:
            return self
        t = dict(self._t)
        for k, c in other._t.items():
            c0 = t.get(k)
            if c0 is None:
                t[k] = c
            else:
                c0 = c0 + c
                if c0:
                    t[k] = c0
                else:
                    del t[k]
        return HalfLaurent._raw(t)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HalfLaurent.const(other)
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return HalfLaurent._raw({})
            return HalfLaurent._raw({k: v * c for k, v in self._t.items()})
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        t = {}
        for k1, c1 in self._t.items():
            for k2, c2 in other._t.items():
                k = k1 + k2
                c = c1 * c2
                c0 = t.get(k)
                if c0 is None:
                    t[k] = c
                else:
                    c0 = c0 + c
                    if c0:
                        t[k] = c0
                    else:
                        del t[k]
        return HalfLaurent._raw(t)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = HalfLaurent.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure queries ------------------------------------------------

    def min_dexp(self):
        return min(self._t)

    def max_dexp(self):
        return max(self._t)

    def is_monomial(self):
        return len(self._t) == 1

    def shift(self, dexp):
        """Multiply by the monomial q^(dexp/2)."""
        if not self._t:
            return self
        return HalfLaurent._raw({k + dexp: c for k, c in self._t.items()})

    # -- evaluation -------------------------------------------------------

    def eval_numeric(self, q0):
        if q0 <= 0:
            raise ValueError("q0 must be a positive real number")
        y = math.sqrt(q0)
        return math.fsum(float(c) * y ** k for k, c in self._t.items())

    def at_one(self):
        """Exact value at q = 1 (every monomial evaluates to 1)."""
        return sum(self._t.values(), Fraction(0))

    # -- printing ---------------------------------------------------------

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for k in sorted(self._t):
            c = self._t[k]
            neg = c < 0
            c = -c if neg else c
            if k == 0:
                body = str(c)
            else:
                e = str(k // 2) if k % 2 == 0 else "%d/2" % k
                body = "q^%s" % e if c == 1 else "%s*q^%s" % (c, e)
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return "HalfLaurent(%s)" % dict(sorted(self._t.items()))


@lru_cache(maxsize=None)
def qpow(x):
    """The monomial q^x for x an integer or half-integer Fraction."""
    if isinstance(x, int):
        return HalfLaurent._raw({2 * x: 1})
    x2 = _as_fraction(_as_fraction(x) * 2)
    if isinstance(x2, Fraction):
        raise ValueError("exponent must be a multiple of 1/2")
    return HalfLaurent._raw({x2: 1})


@lru_cache(maxsize=None)
def qnum(x):
    """Symmetric q-number [x]_q = (q^x - q^-x)/(q - q^-1) for integer x."""
    if not isinstance(x, int):
        raise ValueError("qnum takes an integer argument")
    if x == 0:
        return HalfLaurent._raw({})
    s = 1 if x > 0 else -1
    n = abs(x)
    return HalfLaurent._raw({s * 2 * (n - 1 - 2 * j): s for j in range(n)})


def qnum_frac(x):
    """[x]_q as a QFraction, valid for any half-integer x.

    For non-integer x the result is a genuine rational function
    (q^x - q^-x)/(q - q^-1).
    """
    x2 = _as_fraction(x) * 2
    if x2.denominator == 1 and int(x2) % 2 == 0:
        return QFraction(qnum(int(x2) // 2))
    return QFraction(qpow(x) - qpow(-x), qpow(1) - qpow(-1))


# -- univariate gcd over Q, on shifted (nonnegative) exponents -------------


def _poly_gcd(a, b):
    """Gcd of two nonzero HalfLaurents up to a unit (monomial times scalar).

    The result is normalized with lowest doubled exponent 0 and lowest
    coefficient 1.
    """
    # shift both so exponents start at 0; monomial factors are units
    pa = {k - a.min_dexp(): c for k, c in a.items()}
    pb = {k - b.min_dexp(): c for k, c in b.items()}
    while pb:
        pa = _poly_rem(pa, pb)
        pa, pb = pb, pa
    low = min(pa)
    lc = pa[low]
    return HalfLaurent._raw({k - low: _coeff_div(c, lc) for k, c in pa.items()})


def _poly_rem(pa, pb):
    """Remainder of pa by pb, dicts with nonnegative doubled exponents."""
    pa = dict(pa)
    db = max(pb)
    lb = pb[db]
    while pa:
        da = max(pa)
        if da < db:
            break
        f = _coeff_div(pa[da], lb)
        sh = da - db
        for k, c in pb.items():
            kk = k + sh
            c0 = pa.get(kk)
            c0 = -f * c if c0 is None else c0 - f * c
            if c0:
                pa[kk] = c0
            elif kk in pa:
                del pa[kk]
    return pa


class QFraction:
    """Canonical quotient of two HalfLaurent polynomials.

    Normal form: the denominator has lowest doubled exponent 0 and lowest
    coefficient 1, and shares no non-unit factor with the numerator, so
    equality of values coincides with structural equality.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = HalfLaurent.const(num)
        if den is None:
            den = HalfLaurent.const(1)
        elif isinstance(den, (int, Fraction)):
            den = HalfLaurent.const(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = HalfLaurent.const(1)
        elif den.is_monomial():
            k, c = next(iter(den.items()))
            if k or c != 1:
                num = HalfLaurent._raw(
                    {kk - k: _coeff_div(cc, c) for kk, cc in num.items()}
                )
                den = HalfLaurent.const(1)
        else:
            g = _poly_gcd(num, den)
            if g.is_monomial():
                # coprime; only unit content to strip from den
                pass
            else:
                num = _exact_div(num, g)
                den = _exact_div(den, g)
            if den.is_monomial():
                k, c = next(iter(den.items()))
                num = HalfLaurent._raw(
                    {kk - k: _coeff_div(cc, c) for kk, cc in num.items()}
                )
                den = HalfLaurent.const(1)
            else:
                low = den.min_dexp()
                lc = next(c for k, c in den.items() if k == low)
                den = HalfLaurent._raw(
                    {k - low: _coeff_div(c, lc) for k, c in den.items()}
                )
                num = HalfLaurent._raw(
                    {k - low: _coeff_div(c, lc) for k, c in num.items()}
                )
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _coerce(cls, x):
        if isinstance(x, QFraction):
            return x
        if isinstance(x, (int, Fraction, HalfLaurent)):
            return cls(x)
        return None

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = QFraction._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        out = QFraction.__new__(QFraction)
        out.num = -self.num
        out.den = self.den
        out._hash = None
        return out

    def __add__(self, other):
        other = QFraction._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return QFraction(self.num + other.num, self.den)
        return QFraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = QFraction._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = QFraction._coerce(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        return QFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QFraction._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = QFraction._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return QFraction(self.den, self.num)

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("exponent must be an integer")
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- evaluation -------------------------------------------------------

    def eval_numeric(self, q0):
        d = self.den.eval_numeric(q0)
        if d == 0.0:
            raise PoleAtPoint("denominator vanishes at q0=%r" % (q0,))
        return self.num.eval_numeric(q0) / d

    def limit_q1(self):
        """Exact classical limit q -> 1, as a Fraction."""
        d = self.den.at_one()
        if not d:
            raise PoleAtOne("no finite limit at q=1 for %s" % self)
        return self.num.at_one() / d

    # -- serialization ----------------------------------------------------

    def to_json(self):
        return {
            "num": [[k, str(c)] for k, c in sorted(self.num.items())],
            "den": [[k, str(c)] for k, c in sorted(self.den.items())],
        }

    @classmethod
    def from_json(cls, obj):
        num = HalfLaurent([(int(k), Fraction(c)) for k, c in obj["num"]])
        den = HalfLaurent([(int(k), Fraction(c)) for k, c in obj["den"]])
        return cls(num, den)

    def __str__(self):
        if self.den == HalfLaurent.const(1):
            return str(self.num)
        num = str(self.num)
        if len(self.num._t) > 1:
            num = "(%s)" % num
        return "%s/(%s)" % (num, self.den)

    def __repr__(self):
        return "QFraction(%s)" % self


def _exact_div(a, g):
    """Exact division of a by g in the Laurent ring (g must divide a)."""
    sh_a = a.min_dexp()
    sh_g = g.min_dexp()
    pa = {k - sh_a: c for k, c in a.items()}
    pg = {k - sh_g: c for k, c in g.items()}
    out = {}
    dg = max(pg)
    lg = pg[dg]
    while pa:
        da = max(pa)
        if da < dg:
            raise ArithmeticError("inexact polynomial division")
        f = _coeff_div(pa[da], lg)
        sh = da - dg
        out[sh] = f
        for k, c in pg.items():
            kk = k + sh
            c0 = pa.get(kk)
            c0 = -f * c if c0 is None else c0 - f * c
            if c0:
                pa[kk] = c0
            elif kk in pa:
                del pa[kk]
    return HalfLaurent._raw({k + sh_a - sh_g: c for k, c in out.items()})


ZERO = QFraction(0)
ONE = QFraction(1)
Q_MINUS_QINV = QFraction(qpow(1) - qpow(-1))


# -- parsing of the printed form ------------------------------------------


def parse_half_laurent(s):
    """Parse the output of HalfLaurent.__str__."""
    s = s.strip()
    if s == "0":
        return HalfLaurent._raw({})
    terms = []
    # normalize separators, then split on signs
    s = s.replace(" - ", " +-").replace(" + ", " +")
    for piece in s.split(" +"):
        piece = piece.strip()
        if not piece:
            continue
        sign = 1
        if piece.startswith("-"):
            sign = -1
            piece = piece[1:]
        if "q^" in piece:
            if "*" in piece:
                cs, es = piece.split("*q^")
                coeff = Fraction(cs)
            else:
                coeff = Fraction(1)
                es = piece[2:]
            dexp = int(Fraction(es) * 2)
        else:
            coeff = Fraction(piece)
            dexp = 0
        terms.append((dexp, sign * coeff))
    return HalfLaurent(terms)


def parse_qfraction(s):
    """Parse the output of QFraction.__str__."""
    s = s.strip()
    if "/(" in s:
        # split at the last "/(" so numerators like (..)/(..) work
        i = s.rindex("/(")
        num_s, den_s = s[:i], s[i + 2 : -1]
        if num_s.startswith("(") and num_s.endswith(")"):
            num_s = num_s[1:-1]
        return QFraction(parse_half_laurent(num_s), parse_half_laurent(den_s))
    return QFraction(parse_half_laurent(s))
