"""Elements of the cyclotomic field Q(zeta_l).

An element is stored as its unique representative of degree < phi(l) in
Q[x]/(Phi_l(x)), with ``x`` standing for a fixed primitive l-th root of unity.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from ..errors import DivisionByZero, OrderMismatch
from .poly import Poly, poly_xgcd


@lru_cache(maxsize=None)
def cyclotomic_poly(l: int) -> Poly:
    """Phi_l with Fraction coefficients."""
    if l < 1:
        raise ValueError("cyclotomic order must be positive")
    p = Poly([Fraction(-1)] + [Fraction(0)] * (l - 1) + [Fraction(1)])
    for d in range(1, l):
        if l % d == 0:
            p = p // cyclotomic_poly(d)
    return p


def euler_phi(l: int) -> int:
    return cyclotomic_poly(l).degree


class Cyclotomic:
    __slots__ = ("l", "coeffs")

    def __init__(self, l: int, coeffs: Iterable = ()):
        # coeffs are trusted to be reduced; use cyclo_normalize otherwise
        d = euler_phi(l)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > d:
            raise ValueError("unreduced coefficient vector; use cyclo_normalize")
        self.l = l
        self.coeffs = tuple(cs + [Fraction(0)] * (d - len(cs)))

    @classmethod
    def zeta(cls, l: int, power: int = 1) -> Cyclotomic:
        return cyclo_normalize(Poly([0] * (power % l) + [1]), l)

    @classmethod
    def const(cls, l: int, c) -> Cyclotomic:
        return cls(l, [c])

    def poly(self) -> Poly:
        return Poly(self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def _coerce(self, other) -> Cyclotomic | None:
        if isinstance(other, Cyclotomic):
            if other.l != self.l:
                raise OrderMismatch(f"cannot mix Q(zeta_{self.l}) and Q(zeta_{other.l})")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.l, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.l, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.l, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            c = o.coeffs[0]
            return Cyclotomic(self.l, [a * c for a in self.coeffs])
        return cyclo_normalize(self.poly() * o.poly(), self.l)

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        if self == 0:
            raise DivisionByZero("inverse of zero cyclotomic number")
        g, s, _ = poly_xgcd(self.poly(), cyclotomic_poly(self.l))
        # Phi_l is irreducible so g = 1
        return cyclo_normalize(s, self.l)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic(self.l, [1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.l == other.l and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.l, self.coeffs))

    def __repr__(self):
        return f"Cyclotomic({self.l}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            z = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if z and c == 1:
                terms.append(z)
            elif z and c == -1:
                terms.append("-" + z)
            else:
                terms.append(str(c) + (f"*{z}" if z else ""))
        return " + ".join(terms) if terms else "0"


def cyclo_normalize(raw, l: int) -> Cyclotomic:
    """Reduce a polynomial in x (zeta_l) over Q modulo Phi_l.

    ``raw`` may be a ``Poly`` or a coefficient list (low degree first).
    """
    if l < 1:
        raise ValueError("l must be positive")
    p = raw if isinstance(raw, Poly) else Poly(Fraction(c) for c in raw)
    r = p % cyclotomic_poly(l)
    return Cyclotomic(l, r.coeffs)
