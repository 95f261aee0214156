"""Dense univariate polynomials over an exact field.

Coefficients are stored low degree first.  Any coefficient type supporting
``+ - * /`` and comparison with ``0`` works (ints, ``Fraction``, cyclotomic
numbers, rational functions in ``q``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DivisionByZero


def _is_zero(c) -> bool:
    return c == 0


def exact_div(a, b):
    """a / b without ever producing a float."""
    if isinstance(b, int):
        if b == 0:
            raise DivisionByZero("division by zero")
        b = Fraction(b)
    if isinstance(a, int) and isinstance(b, Fraction):
        return Fraction(a) / b
    return a / b


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    # constructors
    @classmethod
    def const(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable, one=1) -> Poly:
        p = cls((one,))
        for r in roots:
            p = p * cls((-r, one))
        return p

    # basic data
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            if len(self.coeffs) != len(other.coeffs):
                return False
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        return self == Poly.const(other)

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            else:
                terms.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(terms)

    # arithmetic
    def _coerce(self, other) -> Poly:
        return other if isinstance(other, Poly) else Poly.const(other)

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self.coeff(k) + o.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        out = Poly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> Poly:
        return Poly(a * c for a in self.coeffs)

    def divmod(self, other: Poly):
        o = self._coerce(other)
        if o.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        if len(rem) - 1 < dq:
            return Poly(), Poly(rem)
        quot = [0] * (len(rem) - dq)
        lead = o.lead
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if _is_zero(c):
                continue
            f = c if lead == 1 else exact_div(c, lead)
            quot[k - dq] = f
            for i, b in enumerate(o.coeffs):
                rem[k - dq + i] = rem[k - dq + i] - f * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def divides(self, other: Poly) -> bool:
        """True iff ``self`` divides ``other``."""
        return (other % self).is_zero()

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        lead = self.lead
        if lead == 1:
            return self
        return Poly(exact_div(c, lead) for c in self.coeffs)

    def derivative(self) -> Poly:
        return Poly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_shift(self, a) -> Poly:
        """Return p(t + a)."""
        out = Poly()
        shift = Poly((a, 1))
        for c in reversed(self.coeffs):
            out = out * shift + c
        return out

    def map_coeffs(self, f) -> Poly:
        return Poly(f(c) for c in self.coeffs)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = a, b
    s0, s1 = Poly((1,)), Poly()
    t0, t1 = Poly(), Poly((1,))
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = exact_div(1, r0.lead)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def rational_poly(coeffs: Sequence) -> Poly:
    """Polynomial with coefficients coerced to ``Fraction``."""
    return Poly(Fraction(c) for c in coeffs)
