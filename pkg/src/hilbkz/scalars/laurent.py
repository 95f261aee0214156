"""Laurent polynomials in a formal q (half-integer exponents) and the field Q(q^{1/2}).

``LaurentQ`` is a ring element; only monomials can be inverted.  General
quotients live in ``RationalFunction``, stored as a reduced fraction of two
polynomials in s = q^{1/2} with monic denominator.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..errors import DivisionByZero, NotAMonomial
from .poly import Poly, poly_gcd, exact_div

_RATIONAL = (int, Fraction)


def _demote(c: Fraction):
    # integral coefficients are kept as int: polynomial arithmetic is much faster
    return c.numerator if c.denominator == 1 else c


def _fmt_exp(exp2: int) -> str:
    return str(exp2 // 2) if exp2 % 2 == 0 else f"{exp2}/2"


class LaurentQ:
    """Finite sum of c * q^(e/2); keys of ``terms`` are e = 2 * exponent."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                clean[int(e)] = c
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def q(cls, exponent=1) -> LaurentQ:
        """The monomial q^exponent; exponent must lie in (1/2)Z."""
        e2 = Fraction(exponent) * 2
        if e2.denominator != 1:
            raise ValueError(f"exponent {exponent} is not a half-integer")
        return cls({int(e2): 1})

    @classmethod
    def const(cls, c) -> LaurentQ:
        return cls({0: c})

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get(0, Fraction(0))

    def _coerce(self, other):
        if isinstance(other, LaurentQ):
            return other
        if isinstance(other, _RATIONAL):
            return LaurentQ.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentQ(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentQ(out)

    __rmul__ = __mul__

    def inverse(self) -> LaurentQ:
        if not self.terms:
            raise DivisionByZero("inverse of zero")
        if not self.is_monomial():
            raise NotAMonomial(f"{self} is not a monomial; use RationalFunction")
        (e, c), = self.terms.items()
        return LaurentQ({-e: 1 / c})

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
        out = LaurentQ.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentQ):
            return self.terms == other.terms
        if isinstance(other, _RATIONAL):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash(tuple(self.terms.items()))

    def at(self, q_value, sqrt_q=None):
        """Evaluate at q = q_value; half-integer exponents need ``sqrt_q``."""
        acc = Fraction(0)
        for e, c in self.terms.items():
            if e % 2 == 0:
                acc += c * Fraction(q_value) ** (e // 2)
            else:
                if sqrt_q is None:
                    raise ValueError("half-integer exponent needs sqrt_q")
                acc += c * Fraction(sqrt_q) ** e
        return acc

    def __repr__(self):
        return f"LaurentQ({ {e: str(c) for e, c in self.terms.items()} })"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms.items():
            if e == 0:
                parts.append(str(c))
                continue
            mono = "q" if e == 2 else f"q^{_fmt_exp(e)}"
            parts.append(mono if c == 1 else ("-" + mono if c == -1 else f"{c}*{mono}"))
        return " + ".join(parts)


def _s_poly(lq: LaurentQ, shift: int) -> Poly:
    """Coefficients of s^shift * lq as a polynomial in s = q^{1/2}."""
    if not lq.terms:
        return Poly()
    top = max(lq.terms) + shift
    cs = [0] * (top + 1)
    for e, c in lq.terms.items():
        cs[e + shift] = _demote(c)
    return Poly(cs)


class RationalFunction:
    """Element of Q(s), s = q^{1/2}: reduced num/den with den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, _reduced: bool = False):
        if den is None:
            den = Poly((1,))
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = Poly((1,))
            elif den.degree > 0:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num, den = num // g, den // g
            lead = den.lead
            if lead != 1:
                num = num.scale(exact_div(1, lead))
                den = den.monic()
        self.num = num
        self.den = den

    @classmethod
    def from_laurent(cls, lq: LaurentQ) -> RationalFunction:
        if not lq.terms:
            return cls(Poly())
        m = min(lq.terms)
        if m >= 0:
            return cls(_s_poly(lq, 0), _reduced=True)
        return cls(_s_poly(lq, -m), Poly([0] * (-m) + [1]), _reduced=True)

    @classmethod
    def q(cls, exponent=1) -> RationalFunction:
        return cls.from_laurent(LaurentQ.q(exponent))

    @classmethod
    def const(cls, c) -> RationalFunction:
        return cls(Poly((_demote(Fraction(c)),)), _reduced=True)

    def to_laurent(self) -> LaurentQ | None:
        """Laurent form when the denominator is a power of s, else None."""
        d = self.den
        if any(c != 0 for c in d.coeffs[:-1]):
            return None
        k = d.degree
        return LaurentQ({e - k: c for e, c in enumerate(self.num.coeffs) if c != 0})

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, _RATIONAL):
            return RationalFunction.const(other)
        if isinstance(other, LaurentQ):
            return RationalFunction.from_laurent(other)
        return None

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_polynomial() and o.is_polynomial():
            return RationalFunction(self.num + o.num, self.den, _reduced=True)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_polynomial() and o.is_polynomial():
            return RationalFunction(self.num * o.num, _reduced=True)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

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
        return RationalFunction(self.num ** k, self.den ** k, _reduced=True)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_polynomial() and self.num.degree <= 0:
            return hash(self.num.coeff(0))
        return hash((self.num.coeffs, self.den.coeffs))

    def at_sqrt(self, s_value):
        """Evaluate at s = q^{1/2} = s_value."""
        d = self.den(Fraction(s_value))
        if d == 0:
            raise DivisionByZero("pole at evaluation point")
        return Fraction(self.num(Fraction(s_value))) / d

    def at(self, q_value):
        """Evaluate at q = q_value; requires only integer powers of q."""
        if any(c != 0 for k, c in enumerate(self.num.coeffs) if k % 2) or any(
            c != 0 for k, c in enumerate(self.den.coeffs) if k % 2
        ):
            raise ValueError("odd powers of q^{1/2}; use at_sqrt")
        qv = Fraction(q_value)
        n = sum((c * qv ** (k // 2) for k, c in enumerate(self.num.coeffs)), Fraction(0))
        d = sum((c * qv ** (k // 2) for k, c in enumerate(self.den.coeffs)), Fraction(0))
        if d == 0:
            raise DivisionByZero("pole at evaluation point")
        return n / d

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        lq = self.to_laurent()
        if lq is not None:
            return str(lq)
        num = LaurentQ({k: c for k, c in enumerate(self.num.coeffs)})
        den = LaurentQ({k: c for k, c in enumerate(self.den.coeffs)})
        return f"({num})/({den})"


QQ_q = RationalFunction  # the field Q(q^{1/2})
