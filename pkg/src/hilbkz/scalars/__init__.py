"""Exact scalar families: ``Fraction``, ``Cyclotomic``, ``LaurentQ``, ``RationalFunction``."""

from __future__ import annotations

from fractions import Fraction

from ..errors import DivisionByZero
from .cyclotomic import Cyclotomic, cyclo_normalize, cyclotomic_poly, euler_phi
from .laurent import LaurentQ, QQ_q, RationalFunction
from .poly import Poly, exact_div, poly_gcd, poly_xgcd, rational_poly

__all__ = [
    "Cyclotomic",
    "Fraction",
    "LaurentQ",
    "Poly",
    "QQ_q",
    "RationalFunction",
    "cyclo_normalize",
    "cyclotomic_poly",
    "euler_phi",
    "exact_div",
    "poly_gcd",
    "poly_xgcd",
    "rational_poly",
    "scalar_from_json",
    "scalar_invert",
    "scalar_to_json",
]


def scalar_invert(s):
    """Multiplicative inverse within the family of ``s``.

    A non-monomial ``LaurentQ`` raises ``NotAMonomial``; wrap it in
    ``RationalFunction`` first for a general quotient.
    """
    if isinstance(s, int):
        s = Fraction(s)
    if isinstance(s, Fraction):
        if s == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / s
    if isinstance(s, (Cyclotomic, LaurentQ, RationalFunction)):
        return s.inverse()
    raise TypeError(f"not an exact scalar: {type(s).__name__}")


def _rat_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _laurent_json(lq: LaurentQ) -> dict:
    return {"terms": [{"exp2": e, "coeff": _rat_str(c)} for e, c in lq.terms.items()]}


def _s_laurent(p: Poly) -> LaurentQ:
    # coefficient of s^k is the coefficient of q^(k/2)
    return LaurentQ({k: c for k, c in enumerate(p.coeffs)})


def scalar_to_json(s):
    """JSON-ready form; rationals as "p/q" strings."""
    if isinstance(s, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(s, (int, Fraction)):
        return _rat_str(Fraction(s))
    if isinstance(s, Cyclotomic):
        return {"l": s.l, "coeffs": [_rat_str(c) for c in s.coeffs]}
    if isinstance(s, LaurentQ):
        return _laurent_json(s)
    if isinstance(s, RationalFunction):
        lq = s.to_laurent()
        if lq is not None:
            return _laurent_json(lq)
        return {"num": _laurent_json(_s_laurent(s.num)), "den": _laurent_json(_s_laurent(s.den))}
    raise TypeError(f"not an exact scalar: {type(s).__name__}")


def _laurent_from(obj) -> LaurentQ:
    return LaurentQ({int(t["exp2"]): Fraction(t["coeff"]) for t in obj["terms"]})


def scalar_from_json(obj):
    if isinstance(obj, (str, int)):
        return Fraction(obj)
    if "l" in obj:
        return Cyclotomic(int(obj["l"]), [Fraction(c) for c in obj["coeffs"]])
    if "terms" in obj:
        return _laurent_from(obj)
    if "num" in obj:
        return RationalFunction.from_laurent(_laurent_from(obj["num"])) / RationalFunction.from_laurent(
            _laurent_from(obj["den"])
        )
    raise ValueError(f"unrecognised scalar encoding: {obj!r}")
