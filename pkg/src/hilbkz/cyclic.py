"""Rank one with a cyclic group: the smash product D(C^x) # C[mu_l], Dunkl
elements, and the cyclic quiver with dimension vector (1, ..., 1).

Conventions: gamma acts by (gamma f)(z) = f(zeta^-1 z), so gamma z = zeta^-1 z gamma
and gamma d = zeta d gamma, where d = d/dz and zeta = exp(2 pi i / l).  Only the
formal root zeta of the cyclotomic field is used.

Quiver data use 0-based lists: a[i] is the arrow V_{i-1} -> V_i and b[i] the
arrow V_i -> V_{i-1}, indices mod l.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Mapping, Sequence

from .errors import NonGeneric, NotInChart, OrderMismatch
from .scalars import Cyclotomic

# ---------------------------------------------------------------- smash product


def _falling(x: int, k: int) -> int:
    out = 1
    for r in range(k):
        out *= x - r
    return out


class SmashElement:
    """Finite sum of c * z^m d^p gamma^j with m in Z, p >= 0, j mod l."""

    __slots__ = ("l", "terms")

    def __init__(self, l: int, terms: Mapping[tuple[int, int, int], object] | None = None):
        if l < 1:
            raise ValueError("l must be positive")
        clean: dict[tuple[int, int, int], Cyclotomic] = {}
        for (m, p, j), c in (terms or {}).items():
            if p < 0:
                raise ValueError("negative power of d")
            key = (int(m), int(p), int(j) % l)
            c = c if isinstance(c, Cyclotomic) else Cyclotomic(l, [c])
            if c.l != l:
                raise OrderMismatch(f"coefficient in Q(zeta_{c.l}) for l = {l}")
            clean[key] = clean[key] + c if key in clean else c
        self.l = l
        self.terms = {k: v for k, v in sorted(clean.items()) if v != 0}

    # generators
    @classmethod
    def one(cls, l: int) -> SmashElement:
        return cls(l, {(0, 0, 0): 1})

    @classmethod
    def z(cls, l: int, m: int = 1) -> SmashElement:
        return cls(l, {(m, 0, 0): 1})

    @classmethod
    def d(cls, l: int, p: int = 1) -> SmashElement:
        return cls(l, {(0, p, 0): 1})

    @classmethod
    def gamma(cls, l: int, j: int = 1) -> SmashElement:
        return cls(l, {(0, 0, j): 1})

    @classmethod
    def idempotent(cls, l: int, i: int) -> SmashElement:
        """e_i = (1/l) sum_j zeta^{ij} gamma^j."""
        inv_l = Fraction(1, l)
        return cls(l, {(0, 0, j): Cyclotomic.zeta(l, i * j) * inv_l for j in range(l)})

    def _check(self, other: SmashElement):
        if other.l != self.l:
            raise OrderMismatch(f"cannot combine elements for l = {self.l} and l = {other.l}")

    def _coerce(self, other):
        if isinstance(other, SmashElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return SmashElement(self.l, {(0, 0, 0): other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in o.terms.items():
            terms[k] = terms[k] + c if k in terms else c
        return SmashElement(self.l, terms)

    __radd__ = __add__

    def __neg__(self):
        return SmashElement(self.l, {k: -c for k, c in self.terms.items()})

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

    def scale(self, c) -> SmashElement:
        return SmashElement(self.l, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scale(other)
        if not isinstance(other, SmashElement):
            return NotImplemented
        return smash_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, SmashElement) else other
        if o is None:
            return NotImplemented
        return self.l == o.l and self.terms == o.terms

    def __hash__(self):
        return hash((self.l, tuple(self.terms.items())))

    def __repr__(self):
        return f"SmashElement({self.l}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (m, p, j), c in self.terms.items():
            mono = []
            if m:
                mono.append("z" if m == 1 else f"z^{m}")
            if p:
                mono.append("d" if p == 1 else f"d^{p}")
            if j:
                mono.append("g" if j == 1 else f"g^{j}")
            parts.append(f"({c})" + ("*" + "*".join(mono) if mono else ""))
        return " + ".join(parts)


def smash_mul(u: SmashElement, w: SmashElement) -> SmashElement:
    """Normal ordered product.

    (z^m d^p g^j)(z^m' d^p' g^j') = zeta^{j(p' - m')} z^m (d^p z^m') d^p' g^{j+j'}
    with d^p z^m' = sum_k C(p, k) (m')_k z^{m'-k} d^{p-k}.
    """
    if u.l != w.l:
        raise OrderMismatch(f"cannot multiply elements for l = {u.l} and l = {w.l}")
    l = u.l
    out: dict[tuple[int, int, int], Cyclotomic] = {}
    for (m, p, j), c in u.terms.items():
        for (m2, p2, j2), c2 in w.terms.items():
            coeff = c * c2 * Cyclotomic.zeta(l, j * (p2 - m2))
            jj = (j + j2) % l
            for k in range(p + 1):
                f = comb(p, k) * _falling(m2, k)
                if f == 0:
                    continue
                key = (m + m2 - k, p - k + p2, jj)
                add = coeff * f
                out[key] = out[key] + add if key in out else add
    return SmashElement(l, out)


def commutator(u: SmashElement, w: SmashElement) -> SmashElement:
    return smash_mul(u, w) - smash_mul(w, u)


@dataclass(frozen=True)
class KappaParams:
    l: int
    kappa: tuple

    def __post_init__(self):
        kappa = tuple(Fraction(k) for k in self.kappa)
        if len(kappa) != self.l:
            raise ValueError(f"need {self.l} kappa values, got {len(kappa)}")
        object.__setattr__(self, "kappa", kappa)


def dunkl_element(k: KappaParams) -> SmashElement:
    """d + l z^-1 sum_i kappa_i e_i."""
    l = k.l
    acc = SmashElement(l)
    for i, kap in enumerate(k.kappa):
        if kap:
            acc = acc + SmashElement.idempotent(l, i).scale(kap)
    return SmashElement.d(l) + smash_mul(SmashElement.z(l, -1), acc).scale(l)


def dunkl_commutator(k: KappaParams) -> SmashElement:
    """[d_kappa, z] computed by normal ordering."""
    return commutator(dunkl_element(k), SmashElement.z(k.l))


def dunkl_commutator_closed_form(k: KappaParams) -> SmashElement:
    """1 + l sum_i (kappa_{i+1} - kappa_i) e_i."""
    l = k.l
    out = SmashElement.one(l)
    for i in range(l):
        diff = k.kappa[(i + 1) % l] - k.kappa[i]
        if diff:
            out = out + SmashElement.idempotent(l, i).scale(l * diff)
    return out


def kappa_to_c(k: KappaParams) -> tuple:
    """c_i = kappa_{i+1} - kappa_i + 1/l - delta_{i,0}."""
    l = k.l
    return tuple(k.kappa[(i + 1) % l] - k.kappa[i] + Fraction(1, l) - (1 if i == 0 else 0) for i in range(l))


# ---------------------------------------------------------------- cyclic quiver


@dataclass(frozen=True)
class ThetaParam:
    l: int
    theta: tuple

    def __post_init__(self):
        th = tuple(int(x) for x in self.theta)
        if len(th) != self.l:
            raise ValueError(f"need {self.l} theta values, got {len(th)}")
        if sum(th) != 0:
            raise ValueError("theta must sum to zero")
        object.__setattr__(self, "theta", th)

    def partial_sums(self) -> list[int]:
        """S_k = theta_0 + ... + theta_{k-1}."""
        out, acc = [], 0
        for x in self.theta:
            out.append(acc)
            acc += x
        return out


def cyclic_sum(t: ThetaParam, i: int, j: int) -> int:
    """theta_i + theta_{i+1} + ... + theta_{j-1}, indices mod l (empty when i = j)."""
    total, k = 0, i
    while k != j % t.l:
        total += t.theta[k]
        k = (k + 1) % t.l
    return total


def precedes(t: ThetaParam, i: int, j: int) -> bool:
    """i |> j iff theta_i + ... + theta_{j-1} < 0."""
    return cyclic_sum(t, i, j) < 0


def theta_order(t: ThetaParam) -> tuple:
    """eta (0-based) with eta_1 |> eta_2 |> ... |> eta_l.

    i |> j iff S_j < S_i, so eta sorts the indices by decreasing partial sum.
    """
    l = t.l
    S = t.partial_sums()
    bad = [(i, j) for i in range(l) for j in range(l) if i != j and S[i] == S[j]]
    if bad:
        i, j = min(bad, key=lambda ij: ((ij[1] - ij[0]) % l, ij[0]))
        last = (j - 1) % l
        run = f"theta_{i}" if last == i else f"theta_{i} + ... + theta_{last}"
        raise NonGeneric(i, j, f"theta is not generic: the cyclic sum {run} vanishes")
    return tuple(sorted(range(l), key=lambda i: -S[i]))


def is_generic(t: ThetaParam) -> bool:
    return len(set(t.partial_sums())) == t.l


@dataclass(frozen=True)
class QuiverRep:
    l: int
    a: tuple
    b: tuple

    def __post_init__(self):
        if len(self.a) != self.l or len(self.b) != self.l:
            raise ValueError(f"need {self.l} values for a and for b")
        conv = lambda v: tuple(Fraction(x) if isinstance(x, (int, str)) else x for x in v)
        object.__setattr__(self, "a", conv(self.a))
        object.__setattr__(self, "b", conv(self.b))


def closed_subsets(r: QuiverRep) -> list[frozenset]:
    """Coordinate subsets S of Z/l closed under the nonzero arrows (the subrepresentations)."""
    l = r.l
    out = []
    for size in range(l + 1):
        for S in combinations(range(l), size):
            s = set(S)
            ok = True
            for i in range(l):
                if r.a[i] != 0 and (i - 1) % l in s and i not in s:
                    ok = False
                    break
                if r.b[i] != 0 and i in s and (i - 1) % l not in s:
                    ok = False
                    break
            if ok:
                out.append(frozenset(s))
    return out


def theta_semistable(r: QuiverRep, t: ThetaParam) -> bool:
    """Every subrepresentation W has theta(W) <= 0."""
    if r.l != t.l:
        raise OrderMismatch(f"representation has l = {r.l}, theta has l = {t.l}")
    return all(sum(t.theta[i] for i in S) <= 0 for S in closed_subsets(r))


def moment_map(r: QuiverRep) -> tuple:
    """(a_{i+1} b_{i+1} - a_i b_i)_i."""
    l = r.l
    return tuple(r.a[(i + 1) % l] * r.b[(i + 1) % l] - r.a[i] * r.b[i] for i in range(l))


def _prod(xs):
    out = 1
    for x in xs:
        out = out * x
    return out


def in_chart(r: QuiverRep, eta: Sequence[int], i: int) -> bool:
    """Chart X_i (1-based): a_{eta_j} != 0 for j < i and b_{eta_j} != 0 for j > i."""
    l = r.l
    return all(r.a[eta[j - 1]] != 0 for j in range(1, i)) and all(r.b[eta[j - 1]] != 0 for j in range(i + 1, l + 1))


def chart_coords(r: QuiverRep, t: ThetaParam, i: int) -> tuple:
    """(f_i, g_i) = (prod_{j<=i} a / prod_{j>i} b, prod_{j>=i} b / prod_{j<i} a) along eta."""
    if r.l != t.l:
        raise OrderMismatch(f"representation has l = {r.l}, theta has l = {t.l}")
    l = r.l
    if not 1 <= i <= l:
        raise ValueError(f"chart index must lie in 1..{l}")
    eta = theta_order(t)
    for j in range(1, i):
        if r.a[eta[j - 1]] == 0:
            raise NotInChart(f"a_{eta[j - 1]} = 0, so the point is not in chart {i}")
    for j in range(i + 1, l + 1):
        if r.b[eta[j - 1]] == 0:
            raise NotInChart(f"b_{eta[j - 1]} = 0, so the point is not in chart {i}")
    A = [r.a[eta[j - 1]] for j in range(1, l + 1)]
    B = [r.b[eta[j - 1]] for j in range(1, l + 1)]
    f = _prod(A[:i]) / _prod(B[i:]) if i < l else _prod(A[:i])
    g = _prod(B[i - 1:]) / _prod(A[: i - 1]) if i > 1 else _prod(B)
    return _frac(f), _frac(g)


def _frac(x):
    return Fraction(x) if isinstance(x, int) else x


def charts_containing(r: QuiverRep, t: ThetaParam) -> list[int]:
    eta = theta_order(t)
    return [i for i in range(1, r.l + 1) if in_chart(r, eta, i)]


def invariant_triple(r: QuiverRep) -> tuple:
    """(A, B, P) = (a_1 ... a_l, b_1 ... b_l, a_1 b_1); on mu^-1(0), A B = P^l."""
    l = r.l
    return _frac(_prod(r.a)), _frac(_prod(r.b)), _frac(r.a[1 % l] * r.b[1 % l])


def hypertoric_report(t: ThetaParam, r: QuiverRep | None = None) -> dict:
    """Summary used by the command line: order, semistability, moment map, charts, invariants."""
    from .scalars import scalar_to_json

    out: dict = {"l": t.l, "theta": list(t.theta), "generic": is_generic(t)}
    if out["generic"]:
        eta = theta_order(t)
        out["eta"] = [e + 1 for e in eta]
        out["eta_indices"] = list(eta)
    else:
        try:
            theta_order(t)
        except NonGeneric as exc:
            out["nongeneric_pair"] = list(exc.pair)
    if r is not None:
        if r.l != t.l:
            raise OrderMismatch(f"representation has l = {r.l}, theta has l = {t.l}")
        mm = moment_map(r)
        out["semistable"] = theta_semistable(r, t)
        out["moment_map"] = [scalar_to_json(x) for x in mm]
        out["on_zero_fibre"] = all(x == 0 for x in mm)
        A, B, P = invariant_triple(r)
        out["invariants"] = {"A": scalar_to_json(A), "B": scalar_to_json(B), "P": scalar_to_json(P)}
        out["invariant_relation"] = A * B == P ** r.l
        if out["generic"]:
            charts = []
            for i in charts_containing(r, t):
                f, g = chart_coords(r, t, i)
                charts.append({"chart": i, "f": scalar_to_json(f), "g": scalar_to_json(g)})
            out["charts"] = charts
    return out
