"""The cyclotomic q-Schur algebra of the commutative Hecke algebra C[T]/(prod (T - q_i)).

Notation: q_i stands for the parameter value q^{a_i} (a field element: a
``Fraction`` or a ``RationalFunction`` in q).  With r_i = prod_{j<=i} (t - q_j),
M^i = K m_i is isomorphic to R_i = F[t]/(r_i), and a homomorphism M^j -> M^i is
determined by the image u in R_i of 1, subject to r_j u = 0 in R_i.  The space
of such u is free over R_min(i,j) on

    g_ij = 1                           (i <= j, the quotient map pi_ij)
    g_ij = prod_{j<k<=i} (t - q_k)     (i > j, the inclusion iota_ij)

so the algebra has basis (i, j, d) -> t^d g_ij with 0 <= d < min(i, j), and
products are (u v)_ik = sum_j u_ij v_jk mod r_i.

Two models are built.  The Hom model multiplies blocks of polynomials as
above.  The presentation model has basis T^d w(c -> a), with w a monotone path
of pi's or iota's, and multiplies by rewriting with the defining relations:
composing down-then-up or up-then-down paths produces products of (T - q_k),
and T acts on a path from c to a through F[t]/(r_min(a, c)).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .errors import ChainRelationViolated, DimensionMismatch, ParamsNotDistinct, PreconditionFailed, ZeroModulus
from .linalg import Matrix, Subspace, inverse, minimal_polynomial, poly_of_matrix, rank
from .scalars import Poly, RationalFunction, exact_div, poly_gcd

Basis = tuple  # (i, j, d), 1-based i, j


def _scalar(c):
    return Fraction(c) if isinstance(c, (int, str)) else c


def _t_minus(c) -> Poly:
    return Poly((-c, 1))


@dataclass(frozen=True)
class QSchurParams:
    l: int
    qa: tuple  # (q_1, ..., q_l)

    def __post_init__(self):
        qa = tuple(_scalar(c) for c in self.qa)
        if len(qa) != self.l:
            raise DimensionMismatch(f"need {self.l} parameter values, got {len(qa)}")
        if any(c == 0 for c in qa):
            raise ValueError("parameter values q^{a_i} must be nonzero")
        object.__setattr__(self, "qa", qa)

    def q(self, i: int):
        """q_i, 1-based."""
        return self.qa[i - 1]

    def distinct(self) -> bool:
        return all(self.qa[a] != self.qa[b] for a, b in combinations(range(self.l), 2))

    @classmethod
    def formal(cls, exponents: Sequence[int]) -> QSchurParams:
        """Values q^{a_i} for integer exponents a_i in the field Q(q^{1/2})."""
        return cls(len(exponents), tuple(RationalFunction.q(a) for a in exponents))


def gcd_hom(g1: Poly, g2: Poly) -> tuple[Poly, int]:
    """Hom(F[t]/(g1), F[t]/(g2)) = F[t]/(gcd): (generator g2/gcd, deg gcd).

    The generator is the image of 1 under a homomorphism generating Hom as a
    module over F[t]/(g2).
    """
    if g1.is_zero() or g2.is_zero():
        raise ZeroModulus("modulus must be a nonzero polynomial")
    g = poly_gcd(g1, g2)
    return g2 // g, g.degree


def hom_dimension_by_kernel(g1: Poly, g2: Poly) -> int:
    """dim {u in F[t]/(g2) : g1 u = 0} by linear algebra (independent of gcd_hom)."""
    if g1.is_zero() or g2.is_zero():
        raise ZeroModulus("modulus must be a nonzero polynomial")
    g2 = g2.monic()
    n = g2.degree
    cols = []
    for e in range(n):
        prod = (g1 * Poly([0] * e + [1])) % g2
        cols.append([prod.coeff(k) for k in range(n)])
    if n == 0:
        return 0
    return n - rank(Matrix.from_columns(cols))


# ---------------------------------------------------------------- Hom model


class QSchurAlgebra:
    """Hom model: elements are dicts {(i, j): Poly in R_i}."""

    def __init__(self, params: QSchurParams):
        self.params = params
        l = self.l = params.l
        one = params.qa[0] - params.qa[0] + 1
        self._one = one
        self.r = {0: Poly((one,))}
        for i in range(1, l + 1):
            self.r[i] = self.r[i - 1] * _t_minus(params.q(i))
        self.basis: list[Basis] = [(i, j, d) for i in range(1, l + 1) for j in range(1, l + 1) for d in range(min(i, j))]
        self.index = {b: k for k, b in enumerate(self.basis)}
        self.dim = len(self.basis)

    # generators of the Hom spaces
    def g(self, i: int, j: int) -> Poly:
        if i <= j:
            return Poly((self._one,))
        out = Poly((self._one,))
        for k in range(j + 1, i + 1):
            out = out * _t_minus(self.params.q(k))
        return out

    def _tpow(self, d: int) -> Poly:
        return Poly([0] * d + [self._one])

    def element(self, b: Basis) -> dict:
        i, j, d = b
        return {(i, j): (self._tpow(d) * self.g(i, j)) % self.r[i]}

    def zero(self) -> dict:
        return {}

    def add(self, x: dict, y: dict) -> dict:
        out = dict(x)
        for k, u in y.items():
            out[k] = (out[k] + u) if k in out else u
        return {k: u for k, u in out.items() if not u.is_zero()}

    def scale(self, x: dict, c) -> dict:
        return {k: u.scale(c) for k, u in x.items() if c != 0}

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for (i, j), u in x.items():
            for (j2, k), v in y.items():
                if j != j2:
                    continue
                w = (u * v) % self.r[i]
                out[i, k] = (out[i, k] + w) % self.r[i] if (i, k) in out else w
        return {k: u for k, u in out.items() if not u.is_zero()}

    def equal(self, x: dict, y: dict) -> bool:
        return not self.add(x, self.scale(y, -1))

    def coords(self, x: dict) -> tuple:
        """Coordinates in ``basis``; raises if a block is outside its Hom space."""
        vec = [self._one - self._one] * self.dim
        for (i, j), u in x.items():
            w, rem = (u % self.r[i]).divmod(self.g(i, j))
            if not rem.is_zero():
                raise ValueError(f"block ({i},{j}) is not a multiple of its generator")
            for d, c in enumerate(w.coeffs):
                if d >= min(i, j):
                    raise ValueError(f"block ({i},{j}) has too large a degree")
                vec[self.index[i, j, d]] = c
        return tuple(vec)

    def from_coords(self, vec: Sequence) -> dict:
        out: dict = {}
        for b, c in zip(self.basis, vec):
            if c != 0:
                out = self.add(out, self.scale(self.element(b), c))
        return out

    # distinguished elements
    def one(self) -> dict:
        return {(i, i): Poly((self._one,)) for i in range(1, self.l + 1)}

    def rho(self, i: int) -> dict:
        return {(i, i): Poly((self._one,))}

    def T(self) -> dict:
        return {(i, i): (self._tpow(1)) % self.r[i] for i in range(1, self.l + 1)}

    def pi(self, i: int) -> dict:
        """pi_{i,i+1}: M^{i+1} -> M^i."""
        return {(i, i + 1): Poly((self._one,))}

    def iota(self, i: int) -> dict:
        """iota_{i+1,i}: M^i -> M^{i+1}."""
        return {(i + 1, i): self.g(i + 1, i)}

    def path(self, a: int, c: int) -> dict:
        """Composite of pi's (a < c) or iota's (a > c) from M^c to M^a."""
        x = self.rho(c)
        if a < c:
            for k in range(c - 1, a - 1, -1):
                x = self.mul(self.pi(k), x)
        elif a > c:
            for k in range(c, a):
                x = self.mul(self.iota(k), x)
        return x

    def poly_times(self, p: Poly, x: dict) -> dict:
        """p(T) x."""
        out: dict = {}
        Tk = self.one()
        for c in p.coeffs:
            if c != 0:
                out = self.add(out, self.scale(self.mul(Tk, x), c))
            Tk = self.mul(self.T(), Tk)
        return out

    @cached_property
    def structure_constants(self) -> dict:
        """(b, b') -> coordinates of the product; pairs with mismatched middle index are zero."""
        out = {}
        for b in self.basis:
            xb = self.element(b)
            for b2 in self.basis:
                if b[1] != b2[0]:
                    continue
                out[b, b2] = self.coords(self.mul(xb, self.element(b2)))
        return out

    def mul_coords(self, u: Sequence, v: Sequence) -> tuple:
        """Product of coordinate vectors through the structure constants."""
        zero = self._one - self._one
        out = [zero] * self.dim
        sc = self.structure_constants
        for a, ca in zip(self.basis, u):
            if ca == 0:
                continue
            for b, cb in zip(self.basis, v):
                if cb == 0 or a[1] != b[0]:
                    continue
                f = ca * cb
                for k, c in enumerate(sc[a, b]):
                    if c != 0:
                        out[k] = out[k] + f * c
        return tuple(out)

    @cached_property
    def _sparse_sc(self) -> dict:
        return {k: {n: c for n, c in enumerate(v) if c != 0} for k, v in self.structure_constants.items()}

    def _sparse_mul(self, u: dict, v: dict) -> dict:
        out: dict = {}
        sc = self._sparse_sc
        for a, ca in u.items():
            ba = self.basis[a]
            for b, cb in v.items():
                bb = self.basis[b]
                if ba[1] != bb[0]:
                    continue
                f = ca * cb
                for n, c in sc[ba, bb].items():
                    out[n] = out.get(n, 0) + f * c
        return {n: c for n, c in out.items() if c != 0}

    def check_associativity(self, triples: Iterable[tuple[Basis, Basis, Basis]] | None = None) -> bool:
        """(ab)c = a(bc) through the structure constants."""
        if triples is None:
            triples = (
                (a, b, c) for a in self.basis for b in self.basis if a[1] == b[0] for c in self.basis if b[1] == c[0]
            )
        for a, b, c in triples:
            ea, eb, ec = ({self.index[x]: self._one} for x in (a, b, c))
            if self._sparse_mul(self._sparse_mul(ea, eb), ec) != self._sparse_mul(ea, self._sparse_mul(eb, ec)):
                return False
        return True

    # faithful representation on the direct sum of the R_i
    @cached_property
    def _rep_offsets(self) -> dict:
        offs, acc = {}, 0
        for i in range(1, self.l + 1):
            offs[i] = acc
            acc += i
        return offs

    def rep_dim(self) -> int:
        return self.l * (self.l + 1) // 2

    def rep_matrix(self, x: dict) -> Matrix:
        """Matrix of x on sum_i R_i (basis t^e of R_i, e < i)."""
        N = self.rep_dim()
        zero = self._one - self._one
        M = [[zero] * N for _ in range(N)]
        offs = self._rep_offsets
        for (i, j), u in x.items():
            for e in range(j):
                img = (u * self._tpow(e)) % self.r[i]
                for k, c in enumerate(img.coeffs):
                    M[offs[i] + k][offs[j] + e] = M[offs[i] + k][offs[j] + e] + c
        return Matrix(M, N)


def build_qschur(p: QSchurParams) -> QSchurAlgebra:
    A = QSchurAlgebra(p)
    if A.dim != sum(min(i, j) for i in range(1, p.l + 1) for j in range(1, p.l + 1)):
        raise AssertionError("Hom model has the wrong dimension")
    return A


def expected_dim(l: int) -> int:
    return l * (l + 1) * (2 * l + 1) // 6


# ---------------------------------------------------------------- presentation model


class PresentationModel:
    """Normal forms T^d w(c -> a), d < min(a, c), multiplied by rewriting with the relations."""

    def __init__(self, params: QSchurParams):
        self.params = params
        l = self.l = params.l
        self._one = params.qa[0] - params.qa[0] + 1
        self.r = {0: Poly((self._one,))}
        for i in range(1, l + 1):
            self.r[i] = self.r[i - 1] * _t_minus(params.q(i))
        self.basis = [(a, c, d) for a in range(1, l + 1) for c in range(1, l + 1) for d in range(min(a, c))]
        self.index = {b: k for k, b in enumerate(self.basis)}
        self.dim = len(self.basis)

    def rewrite_factor(self, a: int, b: int, c: int) -> Poly:
        """w(b -> a) w(c -> b) = factor(T) w(c -> a).

        Up then down (b above a and c) cancels pi iota = (T - q_k) rho for
        k = max(a, c) + 1 .. b; down then up cancels iota pi = (T - q_k) rho for
        k = b + 1 .. min(a, c); a monotone composite is already a path.
        """
        out = Poly((self._one,))
        if b >= max(a, c):
            ks = range(max(a, c) + 1, b + 1)
        elif b <= min(a, c):
            ks = range(b + 1, min(a, c) + 1)
        else:
            ks = range(0)
        for k in ks:
            out = out * _t_minus(self.params.q(k))
        return out

    def mul_basis(self, x: Basis, y: Basis) -> tuple:
        a, b, d = x
        b2, c, d2 = y
        zero = self._one - self._one
        vec = [zero] * self.dim
        if b != b2:
            return tuple(vec)
        m = min(a, c)
        # T acts on paths from c to a through F[t]/(r_m)
        p = (Poly([0] * (d + d2) + [self._one]) * self.rewrite_factor(a, b, c)) % self.r[m]
        for e, coef in enumerate(p.coeffs):
            vec[self.index[a, c, e]] = coef
        return tuple(vec)

    @cached_property
    def structure_constants(self) -> dict:
        return {(x, y): self.mul_basis(x, y) for x in self.basis for y in self.basis if x[1] == y[0]}


def generated_subalgebra_dim(A: QSchurAlgebra) -> int:
    """Dimension of the span closure of the generator images T, rho_i, pi_{i,i+1}, iota_{i+1,i}
    in the faithful representation."""
    gens = [A.T()] + [A.rho(i) for i in range(1, A.l + 1)]
    gens += [A.pi(i) for i in range(1, A.l)] + [A.iota(i) for i in range(1, A.l)]
    mats = [A.rep_matrix(g) for g in gens]
    N = A.rep_dim()

    def flat(M: Matrix) -> tuple:
        return tuple(c for r in M.to_lists() for c in r)

    span = Subspace(N * N, [flat(M) for M in mats])
    frontier = list(mats)
    elems = list(mats)
    while frontier:
        new = []
        for M in frontier:
            for G in mats:
                P = G @ M
                f = flat(P)
                if not span.contains(f):
                    span = Subspace(N * N, span.basis + (f,))
                    new.append(P)
                    elems.append(P)
        frontier = new
    return span.dim


def presentation_failures(A: QSchurAlgebra) -> list[str]:
    """Names of the failing checks among relations (1)-(7), spanning and the isomorphism."""
    l = A.l
    fails = []
    T = A.T()
    eq = A.equal
    for i in range(1, l + 1):
        for j in range(1, l + 1):
            want = A.rho(i) if i == j else {}
            if not eq(A.mul(A.rho(i), A.rho(j)), want):
                fails.append(f"(1) rho_{i} rho_{j}")
        if not eq(A.mul(T, A.rho(i)), A.mul(A.rho(i), T)):
            fails.append(f"(1) T rho_{i} = rho_{i} T")
    tot: dict = {}
    for i in range(1, l + 1):
        tot = A.add(tot, A.rho(i))
    if not eq(tot, A.one()):
        fails.append("(2) sum rho_i = 1")
    for i in range(1, l):
        p, io = A.pi(i), A.iota(i)
        if not (eq(A.mul(A.rho(i), p), p) and eq(A.mul(p, A.rho(i + 1)), p)):
            fails.append(f"(3) rho pi for i={i}")
        if not (eq(A.mul(A.rho(i + 1), io), io) and eq(A.mul(io, A.rho(i)), io)):
            fails.append(f"(4) rho iota for i={i}")
        shift = A.add(T, A.scale(A.one(), -A.params.q(i + 1)))
        if not eq(A.mul(io, p), A.mul(shift, A.rho(i + 1))):
            fails.append(f"(5) iota pi = (T - q_{i + 1}) rho_{i + 1}")
        if not eq(A.mul(p, io), A.mul(shift, A.rho(i))):
            fails.append(f"(6) pi iota = (T - q_{i + 1}) rho_{i}")
    if not eq(A.mul(T, A.rho(1)), A.scale(A.rho(1), A.params.q(1))):
        fails.append("(7) T rho_1 = q_1 rho_1")
    # C[T]-span of rho_i, pi_jk, iota_kj is everything
    vecs = []
    for a in range(1, l + 1):
        for c in range(1, l + 1):
            x = A.path(a, c)
            for d in range(min(a, c)):
                vecs.append(A.coords(A.poly_times(Poly([0] * d + [A._one]), x)))
    if Subspace(A.dim, vecs).dim != A.dim:
        fails.append("spanning set does not span")
    if PresentationModel(A.params).structure_constants != A.structure_constants:
        fails.append("presentation model and Hom model structure constants differ")
    return fails


def verify_presentation(A: QSchurAlgebra) -> bool:
    return not presentation_failures(A)


# ---------------------------------------------------------------- modules


@dataclass
class QSchurModule:
    """Action of every basis element of ``algebra`` on V = sum_i V_i."""

    algebra: QSchurAlgebra
    component_dims: tuple
    act: dict  # Basis -> Matrix

    @property
    def dim(self) -> int:
        return sum(self.component_dims)

    def offsets(self) -> list[int]:
        out, acc = [], 0
        for d in self.component_dims:
            out.append(acc)
            acc += d
        return out

    def matrix_of(self, x: dict) -> Matrix:
        A = self.algebra
        M = Matrix.zero(self.dim, self.dim, A._one - A._one)
        for b, c in zip(A.basis, A.coords(x)):
            if c != 0:
                M = M + self.act[b].scale(c)
        return M

    def t_matrix(self) -> Matrix:
        return self.matrix_of(self.algebra.T())

    def block(self, M: Matrix, i: int) -> Matrix:
        off = self.offsets()[i - 1]
        idx = list(range(off, off + self.component_dims[i - 1]))
        return M.submatrix(idx, idx)

    def verify_axioms(self) -> list[tuple]:
        """Basis pairs (x, y) with act(x) act(y) != act(xy); also checks the unit."""
        A = self.algebra
        bad = []
        if self.matrix_of(A.one()) != Matrix.identity(self.dim, A._one):
            bad.append(("unit",))
        zero = Matrix.zero(self.dim, self.dim, A._one - A._one)
        for x in A.basis:
            for y in A.basis:
                lhs = self.act[x] @ self.act[y]
                if x[1] != y[0]:
                    if not lhs.is_zero():
                        bad.append((x, y))
                    continue
                rhs = zero
                for b, c in zip(A.basis, A.structure_constants[x, y]):
                    if c != 0:
                        rhs = rhs + self.act[b].scale(c)
                if lhs != rhs:
                    bad.append((x, y))
        return bad

    def is_module(self) -> bool:
        return not self.verify_axioms()


def _block_embed(total: int, r0: int, c0: int, M: Matrix, zero) -> list[list]:
    out = [[zero] * total for _ in range(total)]
    for i in range(M.rows):
        for j in range(M.cols):
            out[r0 + i][c0 + j] = M[i, j]
    return out


def standard_module(A: QSchurAlgebra, j: int) -> QSchurModule:
    """W_j = sum_{k >= j} I_j^k with I_j^k = F s_j^k in R_k, s_j^k = prod_{m<=k, m!=j} (t - q_m)."""
    l = A.l
    if not 1 <= j <= l:
        raise ValueError(f"j must lie in 1..{l}")
    one, zero = A._one, A._one - A._one

    def s(k: int) -> Poly:
        out = Poly((one,))
        for m in range(1, k + 1):
            if m != j:
                out = out * _t_minus(A.params.q(m))
        return out

    comps = tuple(1 if k >= j else 0 for k in range(1, l + 1))
    pos = {k: k - j for k in range(j, l + 1)}  # position of the vector s_j^k
    n = l - j + 1
    act = {}
    for b in A.basis:
        x = A.element(b)
        M = [[zero] * n for _ in range(n)]
        (i, c), u = next(iter(x.items()))
        if i >= j and c >= j:
            img = (u * s(c)) % A.r[i]
            target = s(i)
            coef = exact_div(img.coeff(target.degree), target.lead)
            if img != target.scale(coef):
                raise AssertionError("standard module image left the ideal I_j^i")
            M[pos[i]][pos[c]] = coef
        act[b] = Matrix(M, n)
    return QSchurModule(A, comps, act)


def action_span_dim(m: QSchurModule) -> int:
    n = m.dim
    return Subspace(n * n, [tuple(c for r in M.to_lists() for c in r) for M in m.act.values()]).dim


def is_simple(m: QSchurModule) -> bool:
    """The action spans End(V) (Burnside); this implies simplicity."""
    return m.dim > 0 and action_span_dim(m) == m.dim ** 2


def graded_submodules(m: QSchurModule) -> list[tuple]:
    """All submodules of a module whose rho-weight spaces are at most one-dimensional.

    Submodules are stable under the idempotents rho_k, hence sums of weight
    spaces; every subset of the support is tested.
    """
    if any(d > 1 for d in m.component_dims):
        raise ValueError("weight spaces must be at most one-dimensional")
    support = [k for k, d in enumerate(m.component_dims) if d]
    offs = m.offsets()
    out = []
    for size in range(len(support) + 1):
        for S in combinations(support, size):
            idx = {offs[k] for k in S}
            stable = True
            for M in m.act.values():
                for col in idx:
                    if any(M[r, col] != 0 for r in range(m.dim) if r not in idx):
                        stable = False
                        break
                if not stable:
                    break
            if stable:
                out.append(tuple(k + 1 for k in S))
    return out


def block_decomposition(A: QSchurAlgebra) -> list[int]:
    """Sizes of the matrix blocks for pairwise distinct parameters: [1, ..., l]."""
    if not A.params.distinct():
        raise ParamsNotDistinct("block decomposition needs pairwise distinct q^{a_i}")
    dims = []
    for j in range(1, A.l + 1):
        W = standard_module(A, j)
        if not is_simple(W):
            raise AssertionError(f"standard module W_{j} is not simple")
        dims.append(W.dim)
    if sum(d * d for d in dims) != A.dim:
        raise AssertionError("simple modules do not exhaust the algebra")
    return sorted(dims)


# ---------------------------------------------------------------- the l = 2 example


def l2_coordinates(A: QSchurAlgebra, x: dict) -> tuple:
    """(a1, a2, a3, b1, b2) with x = [[a1, a2 pi], [a3 eps, b1 + b2 eps]], eps = t - q_2."""
    if A.l != 2:
        raise ValueError("only for l = 2")
    v = dict(zip(A.basis, A.coords(x)))
    q2 = A.params.q(2)
    c0, c1 = v[2, 2, 0], v[2, 2, 1]
    return (v[1, 1, 0], v[1, 2, 0], v[2, 1, 0], c0 + c1 * q2, c1)


def l2_from_coordinates(A: QSchurAlgebra, a1, a2, a3, b1, b2) -> dict:
    q2 = A.params.q(2)
    vec = {(1, 1, 0): a1, (1, 2, 0): a2, (2, 1, 0): a3, (2, 2, 0): b1 - b2 * q2, (2, 2, 1): b2}
    return A.from_coords([vec[b] for b in A.basis])


def l2_equal_parameter_product(x: Sequence, y: Sequence) -> tuple:
    """Product in coordinates (a1, a2, a3, b1, b2) when q_1 = q_2 (so eps^2 = 0 and eps = 0 in R_1)."""
    a1, a2, a3, b1, b2 = x
    c1, c2, c3, d1, d2 = y
    return (
        a1 * c1,
        a1 * c2 + a2 * d1,
        a3 * c1 + b1 * c3,
        b1 * d1,
        a3 * c2 + b1 * d2 + b2 * d1,
    )


# ---------------------------------------------------------------- spectrum shift


def spectrum_shift(A: Matrix, B: Matrix, qa, P: Poly) -> Poly:
    """Given P(AB + qa) = 0 return (t - qa) P, which annihilates BA + qa."""
    n = A.rows
    one = A._one() if A.rows * A.cols else B._one()
    Ti = A @ B + Matrix.identity(n, one).scale(qa)
    if not poly_of_matrix(P, Ti).is_zero():
        raise PreconditionFailed("P does not annihilate AB + qa")
    out = _t_minus(qa) * P
    Tn = B @ A + Matrix.identity(B.rows, one).scale(qa)
    if not poly_of_matrix(out, Tn).is_zero():
        raise AssertionError("shifted polynomial fails to annihilate BA + qa")
    return out


# ---------------------------------------------------------------- chain modules


@dataclass
class ChainModule:
    """V = sum V_i with alpha_i: V_i -> V_{i+1} and beta_i: V_{i+1} -> V_i (1 <= i < l)."""

    params: QSchurParams
    dims: tuple
    alpha: list  # alpha[i-1] is a dims[i] x dims[i-1] matrix
    beta: list  # beta[i-1] is a dims[i-1] x dims[i] matrix

    def __post_init__(self):
        l = self.params.l
        if len(self.dims) != l or len(self.alpha) != l - 1 or len(self.beta) != l - 1:
            raise DimensionMismatch("chain data has the wrong length")
        for i in range(1, l):
            if self.alpha[i - 1].shape != (self.dims[i], self.dims[i - 1]):
                raise DimensionMismatch(f"alpha_{i} must be {self.dims[i]}x{self.dims[i - 1]}")
            if self.beta[i - 1].shape != (self.dims[i - 1], self.dims[i]):
                raise DimensionMismatch(f"beta_{i} must be {self.dims[i - 1]}x{self.dims[i]}")

    def _one(self):
        return self.params.qa[0] - self.params.qa[0] + 1

    def relation_failure(self) -> int | None:
        """First i with alpha_{i-1} beta_{i-1} - beta_i alpha_i != (q_{i+1} - q_i) id on V_i."""
        one = self._one()
        for i in range(1, self.params.l):
            d = self.dims[i - 1]
            lhs = Matrix.zero(d, d, one - one) - self.beta[i - 1] @ self.alpha[i - 1]
            if i > 1:
                lhs = lhs + self.alpha[i - 2] @ self.beta[i - 2]
            rhs = Matrix.identity(d, one).scale(self.params.q(i + 1) - self.params.q(i))
            if lhs != rhs:
                return i
        return None

    def t_block(self, i: int) -> Matrix:
        """T on V_i: q_i + alpha_{i-1} beta_{i-1}."""
        one = self._one()
        d = self.dims[i - 1]
        T = Matrix.identity(d, one).scale(self.params.q(i))
        if i > 1:
            T = T + self.alpha[i - 2] @ self.beta[i - 2]
        return T


def chain_to_module(c: ChainModule, A: QSchurAlgebra | None = None, verify: bool = True) -> QSchurModule:
    """rho_i -> projection to V_i, pi_{i,i+1} -> beta_i, iota_{i+1,i} -> alpha_i, T -> q_i + alpha_{i-1} beta_{i-1}."""
    bad = c.relation_failure()
    if bad is not None:
        raise ChainRelationViolated(bad)
    A = A or build_qschur(c.params)
    if A.params != c.params:
        raise ValueError("algebra parameters differ from the chain parameters")
    one = c._one()
    zero = one - one
    l = c.params.l
    offs, acc = [], 0
    for d in c.dims:
        offs.append(acc)
        acc += d
    N = acc
    T_blocks = {i: c.t_block(i) for i in range(1, l + 1)}

    def path(a: int, cc: int) -> Matrix:
        """Block matrix V_cc -> V_a of the monotone path."""
        M = Matrix.identity(c.dims[cc - 1], one)
        if a < cc:
            for k in range(cc - 1, a - 1, -1):
                M = c.beta[k - 1] @ M
        elif a > cc:
            for k in range(cc, a):
                M = c.alpha[k - 1] @ M
        return M

    act = {}
    for (a, cc, d) in A.basis:
        blk = (T_blocks[a] ** d) @ path(a, cc)
        act[a, cc, d] = Matrix(_block_embed(N, offs[a - 1], offs[cc - 1], blk, zero), N) if N else Matrix.zero(0)
    m = QSchurModule(A, tuple(c.dims), act)
    if verify:
        bad_pairs = m.verify_axioms()
        if bad_pairs:
            raise AssertionError(f"chain action violates the algebra relations at {bad_pairs[0]}")
    return m


def params_from_cbar(cbar: Sequence) -> QSchurParams:
    """q_i = prod_{k<i} Q_k from the values Q_k = q^{cbar_k}."""
    vals, acc = [], None
    for k in range(len(cbar)):
        if acc is None:
            acc = cbar[0] - cbar[0] + 1
        else:
            acc = acc * cbar[k - 1]
        vals.append(acc)
    return QSchurParams(len(cbar), tuple(vals))


def s_polynomial(cbar: Sequence, i: int) -> Poly:
    """s_i(t) = prod_{j=1}^i (t - prod_{k=j}^{i-1} Q_k)."""
    one = _scalar(cbar[0]) - _scalar(cbar[0]) + 1
    out = Poly((one,))
    for j in range(1, i + 1):
        root = one
        for k in range(j, i):
            root = root * cbar[k - 1]
        out = out * _t_minus(root)
    return out


def component_monodromy(m: QSchurModule, i: int, cbar: Sequence) -> Matrix:
    """(prod_{k=i}^l Q_k T)^{-1} on the i-th component."""
    T = m.block(m.t_matrix(), i)
    c = _scalar(cbar[0]) - _scalar(cbar[0]) + 1
    for k in range(i, len(cbar) + 1):
        c = c * cbar[k - 1]
    return inverse(T.scale(c))


def component_minpoly_check(m: QSchurModule, i: int, cbar: Sequence) -> bool:
    """Minimal polynomial of the monodromy on component i divides s_i."""
    if m.component_dims[i - 1] == 0:
        return True
    try:
        M = component_monodromy(m, i, cbar)
    except ZeroDivisionError:
        return False
    return minimal_polynomial(M).divides(s_polynomial(cbar, i))


def _unimodular_int(n: int, rng: random.Random, bound: int = 2) -> tuple[Matrix, Matrix]:
    L = Matrix([[1 if a == b else (rng.randint(-bound, bound) if a > b else 0) for b in range(n)] for a in range(n)], n)
    U = Matrix([[1 if a == b else (rng.randint(-bound, bound) if a < b else 0) for b in range(n)] for a in range(n)], n)
    return L @ U, inverse(U) @ inverse(L)


def random_chain(params: QSchurParams, rng: random.Random, max_dim: int = 3) -> ChainModule:
    """Random solution of the chain relations.

    Dimensions are nondecreasing, alpha_i = G [I; 0] H is injective with left
    inverse L_i, and beta_i = C_i L_i + K with K alpha_i = 0, where
    C_i = alpha_{i-1} beta_{i-1} + (q_i - q_{i+1}) id.
    """
    l = params.l
    one = params.qa[0] - params.qa[0] + 1
    dims = sorted(rng.randint(0, max_dim) for _ in range(l))
    alpha, beta = [], []
    for i in range(1, l):
        d0, d1 = dims[i - 1], dims[i]
        if d0 == 0:
            alpha.append(Matrix.zero(d1, 0))
            beta.append(Matrix.zero(0, d1))
            continue
        G, Gi = _unimodular_int(d1, rng)
        H, Hi = _unimodular_int(d0, rng)
        E = Matrix([[1 if a == b else 0 for b in range(d0)] for a in range(d1)], d0)
        Cc = [[rng.randint(-2, 2) for _ in range(d1 - d0)] for _ in range(d0)]
        P = Matrix([[1 if a == b else 0 for b in range(d0)] + Cc[a] for a in range(d0)], d1)
        a_i = (G @ E @ H).map(lambda x: x * one)
        L = (Hi @ P @ Gi).map(lambda x: x * one)
        # K = Z (1 - alpha L) kills alpha
        Z = Matrix([[rng.randint(-2, 2) * one for _ in range(d1)] for _ in range(d0)], d1)
        K = Z @ (Matrix.identity(d1, one) - a_i @ L)
        C = Matrix.identity(d0, one).scale(params.q(i) - params.q(i + 1))
        if i > 1:
            C = C + alpha[-1] @ beta[-1]
        alpha.append(a_i)
        beta.append(C @ L + K)
    return ChainModule(params, tuple(dims), alpha, beta)


def module_summary(A: QSchurAlgebra) -> dict:
    """Dimensions, presentation check, standard modules and (for distinct parameters) blocks."""
    fails = presentation_failures(A)
    out = {
        "l": A.l,
        "dim": A.dim,
        "expected_dim": expected_dim(A.l),
        "presentation_model_dim": PresentationModel(A.params).dim,
        "generated_subalgebra_dim": generated_subalgebra_dim(A),
        "verify_presentation": not fails,
        "presentation_failures": fails,
        "associative": A.check_associativity(),
        "distinct_params": A.params.distinct(),
        "standard_modules": [],
    }
    for j in range(1, A.l + 1):
        W = standard_module(A, j)
        out["standard_modules"].append({"j": j, "dim": W.dim, "simple": is_simple(W)})
    if out["distinct_params"]:
        out["blocks"] = block_decomposition(A)
    return out
