"""Nearby and vanishing cycles in rank one, linear algebra version.

A pair (Psi, Phi) with can: Psi -> Phi and var: Phi -> Psi has monodromies
T_psi = 1 + var can and T_phi = 1 + can var.  When var can = -(q + 1) on Psi,
(T_phi - 1)^2 = can (var can) var = -(q + 1)(T_phi - 1), which is the Hecke
relation (T - 1)(T + q) = 0.  Analytically T = exp(-2 pi i x d/dx); only the
algebraic identity is modelled.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DimensionMismatch, PreconditionFailed
from .linalg import Matrix, charpoly, inverse, rank, rational_spectrum
from .scalars import LaurentQ, Poly, RationalFunction


@dataclass(frozen=True)
class CanVarPair:
    psi_dim: int
    phi_dim: int
    can: Matrix  # phi_dim x psi_dim
    var: Matrix  # psi_dim x phi_dim

    def __post_init__(self):
        if self.can.shape != (self.phi_dim, self.psi_dim):
            raise DimensionMismatch(f"can must be {self.phi_dim}x{self.psi_dim}")
        if self.var.shape != (self.psi_dim, self.phi_dim):
            raise DimensionMismatch(f"var must be {self.psi_dim}x{self.phi_dim}")

    def satisfies_gluing_condition(self) -> bool:
        """1 is not an eigenvalue of can var (equivalently of var can); rational entries only."""
        for M in (self.can @ self.var, self.var @ self.can):
            if M.rows and charpoly(M)(1) == 0:
                return False
        return True


def _one_like(M: Matrix):
    return M._one()


def monodromy_ops(p: CanVarPair) -> tuple[Matrix, Matrix]:
    """(T_psi, T_phi) = (1 + var can, 1 + can var)."""
    one = _one_like(p.can) if p.can.rows * p.can.cols else _one_like(p.var)
    T_psi = Matrix.identity(p.psi_dim, one) + p.var @ p.can
    T_phi = Matrix.identity(p.phi_dim, one) + p.can @ p.var
    return T_psi, T_phi


def _as_q(q_exp) -> RationalFunction:
    if isinstance(q_exp, RationalFunction):
        return q_exp
    if isinstance(q_exp, LaurentQ):
        return RationalFunction.from_laurent(q_exp)
    return RationalFunction.const(q_exp)


def hecke_quadratic_check(p: CanVarPair, q_exp=None) -> bool:
    """Verify var can = -(q+1) and return whether (T_phi - 1)(T_phi + q) = 0."""
    q = _as_q(LaurentQ.q(1) if q_exp is None else q_exp)
    one = RationalFunction.const(1)
    vc = (p.var @ p.can).map(_as_q)
    if vc != Matrix.identity(p.psi_dim, one).scale(-(q + 1)):
        raise PreconditionFailed("var o can is not -(q+1) Id on Psi")
    _, T = monodromy_ops(p)
    T = T.map(_as_q)
    I = Matrix.identity(p.phi_dim, one)
    return ((T - I) @ (T + I.scale(q))).is_zero()


def nonzero_spectra_agree(p: CanVarPair) -> bool:
    """chi(can var) and chi(var can) differ by a power of t."""
    a = charpoly(p.can @ p.var) if p.phi_dim else Poly((1,))
    b = charpoly(p.var @ p.can) if p.psi_dim else Poly((1,))
    if a.degree < b.degree:
        a, b = b, a
    shift = Poly([0] * (a.degree - b.degree) + [1])
    return a == b * shift


def specialize(M: Matrix, q_value) -> Matrix:
    """Substitute q = q_value in a matrix over Q(q)."""
    return M.map(lambda c: _as_q(c).at(q_value))


def random_full_rank(rows: int, cols: int, rng: random.Random, q: RationalFunction, bound: int = 3) -> Matrix:
    """Random rows x cols matrix over Q[q] (entries of degree <= 1) of full column rank."""
    while True:
        M = Matrix(
            [[q * rng.randint(-bound, bound) + rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)],
            cols,
        )
        if rank(M) == cols:
            return M


def left_inverse(M: Matrix) -> Matrix:
    """(M^T M)^{-1} M^T; requires full column rank and a field where M^T M is invertible."""
    Mt = M.transpose()
    return inverse(Mt @ M) @ Mt


def _unitriangular(n: int, rng: random.Random, q, upper: bool, bound: int = 2) -> Matrix:
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(RationalFunction.const(1))
            elif (j > i) == upper:
                row.append(q * rng.randint(-bound, bound) + rng.randint(-bound, bound))
            else:
                row.append(RationalFunction.const(0))
        rows.append(row)
    return Matrix(rows, n)


def random_unimodular(n: int, rng: random.Random, q) -> tuple[Matrix, Matrix]:
    """(G, G^-1) with G = L U over Z[q], L and U unitriangular."""
    L = _unitriangular(n, rng, q, upper=False)
    U = _unitriangular(n, rng, q, upper=True)
    # unit pivots keep the inverses polynomial
    return L @ U, inverse(U) @ inverse(L)


def random_hecke_pair(psi_dim: int, phi_dim: int, rng: random.Random, generic: bool = False) -> CanVarPair:
    """can injective over Q(q) and var = -(q+1) times a left inverse of can.

    By default can = G [I; 0] H with G, H unimodular over Z[q] and the left
    inverse H^-1 [I | C] G^-1 for a random C, so every entry stays polynomial.
    ``generic`` instead draws can at random and uses (can^T can)^-1 can^T.
    """
    if phi_dim < psi_dim:
        raise DimensionMismatch("need phi_dim >= psi_dim for an injective can")
    q = RationalFunction.q()
    if generic:
        can = random_full_rank(phi_dim, psi_dim, rng, q)
        return CanVarPair(psi_dim, phi_dim, can, left_inverse(can).scale(-(q + 1)))
    zero, one = RationalFunction.const(0), RationalFunction.const(1)
    G, Gi = random_unimodular(phi_dim, rng, q)
    H, Hi = random_unimodular(psi_dim, rng, q)
    E = Matrix([[one if i == j else zero for j in range(psi_dim)] for i in range(phi_dim)], psi_dim)
    C = [[q * rng.randint(-2, 2) + rng.randint(-2, 2) for _ in range(phi_dim - psi_dim)] for _ in range(psi_dim)]
    P = Matrix([[one if i == j else zero for j in range(psi_dim)] + C[i] for i in range(psi_dim)], phi_dim)
    can = G @ E @ H
    var = (Hi @ P @ Gi).scale(-(q + 1))
    return CanVarPair(psi_dim, phi_dim, can, var)


def random_rational_pair(psi_dim: int, phi_dim: int, rng: random.Random, bound: int = 3) -> CanVarPair:
    from fractions import Fraction

    def rnd(r, c):
        return Matrix([[Fraction(rng.randint(-bound, bound)) for _ in range(c)] for _ in range(r)], c)

    return CanVarPair(psi_dim, phi_dim, rnd(phi_dim, psi_dim), rnd(psi_dim, phi_dim))


def hecke_suite(seed: int, psi_dim: int, phi_dim: int, trials: int = 100) -> dict:
    """Randomised Hecke check: counts of passes and failures."""
    rng = random.Random(seed)
    passed = failed = 0
    for _ in range(trials):
        try:
            ok = hecke_quadratic_check(random_hecke_pair(psi_dim, phi_dim, rng))
        except PreconditionFailed:
            ok = False
        passed += ok
        failed += not ok
    return {"seed": seed, "dims": [psi_dim, phi_dim], "trials": trials, "passed": passed, "failed": failed}


__all__ = [
    "CanVarPair",
    "hecke_quadratic_check",
    "hecke_suite",
    "left_inverse",
    "monodromy_ops",
    "nonzero_spectra_agree",
    "random_hecke_pair",
    "random_rational_pair",
    "rational_spectrum",
    "specialize",
]
