"""ADHM data (X, Y, i, j): the almost commuting condition, stability, normal
forms, stratum labels and the model points of each smooth piece."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import DegenerateParameters, NotRegular, NotRelevant, PreconditionFailed, SizeMismatch
from .linalg import (
    Matrix,
    Subspace,
    centralizer_dim,
    commutator,
    determinant,
    generalized_eigenspaces,
    inverse,
    jordan_type,
    krylov_span,
    outer,
    rank,
    restrict,
)
from .partitions import Bipartition, Multipartition, Partition, as_partition

__all__ = [
    "AdhmDatum",
    "NormalForm",
    "StratumLabel",
    "almost_commuting_residual",
    "centralizer_dim",
    "classify_stratum",
    "conjugate_datum",
    "cyclicity_det",
    "is_smooth_point",
    "is_stable",
    "model_point",
    "normal_form",
    "random_invertible",
    "relevance_bipartition",
    "toeplitz_block",
    "weighting_limit",
]


def _vec(v) -> tuple:
    return tuple(Fraction(c) if isinstance(c, int) else c for c in v)


@dataclass(frozen=True)
class AdhmDatum:
    """A point (X, Y, i, j) of gl(V) x gl(V) x V x V*."""

    n: int
    X: Matrix
    Y: Matrix
    i: tuple
    j: tuple

    def __post_init__(self):
        n = self.n
        if self.X.shape != (n, n) or self.Y.shape != (n, n):
            raise SizeMismatch(f"X and Y must be {n}x{n}")
        if len(self.i) != n or len(self.j) != n:
            raise SizeMismatch(f"i and j must have length {n}")
        object.__setattr__(self, "i", _vec(self.i))
        object.__setattr__(self, "j", _vec(self.j))

    @classmethod
    def triple(cls, X: Matrix, Y: Matrix, v: Sequence) -> AdhmDatum:
        """(X, Y, v, 0)."""
        return cls(X.rows, X, Y, tuple(v), (Fraction(0),) * X.rows)


def almost_commuting_residual(d: AdhmDatum) -> Matrix:
    """[X, Y] + ji, where ji is the rank one map u -> j(u) i."""
    return commutator(d.X, d.Y) + outer(d.i, d.j)


def is_stable(d: AdhmDatum) -> bool:
    """C<X, Y> i = V."""
    return krylov_span([d.X, d.Y], d.i).is_full()


def cyclicity_det(X: Matrix, v: Sequence):
    """det [v | Xv | ... | X^{n-1} v]."""
    n = X.rows
    if len(v) != n:
        raise SizeMismatch("vector length does not match matrix")
    cols = [_vec(v)]
    for _ in range(n - 1):
        cols.append(X.apply(cols[-1]))
    return determinant(Matrix.from_columns(cols))


# ---------------------------------------------------------------- normal form


@dataclass(frozen=True)
class NormalForm:
    """Basis e_{i,j} = X^i Y^j v, 0 <= i < k, 0 <= j < s_i, ordered lexicographically."""

    k: int
    s: tuple
    basis: Matrix
    index: tuple  # the (i, j) labelling each column of ``basis``

    def column(self, i: int, j: int) -> int:
        return self.index.index((i, j))


def _is_nilpotent(M: Matrix) -> bool:
    return (M ** M.rows).is_zero()


def _check_commuting_stable(X: Matrix, Y: Matrix, v: Sequence, need_x_nilpotent: bool):
    n = X.rows
    if X.shape != (n, n) or Y.shape != (n, n) or len(v) != n:
        raise SizeMismatch("X, Y, v have inconsistent sizes")
    if need_x_nilpotent and not _is_nilpotent(X):
        raise PreconditionFailed("X is not nilpotent")
    if not _is_nilpotent(Y):
        raise PreconditionFailed("Y is not nilpotent")
    if not commutator(X, Y).is_zero():
        raise PreconditionFailed("X and Y do not commute")
    if not krylov_span([X, Y], v).is_full():
        raise PreconditionFailed("(X, Y, v) is not stable")


def normal_form(X: Matrix, Y: Matrix, v: Sequence) -> NormalForm:
    """Normal form basis for a stable commuting nilpotent triple.

    The X action is verified exactly; for Y only the shift on j < s_i - 1 and
    the membership Y e_{i, s_i - 1} in im X^{i+1} are asserted.

    The exact vanishing X e_{i,j} = 0 for j >= s_{i+1} can fail: on
    C[x,y]/(x^3, xy, y^2) with Y = y + x one gets X e_{0,1} = x^2.  Only
    X e_{i,j} in im X^{i+2} holds in general, and such triples raise
    PreconditionFailed.
    """
    _check_commuting_stable(X, Y, v, need_x_nilpotent=True)
    n = X.rows
    ranks = [n]
    P = Matrix.identity(n)
    while ranks[-1] > 0:
        P = P @ X
        ranks.append(rank(P))
    k = len(ranks) - 1
    s = tuple(ranks[i] - ranks[i + 1] for i in range(k))

    e: dict[tuple[int, int], tuple] = {}
    row = _vec(v)
    for i in range(k):
        w = row
        for j in range(s[i]):
            e[i, j] = w
            w = Y.apply(w)
        row = X.apply(row)
    index = tuple(sorted(e))
    B = Matrix.from_columns([e[ij] for ij in index])
    if rank(B) != n:
        raise PreconditionFailed("vectors X^i Y^j v do not form a basis")

    zero = (Fraction(0),) * n
    for (i, j), vec in e.items():
        want = e[i + 1, j] if (i < k - 1 and j < s[i + 1]) else zero
        if X.apply(vec) != want:
            raise PreconditionFailed(f"X e_({i},{j}) does not match the normal form")
        y = Y.apply(vec)
        if j < s[i] - 1:
            if y != e[i, j + 1]:
                raise PreconditionFailed(f"Y e_({i},{j}) != e_({i},{j + 1})")
        else:
            F = Subspace(n, (X ** (i + 1)).columns())
            if not F.contains(y):
                raise PreconditionFailed(f"Y e_({i},{j}) is not in im X^{i + 1}")
    return NormalForm(k, s, B, index)


def weighting_limit(X: Matrix, Y: Matrix, v: Sequence, a: int, b: int):
    """Weights -(a j + b i) on e_{i,j} and the split part Y0 of Y.

    Y0 e_{i,j} = e_{i,j+1} for j < s_i - 1 and 0 otherwise, returned in the
    original coordinates.  Stability of (X, Y0, v) and [X, Y0] = 0 are checked.
    """
    if not a > b:
        raise PreconditionFailed(f"need a > b, got a={a}, b={b}")
    nf = normal_form(X, Y, v)
    n = X.rows
    weights = {(i, j): -(a * j + b * i) for (i, j) in nf.index}
    pos = {ij: c for c, ij in enumerate(nf.index)}
    Y0e = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), c in pos.items():
        if j < nf.s[i] - 1:
            Y0e[pos[i, j + 1]][c] = Fraction(1)
    Y0 = nf.basis @ Matrix(Y0e, n) @ inverse(nf.basis)
    if not commutator(X, Y0).is_zero():
        raise PreconditionFailed("limit Y0 does not commute with X")
    if not krylov_span([X, Y0], v).is_full():
        raise PreconditionFailed("limit triple (X, Y0, v) is not stable")
    return weights, Y0


# ---------------------------------------------------------------- stratum labels


class StratumLabel(NamedTuple):
    """(lambda, nu): eigenvalue multiplicities of X and Jordan types of Y on each eigenspace."""

    lam: Partition
    nu: Multipartition

    @classmethod
    def make(cls, lam: Sequence[int], nu: Sequence[Sequence[int]]) -> StratumLabel:
        """Validate and put equal-part components in reverse-lexicographic order."""
        lam = tuple(lam)
        nu = tuple(as_partition(p) for p in nu)
        if len(lam) != len(nu):
            raise ValueError("lambda and nu have different lengths")
        if any(sum(p) != li for p, li in zip(nu, lam)):
            raise ValueError("|nu^(i)| must equal lambda_i")
        pairs = sorted(zip(lam, nu), reverse=True)
        lam2 = as_partition(x for x, _ in pairs)
        return cls(lam2, tuple(p for _, p in pairs))

    @property
    def n(self) -> int:
        return sum(self.lam)

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "nu": [list(p) for p in self.nu]}

    def __str__(self):
        return f"({list(self.lam)}, {[list(p) for p in self.nu]})"


def classify_stratum(X: Matrix, Y: Matrix, v: Sequence) -> StratumLabel:
    _check_commuting_stable(X, Y, v, need_x_nilpotent=False)
    pairs = []
    for _, W in generalized_eigenspaces(X):
        pairs.append((W.dim, jordan_type(restrict(Y, W))))
    return StratumLabel.make([d for d, _ in pairs], [p for _, p in pairs])


def is_smooth_point(label: StratumLabel) -> bool:
    return all(len(p) == 1 for p in label.nu)


def relevance_bipartition(X: Matrix, v: Sequence) -> Bipartition:
    """(lambda, mu): eigenspaces where v projects cyclically, resp. to zero."""
    n = X.rows
    if centralizer_dim(X) != n:
        raise NotRegular("X is not regular")
    spaces = generalized_eigenspaces(X)
    # coordinates of v along the direct sum of generalized eigenspaces
    cols = [b for _, W in spaces for b in W.basis]
    coords = inverse(Matrix.from_columns(cols)).apply(_vec(v))
    lam, mu = [], []
    off = 0
    for ev, W in spaces:
        d = W.dim
        piece = coords[off: off + d]
        off += d
        if all(c == 0 for c in piece):
            mu.append(d)
            continue
        N = restrict(X - Matrix.identity(n).scale(ev), W)
        if krylov_span([N], piece).is_full():
            lam.append(d)
        else:
            raise NotRelevant(f"projection of v to the eigenvalue {ev} space is neither zero nor cyclic")
    return Bipartition(tuple(sorted(lam, reverse=True)), tuple(sorted(mu, reverse=True)))


# ---------------------------------------------------------------- model points


def toeplitz_block(t, a: Sequence) -> Matrix:
    """Upper triangular Toeplitz matrix with diagonal t and superdiagonals a_1, a_2, ..."""
    d = len(a) + 1
    diag = [t] + list(a)
    return Matrix([[diag[c - r] if c >= r else 0 for c in range(d)] for r in range(d)], d)


def model_point(mu: Sequence, lam: Sequence[int], a_params: Sequence[Sequence] | None = None) -> AdhmDatum:
    """(X_lam(a), Y_lam, v_lam, 0) with eigenvalue mu[i] on the block of size lam[i].

    Blocks are laid out by increasing size; Y_lam is block Jordan and v_lam has a
    1 at the last index of every block.  ``a_params`` defaults to (1, 0, ..., 0)
    on every block, which makes X regular.
    """
    lam = as_partition(lam)
    mu = [Fraction(m) for m in mu]
    if len(mu) != len(lam):
        raise SizeMismatch("need one eigenvalue per part of lambda")
    if len(set(mu)) != len(mu):
        raise DegenerateParameters("eigenvalues must be distinct")
    if a_params is None:
        a_params = [[1] + [0] * (d - 2) if d > 1 else [] for d in lam]
    if len(a_params) != len(lam) or any(len(a) != d - 1 for a, d in zip(a_params, lam)):
        raise SizeMismatch("block of size d needs d - 1 parameters")
    order = sorted(range(len(lam)), key=lambda b: lam[b])
    Xb, Yb, v = [], [], []
    for b in order:
        d = lam[b]
        Xb.append(toeplitz_block(mu[b], [Fraction(x) for x in a_params[b]]))
        Yb.append(Matrix.jordan_block(d))
        v.extend([Fraction(0)] * (d - 1) + [Fraction(1)])
    X = Matrix.block_diag(Xb)
    Y = Matrix.block_diag(Yb)
    return AdhmDatum.triple(X, Y, v)


def random_invertible(n: int, rng: random.Random, bound: int = 2) -> Matrix:
    """Product of random unitriangular integer matrices (determinant 1)."""
    L = [[Fraction(1) if i == j else (Fraction(rng.randint(-bound, bound)) if i > j else Fraction(0)) for j in range(n)] for i in range(n)]
    U = [[Fraction(1) if i == j else (Fraction(rng.randint(-bound, bound)) if i < j else Fraction(0)) for j in range(n)] for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    P = [[Fraction(1) if perm[i] == j else Fraction(0) for j in range(n)] for i in range(n)]
    return Matrix(P, n) @ Matrix(L, n) @ Matrix(U, n)


def conjugate_datum(d: AdhmDatum, g: Matrix) -> AdhmDatum:
    """g . (X, Y, i, j) = (g X g^-1, g Y g^-1, g i, j g^-1)."""
    gi = inverse(g)
    j_row = Matrix([list(d.j)], d.n) @ gi
    return AdhmDatum(d.n, g @ d.X @ gi, g @ d.Y @ gi, g.apply(d.i), j_row.row(0))


def datum_to_json(d: AdhmDatum) -> dict:
    from .scalars import scalar_to_json

    def mat(M: Matrix):
        return {"rows": M.rows, "cols": M.cols, "entries": [scalar_to_json(c) for r in M.to_lists() for c in r]}

    return {
        "n": d.n,
        "X": mat(d.X),
        "Y": mat(d.Y),
        "i": [scalar_to_json(c) for c in d.i],
        "j": [scalar_to_json(c) for c in d.j],
    }


def datum_from_json(obj: dict) -> AdhmDatum:
    from .scalars import scalar_from_json

    def mat(m):
        r, c = int(m["rows"]), int(m["cols"])
        vals = [scalar_from_json(x) for x in m["entries"]]
        return Matrix([vals[k * c: (k + 1) * c] for k in range(r)], c)

    return AdhmDatum(
        int(obj["n"]),
        mat(obj["X"]),
        mat(obj["Y"]),
        tuple(scalar_from_json(x) for x in obj["i"]),
        tuple(scalar_from_json(x) for x in obj["j"]),
    )
