"""Exact dense linear algebra over any exact field.

Entries may be ints, ``Fraction``, ``Cyclotomic`` or ``RationalFunction``; the
only requirements are field arithmetic and ``== 0``.  Vectors are tuples.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NonRationalSpectrum, NotNilpotent
from .partitions import Partition
from .scalars import Poly, exact_div


def _f(c):
    return Fraction(c) if isinstance(c, int) else c


class Matrix:
    """Immutable dense matrix stored as a tuple of row tuples."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Iterable[Sequence], cols: int | None = None):
        e = tuple(tuple(_f(c) for c in row) for row in entries)
        if cols is None:
            cols = len(e[0]) if e else 0
        if any(len(r) != cols for r in e):
            raise DimensionMismatch("ragged matrix rows")
        self._e = e
        self.rows = len(e)
        self.cols = cols

    # constructors
    @classmethod
    def zero(cls, rows: int, cols: int | None = None, zero=Fraction(0)) -> Matrix:
        cols = rows if cols is None else cols
        return cls([[zero] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int, one=Fraction(1)) -> Matrix:
        z = one - one
        return cls([[one if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def diag(cls, values: Sequence) -> Matrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> Matrix:
        if not columns:
            return cls([[] for _ in range(rows or 0)], 0)
        r = len(columns[0])
        return cls([[col[i] for col in columns] for i in range(r)], len(columns))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> Matrix:
        """Matrix unit E_{ij} (0-based)."""
        return cls([[1 if (a, b) == (i, j) else 0 for b in range(n)] for a in range(n)], n)

    @classmethod
    def block_diag(cls, blocks: Sequence[Matrix]) -> Matrix:
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[Fraction(0)] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls(out, m)

    @classmethod
    def jordan_block(cls, n: int, eigenvalue=0) -> Matrix:
        """Upper Jordan block: J e_{k+1} = e_k + eigenvalue e_{k+1}."""
        return cls([[eigenvalue if i == j else (1 if j == i + 1 else 0) for j in range(n)] for i in range(n)], n)

    # access
    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> tuple:
        return self._e[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._e)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    def to_lists(self) -> list[list]:
        return [list(r) for r in self._e]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(c == 0 for r in self._e for c in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r1, r2 in zip(self._e, other._e) for a, b in zip(r1, r2)
        )

    def __hash__(self):
        return hash(self._e)

    def __repr__(self):
        return "Matrix([" + ", ".join("[" + ", ".join(str(c) for c in r) + "]" for r in self._e) + "])"

    # arithmetic
    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._e, other._e)], self.cols)

    def __neg__(self) -> Matrix:
        return Matrix([[-a for a in r] for r in self._e], self.cols)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, c) -> Matrix:
        return Matrix([[a * c for a in r] for r in self._e], self.cols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __matmul__(self, other: Matrix) -> Matrix:
        return self.matmul(other)

    def matmul(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        out = []
        for r in self._e:
            nz = [(k, a) for k, a in enumerate(r) if a != 0]
            row = []
            for c in ocols:
                acc = 0
                for k, a in nz:
                    b = c[k]
                    if b != 0:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out, other.cols)

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise DimensionMismatch("vector length does not match matrix")
        out = []
        for r in self._e:
            acc = 0
            for a, b in zip(r, v):
                if a != 0 and b != 0:
                    acc = acc + a * b
            out.append(_f(acc))
        return tuple(out)

    def __pow__(self, k: int) -> Matrix:
        if not self.is_square():
            raise DimensionMismatch("power of a non-square matrix")
        if k < 0:
            return inverse(self) ** (-k)
        out = Matrix.identity(self.rows, self._one())
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def _one(self):
        for r in self._e:
            for c in r:
                if not isinstance(c, Fraction):
                    return c - c + 1
        return Fraction(1)

    def transpose(self) -> Matrix:
        return Matrix([list(c) for c in self.columns()], self.rows)

    T = property(transpose)

    def trace(self):
        acc = 0
        for i in range(min(self.rows, self.cols)):
            acc = acc + self._e[i][i]
        return _f(acc)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix([[self._e[i][j] for j in cols] for i in rows], len(cols))

    def map(self, f) -> Matrix:
        return Matrix([[f(c) for c in r] for r in self._e], self.cols)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def outer(col: Sequence, row: Sequence) -> Matrix:
    return Matrix([[a * b for b in row] for a in col], len(row))


def kron(a: Matrix, b: Matrix) -> Matrix:
    out = []
    for i in range(a.rows):
        for k in range(b.rows):
            out.append([a[i, j] * b[k, l] for j in range(a.cols) for l in range(b.cols)])
    return Matrix(out, a.cols * b.cols)


# ---------------------------------------------------------------- elimination


def _rref_rows(rows: list[list], ncols: int):
    """In-place reduced row echelon form; returns pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        lead = rows[r][c]
        if lead != 1:
            inv = exact_div(1, lead)
            rows[r] = [x * inv for x in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    rows[i] = [x - f * y for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return pivots


class Subspace:
    """Subspace of K^n held by the RREF of a spanning set (canonical)."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        rows = [[_f(c) for c in v] for v in vectors]
        if any(len(r) != ambient_dim for r in rows):
            raise DimensionMismatch("vector length does not match ambient dimension")
        pivots = _rref_rows(rows, ambient_dim)
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(r) for r in rows[: len(pivots)])
        self.pivots = tuple(pivots)

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, Matrix.identity(n).columns())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def contains(self, v: Sequence) -> bool:
        w = [_f(c) for c in v]
        for b, p in zip(self.basis, self.pivots):
            f = w[p]
            if f != 0:
                w = [x - f * y for x, y in zip(w, b)]
        return all(x == 0 for x in w)

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.basis)

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace({self.ambient_dim}, {[[str(c) for c in b] for b in self.basis]})"

    def coordinates(self, v: Sequence) -> tuple:
        """Coefficients of v in the echelon basis (v must lie in the span)."""
        if not self.contains(v):
            raise ValueError("vector not in subspace")
        return tuple(_f(v[p]) for p in self.pivots)


def rref_rank_kernel(M: Matrix):
    """Return (rank, kernel, rref)."""
    rows = [list(r) for r in M._e]
    pivots = _rref_rows(rows, M.cols)
    rank = len(pivots)
    free = [c for c in range(M.cols) if c not in pivots]
    kern = []
    zero = Fraction(0)
    for fcol in free:
        v = [zero] * M.cols
        v[fcol] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][fcol]
        kern.append(v)
    return rank, Subspace(M.cols, kern), Matrix(rows, M.cols)


def rank(M: Matrix) -> int:
    rows = [list(r) for r in M._e]
    return len(_rref_rows(rows, M.cols))


def kernel(M: Matrix) -> Subspace:
    return rref_rank_kernel(M)[1]


def image(M: Matrix) -> Subspace:
    return Subspace(M.rows, M.columns())


def determinant(M: Matrix):
    if not M.is_square():
        raise DimensionMismatch("determinant of a non-square matrix")
    rows = [list(r) for r in M._e]
    n = M.rows
    det = M._one()
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return det - det
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        lead = rows[c][c]
        det = det * lead
        inv = exact_div(1, lead)
        for i in range(c + 1, n):
            f = rows[i][c]
            if f != 0:
                f = f * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det


def inverse(M: Matrix) -> Matrix:
    from .errors import DivisionByZero

    if not M.is_square():
        raise DimensionMismatch("inverse of a non-square matrix")
    n = M.rows
    one = M._one()
    zero = one - one
    rows = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(M._e)]
    pivots = _rref_rows(rows, n)
    if len(pivots) < n:
        raise DivisionByZero("matrix is singular")
    return Matrix([r[n:] for r in rows], n)


def solve(A: Matrix, B: Matrix) -> Matrix | None:
    """Some X with A X = B, or None if inconsistent."""
    if A.rows != B.rows:
        raise DimensionMismatch("row counts differ")
    rows = [list(a) + list(b) for a, b in zip(A._e, B._e)]
    pivots = _rref_rows(rows, A.cols + B.cols)
    if any(p >= A.cols for p in pivots):
        return None
    zero = Fraction(0)
    X = [[zero] * B.cols for _ in range(A.cols)]
    for r, p in enumerate(pivots):
        X[p] = rows[r][A.cols:]
    return Matrix(X, B.cols)


# ---------------------------------------------------------------- polynomials of matrices


def charpoly(M: Matrix) -> Poly:
    """det(t I - M) by Faddeev-LeVerrier."""
    if not M.is_square():
        raise DimensionMismatch("characteristic polynomial of a non-square matrix")
    n = M.rows
    one = M._one()
    coeffs = [0] * (n + 1)
    coeffs[n] = one
    I = Matrix.identity(n, one)
    Mk = Matrix.zero(n, n, one - one)
    c = one
    for k in range(1, n + 1):
        Mk = M @ (Mk + I.scale(c))
        c = -exact_div(Mk.trace(), k)
        coeffs[n - k] = c
    return Poly(coeffs)


def poly_of_matrix(p: Poly, M: Matrix) -> Matrix:
    n = M.rows
    one = M._one()
    out = Matrix.zero(n, n, one - one)
    I = Matrix.identity(n, one)
    for c in reversed(p.coeffs):
        out = out @ M + I.scale(c)
    return out


def minimal_polynomial(M: Matrix) -> Poly:
    """Monic minimal polynomial via the first linear dependency among powers."""
    n = M.rows
    one = M._one()
    powers: list[tuple] = []
    P = Matrix.identity(n, one)
    for k in range(n + 1):
        flat = tuple(c for r in P._e for c in r)
        powers.append(flat)
        A = Matrix.from_columns(powers[:-1]) if k else None
        if k:
            sol = solve(A, Matrix([[x] for x in flat], 1))
            if sol is not None:
                return Poly([-sol[i, 0] for i in range(k)] + [one])
        P = P @ M
    raise AssertionError("Cayley-Hamilton violated")


def _divisors(m: int) -> list[int]:
    m = abs(m)
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Poly) -> list[tuple[Fraction, int]]:
    """Rational roots with multiplicity; raises NonRationalSpectrum if p does not split."""
    p = Poly(Fraction(c) for c in p.coeffs)
    if p.degree < 1:
        return []
    out: dict[Fraction, int] = {}
    # strip zero roots
    k = 0
    while p.coeff(0) == 0:
        p = p // Poly((0, 1))
        k += 1
    if k:
        out[Fraction(0)] = k
    while p.degree >= 1:
        den = 1
        for c in p.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in p.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        ints = [c // g for c in ints]
        found = None
        for a in _divisors(ints[0]):
            for b in _divisors(ints[-1]):
                for cand in (Fraction(a, b), Fraction(-a, b)):
                    if p(cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            raise NonRationalSpectrum(f"characteristic factor {p} has no rational root")
        while p.degree >= 1 and p(found) == 0:
            p = p // Poly((-found, 1))
            out[found] = out.get(found, 0) + 1
    return sorted(out.items())


def rational_spectrum(X: Matrix) -> list[tuple[Fraction, int]]:
    """Sorted list of (eigenvalue, algebraic multiplicity)."""
    return rational_roots(charpoly(X))


def generalized_eigenspaces(X: Matrix) -> list[tuple[Fraction, Subspace]]:
    n = X.rows
    out = []
    for lam, _ in rational_spectrum(X):
        N = X - Matrix.identity(n).scale(lam)
        out.append((lam, kernel(N ** n)))
    return out


def restrict(X: Matrix, W: Subspace) -> Matrix:
    """Matrix of X on an X-invariant subspace W in its echelon basis."""
    cols = []
    for b in W.basis:
        cols.append(W.coordinates(X.apply(b)))
    return Matrix.from_columns(cols) if cols else Matrix.zero(0)


def jordan_type(N: Matrix) -> Partition:
    """Jordan block sizes of a nilpotent matrix, largest first."""
    n = N.rows
    ranks = [n]
    P = Matrix.identity(n)
    while ranks[-1] > 0:
        P = P @ N
        r = rank(P)
        if r == ranks[-1]:
            raise NotNilpotent("matrix is not nilpotent")
        ranks.append(r)
    ranks.append(0)
    parts = []
    for k in range(1, len(ranks) - 1):
        count = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1]
        parts.extend([k] * count)
    return tuple(sorted(parts, reverse=True))


def krylov_span(generators: Sequence[Matrix], v: Sequence) -> Subspace:
    """Smallest subspace containing v and stable under every generator."""
    n = len(v)
    for g in generators:
        if g.shape != (n, n):
            raise DimensionMismatch("generator size does not match vector")
    span = Subspace(n, [v])
    frontier = [tuple(_f(c) for c in v)]
    while frontier:
        nxt = []
        for w in frontier:
            for g in generators:
                u = g.apply(w)
                if not span.contains(u):
                    span = Subspace(n, span.basis + (u,))
                    nxt.append(u)
        frontier = nxt
    return span


def centralizer_dim(X: Matrix) -> int:
    """dim {Z : XZ = ZX}, from the kernel of Z -> XZ - ZX on vec(Z)."""
    n = X.rows
    I = Matrix.identity(n)
    # row-major vec: vec(XZ) = (X kron I) vec Z, vec(ZX) = (I kron X^T) vec Z
    op = kron(X, I) - kron(I, X.transpose())
    return n * n - rank(op)


def column_vector(v: Sequence) -> Matrix:
    return Matrix([[c] for c in v], 1)


def std_basis(n: int, i: int) -> tuple:
    """e_i in K^n (0-based)."""
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(n))
