"""The decomposition of the nilpotent Lagrangian into pieces labelled by (lambda, nu),
and the group pi_1(GL(V)/Sigma_lambda) with its characters L_q.

The full fundamental group of a smooth piece is an extension of the braid-type
group B_lambda (configurations of labelled points in C) by Z; only its quotient
by the pure braid part is modelled here, as pairs (w, n) with w in Sigma_lambda
and n in (1/2)Z subject to sgn(w) = exp(2 pi i n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .adhm import StratumLabel
from .errors import LabelMismatch
from .partitions import Partition, as_partition, enumerate_partitions, multipartitions_of_type
from .scalars import LaurentQ


def stratum_dimension(label: StratumLabel) -> int:
    """n - sum_i (len(nu^(i)) - 1)."""
    return label.n - sum(len(p) - 1 for p in label.nu)


def bb_piece_dim(lam: Sequence[int]) -> int:
    """Dimension n - len(lam) of the Bialynicki-Birula cell P_lam in the punctual piece."""
    lam = as_partition(lam)
    return sum(lam) - len(lam)


def split_one_part(lam: Sequence[int]) -> list[Partition]:
    """Partitions obtained by splitting one part of lam into two positive parts."""
    out = set()
    for i, x in enumerate(lam):
        rest = list(lam[:i]) + list(lam[i + 1:])
        for a in range(1, x // 2 + 1):
            out.add(tuple(sorted(rest + [a, x - a], reverse=True)))
    return sorted(out, reverse=True)


def codim1_components(label: StratumLabel) -> tuple[Partition, Partition]:
    """The two components (lam, lam') whose closures contain a codimension one piece.

    lam' replaces the part lam_i carrying the two-part nu^(i) by those two parts.
    """
    two = [i for i, p in enumerate(label.nu) if len(p) == 2]
    if len(two) != 1 or any(len(p) > 2 for p in label.nu):
        raise ValueError(f"{label} is not a codimension one piece")
    i = two[0]
    rest = list(label.lam[:i]) + list(label.lam[i + 1:])
    return label.lam, tuple(sorted(rest + list(label.nu[i]), reverse=True))


@dataclass(frozen=True)
class StrataCatalogue:
    n: int
    strata: tuple  # of (StratumLabel, dimension)
    components: tuple  # of Partition
    adjacency: tuple  # of (Partition, Partition), coarser first

    def smooth_strata(self) -> list[StratumLabel]:
        return [lab for lab, _ in self.strata if all(len(p) == 1 for p in lab.nu)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "strata": [dict(lab.to_json(), dimension=d) for lab, d in self.strata],
            "components": [list(p) for p in self.components],
            "adjacency": [[list(a), list(b)] for a, b in self.adjacency],
        }


def enumerate_strata(n: int) -> StrataCatalogue:
    """All pieces (lam, nu) of size n, reverse-lex on lam then on nu."""
    if n < 1:
        raise ValueError("n must be positive")
    strata = []
    for lam in enumerate_partitions(n):
        for nu in multipartitions_of_type(lam):
            lab = StratumLabel(lam, nu)
            strata.append((lab, stratum_dimension(lab)))
    comps = tuple(enumerate_partitions(n))
    adj = tuple((lam, fine) for lam in comps for fine in split_one_part(lam))
    return StrataCatalogue(n, tuple(strata), comps, adj)


# ---------------------------------------------------------------- pi_1 model


def _block_offsets(lam: Partition) -> list[int]:
    offs, acc = [], 0
    for d in lam:
        offs.append(acc)
        acc += d
    return offs


def induced_permutation(lam: Partition, w: Sequence[int]) -> list[int]:
    """Permutation of {0..n-1} moving block b onto block w[b], preserving order inside blocks."""
    offs = _block_offsets(lam)
    perm = [0] * sum(lam)
    for b, d in enumerate(lam):
        for k in range(d):
            perm[offs[b] + k] = offs[w[b]] + k
    return perm


def perm_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class PiOneElement:
    """(w, n2/2) with w permuting equal-size blocks of lam and sgn(w) = (-1)^n2."""

    lam: Partition
    w: tuple
    n2: int

    def __post_init__(self):
        lam = as_partition(self.lam)
        w = tuple(int(x) for x in self.w)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "w", w)
        if sorted(w) != list(range(len(lam))):
            raise ValueError(f"{w} is not a permutation of the {len(lam)} blocks")
        if any(lam[w[b]] != lam[b] for b in range(len(lam))):
            raise ValueError("w must map each block to a block of the same size")
        if self.sign() != (-1) ** (self.n2 % 2):
            raise ValueError(f"sgn(w) = {self.sign()} but exp(2 pi i n) = {(-1) ** (self.n2 % 2)} for n = {Fraction(self.n2, 2)}")

    @classmethod
    def identity(cls, lam: Sequence[int]) -> PiOneElement:
        lam = as_partition(lam)
        return cls(lam, tuple(range(len(lam))), 0)

    @classmethod
    def central(cls, lam: Sequence[int], m: int = 1) -> PiOneElement:
        """(1, m): the image of m times the generator of pi_1(GL(V))."""
        lam = as_partition(lam)
        return cls(lam, tuple(range(len(lam))), 2 * m)

    def sign(self) -> int:
        """Sign in S_n of the permutation induced on standard basis vectors."""
        return perm_sign(induced_permutation(self.lam, self.w))

    @property
    def n_half(self) -> Fraction:
        return Fraction(self.n2, 2)

    def inverse(self) -> PiOneElement:
        inv = [0] * len(self.w)
        for b, c in enumerate(self.w):
            inv[c] = b
        return PiOneElement(self.lam, tuple(inv), -self.n2)


def pi1_mul(g: PiOneElement, h: PiOneElement) -> PiOneElement:
    """(w_g w_h, n_g + n_h), with (w_g w_h)(b) = w_g(w_h(b))."""
    if g.lam != h.lam:
        raise LabelMismatch(f"elements for {g.lam} and {h.lam} cannot be multiplied")
    return PiOneElement(g.lam, tuple(g.w[h.w[b]] for b in range(len(g.w))), g.n2 + h.n2)


def lq_value(g: PiOneElement, alpha_exp=1) -> LaurentQ:
    """The character (w, n) -> q^(n * alpha_exp) as a formal monomial.

    With alpha_exp = 1 the central generator (1, 1) maps to q.
    """
    exp2 = Fraction(g.n2) * Fraction(alpha_exp)
    if exp2.denominator != 1:
        raise ValueError("exponent n * alpha_exp must be a half-integer")
    return LaurentQ({int(exp2): 1})
