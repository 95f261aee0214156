"""Characteristic cycles from stalk Euler characteristics.

For a stratification with local Euler obstructions c_{S,T} (lower unitriangular
once strata are listed smallest first) the multiplicity of the conormal to S in
a characteristic cycle is m_S = sum_T c_{S,T} chi_T.  For standard modules the
strata are the nilpotent orbits of type A, the obstruction matrix is the
identity and chi_mu is the stalk Euler characteristic K_{lam,mu}(1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DimensionMismatch
from .partitions import (
    Partition,
    as_partition,
    dominance_leq,
    enumerate_partitions,
    kostka_foulkes,
    kostka_number,
)


@dataclass(frozen=True)
class StratPoset:
    """Strata listed along a linear extension of closure order, smallest first."""

    strata: tuple
    euler_obstruction: tuple  # square matrix as tuple of row tuples

    def __post_init__(self):
        c = tuple(tuple(int(x) for x in row) for row in self.euler_obstruction)
        object.__setattr__(self, "strata", tuple(self.strata))
        object.__setattr__(self, "euler_obstruction", c)
        k = len(self.strata)
        if len(c) != k or any(len(r) != k for r in c):
            raise DimensionMismatch("obstruction matrix must be square of size #strata")
        for i in range(k):
            if c[i][i] != 1:
                raise ValueError("obstruction matrix must have unit diagonal")
            if any(c[i][j] != 0 for j in range(i + 1, k)):
                raise ValueError("obstruction matrix must be lower triangular")

    @classmethod
    def trivial(cls, strata: Sequence) -> StratPoset:
        k = len(strata)
        return cls(tuple(strata), tuple(tuple(int(i == j) for j in range(k)) for i in range(k)))


def multiplicities_from_euler(p: StratPoset, chi: Sequence[int]) -> list[int]:
    """m = c chi."""
    c = p.euler_obstruction
    if len(chi) != len(c):
        raise DimensionMismatch(f"expected {len(c)} Euler characteristics, got {len(chi)}")
    return [sum(c[i][j] * chi[j] for j in range(i + 1)) for i in range(len(c))]


def euler_from_multiplicities(p: StratPoset, m: Sequence[int]) -> list[int]:
    """The unique chi with c chi = m (forward substitution)."""
    c = p.euler_obstruction
    if len(m) != len(c):
        raise DimensionMismatch(f"expected {len(c)} multiplicities, got {len(m)}")
    chi: list[int] = []
    for i in range(len(c)):
        chi.append(m[i] - sum(c[i][j] * chi[j] for j in range(i)))
    return chi


@dataclass(frozen=True)
class CharCycle:
    n: int
    mult: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "mult", {tuple(k): int(v) for k, v in self.mult.items() if v != 0})

    def __getitem__(self, mu) -> int:
        return self.mult.get(tuple(mu), 0)

    def support(self) -> list[Partition]:
        return sorted(self.mult, reverse=True)

    def to_json(self) -> dict:
        return {"n": self.n, "mult": [{"mu": list(mu), "m": self.mult[mu]} for mu in self.support()]}


def nilpotent_poset(n: int) -> StratPoset:
    """Partitions of n, dominance-increasing, with identity obstructions."""
    return StratPoset.trivial(list(reversed(enumerate_partitions(n))))


def stalk_euler_characteristics(lam: Sequence[int]) -> list[int]:
    """chi_mu = K_{lam,mu}(1) along ``nilpotent_poset(|lam|).strata``."""
    lam = as_partition(lam)
    poset = nilpotent_poset(sum(lam))
    return [kostka_foulkes(lam, mu)(1) for mu in poset.strata]


def cc_standard_module(lam: Sequence[int]) -> CharCycle:
    """sum_{mu <= lam} K_{lam,mu} [Lambda_mu]."""
    lam = as_partition(lam)
    n = sum(lam)
    poset = nilpotent_poset(n)
    m = multiplicities_from_euler(poset, stalk_euler_characteristics(lam))
    return CharCycle(n, {mu: x for mu, x in zip(poset.strata, m) if dominance_leq(mu, lam)})


def kz_dimension(lam: Sequence[int], mu: Sequence[int]) -> int:
    """dim KZ_mu of the standard module attached to lam."""
    return kostka_number(tuple(lam), tuple(mu))


def cc_table(n: int) -> list[dict]:
    return [dict(lam=list(lam), **cc_standard_module(lam).to_json()) for lam in enumerate_partitions(n)]
