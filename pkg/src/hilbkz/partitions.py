"""Partitions, dominance, semistandard tableaux, Kostka numbers and charge.

A partition is a plain tuple of positive integers in weakly decreasing order;
``()`` is the empty partition.  Multipartitions are tuples of partitions.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import SizeMismatch
from .scalars import Poly

Partition = tuple  # tuple[int, ...]
Multipartition = tuple  # tuple[Partition, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and return ``parts`` as a partition tuple."""
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return p


def size(lam: Sequence[int]) -> int:
    return sum(lam)


class Bipartition(NamedTuple):
    lam: Partition
    mu: Partition

    @property
    def n(self) -> int:
        return sum(self.lam) + sum(self.mu)


def _check_same_size(a, b):
    if sum(a) != sum(b):
        raise SizeMismatch(f"|{list(a)}| = {sum(a)} but |{list(b)}| = {sum(b)}")


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff mu <= lam in dominance order."""
    _check_same_size(mu, lam)
    sm = sl = 0
    for k in range(max(len(mu), len(lam))):
        sm += mu[k] if k < len(mu) else 0
        sl += lam[k] if k < len(lam) else 0
        if sm > sl:
            return False
    return True


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= i) for i in range(1, lam[0] + 1))


def n_statistic(lam: Sequence[int]) -> int:
    """n(lam) = sum (i-1) lam_i."""
    return sum(i * x for i, x in enumerate(lam))


def hook_lengths(lam: Sequence[int]) -> list[int]:
    lc = conjugate(lam)
    return [lam[i] - j + lc[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n, n))


def horizontal_strips(outer_from: Partition, k: int, bound: Partition | None = None) -> Iterator[Partition]:
    """Partitions obtained from ``outer_from`` by adding a horizontal strip of k boxes,
    optionally staying inside ``bound``."""
    rows = list(outer_from)
    nrows = len(rows) + 1
    if bound is not None:
        nrows = min(nrows, len(bound))

    def rec(i: int, left: int, acc: list[int]):
        if i == nrows:
            if left == 0:
                yield tuple(x for x in acc if x > 0)
            return
        cur = rows[i] if i < len(rows) else 0
        # horizontal strip: new row i may not exceed old row i-1
        cap = left if i == 0 else min(left, rows[i - 1] - cur)
        if bound is not None:
            cap = min(cap, bound[i] - cur)
        for add in range(cap, -1, -1):
            yield from rec(i + 1, left - add, acc + [cur + add])

    yield from rec(0, k, [])


def ssyt(lam: Sequence[int], content: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard tableaux of shape lam with content (multiplicities of 1, 2, ...).

    Tableaux are tuples of rows (English notation).
    """
    lam = tuple(lam)
    _check_same_size(lam, content)

    def rec(letter: int, shape: Partition, rows: list[list[int]]):
        if letter == len(content):
            if shape == lam:
                yield tuple(tuple(r) for r in rows)
            return
        for nxt in horizontal_strips(shape, content[letter], lam):
            new_rows = [list(r) for r in rows] + [[] for _ in range(len(nxt) - len(rows))]
            for i, length in enumerate(nxt):
                new_rows[i].extend([letter + 1] * (length - (shape[i] if i < len(shape) else 0)))
            yield from rec(letter + 1, nxt, new_rows)

    yield from rec(0, (), [])


def kostka_number(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of SSYT of shape lam and content mu."""
    _check_same_size(lam, mu)
    if not dominance_leq(mu, lam):
        return 0
    return sum(1 for _ in ssyt(lam, mu))


def reading_word(tableau) -> list[int]:
    """Rows from bottom to top, each read left to right."""
    return [x for row in reversed(tableau) for x in row]


def charge(word: Sequence[int]) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content.

    Standard subwords are extracted by scanning leftwards cyclically for
    1, 2, 3, ...; the first letter found each time is taken.  In a standard
    subword the letter 1 gets index 0 and r+1 gets index(r) + 1 when it sits
    to the right of r, otherwise index(r).  Charge sums the indices.
    """
    letters = list(word)
    used = [False] * len(letters)
    total = 0
    remaining = len(letters)
    while remaining:
        # start from the right end for the letter 1
        pos = len(letters)
        index = 0
        r = 1
        while True:
            found = None
            # leftward scan from pos - 1, wrapping once
            order = list(range(pos - 1, -1, -1)) + list(range(len(letters) - 1, pos - 1, -1))
            for p in order:
                if not used[p] and letters[p] == r:
                    found = p
                    break
            if found is None:
                break
            if r > 1 and found > pos:
                index += 1
            total += index
            used[found] = True
            remaining -= 1
            pos = found
            r += 1
    return total


def kostka_foulkes(lam: Sequence[int], mu: Sequence[int]) -> Poly:
    """K_{lam,mu}(t) = sum of t^charge over SSYT of shape lam and content mu."""
    _check_same_size(lam, mu)
    coeffs: dict[int, int] = {}
    if dominance_leq(mu, lam):
        for tab in ssyt(lam, mu):
            c = charge(reading_word(tab))
            coeffs[c] = coeffs.get(c, 0) + 1
    if not coeffs:
        return Poly()
    return Poly([coeffs.get(k, 0) for k in range(max(coeffs) + 1)])


def multipartitions_of_type(lam: Sequence[int]) -> list[Multipartition]:
    """All nu with |nu^(i)| = lam_i, canonical for equal parts.

    For a run of equal parts the components are a non-increasing sequence in
    reverse-lexicographic order, so each unordered choice appears once.
    """
    from itertools import combinations_with_replacement, product

    groups: list[list[Multipartition]] = []
    i = 0
    lam = tuple(lam)
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        parts = enumerate_partitions(lam[i])  # already reverse-lex descending
        groups.append(list(combinations_with_replacement(parts, j - i)))
        i = j
    out = []
    for choice in product(*groups):
        out.append(tuple(p for grp in choice for p in grp))
    return out
