import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbkz.errors import SizeMismatch
from hilbkz.partitions import (
    charge,
    conjugate,
    dominance_leq,
    enumerate_partitions,
    hook_lengths,
    kostka_foulkes,
    kostka_number,
    multipartitions_of_type,
    n_statistic,
    reading_word,
    ssyt,
)
from oracles import brute_ssyt_count, fake_degree, partition_count, syt_count


def pairs(nmax):
    for n in range(1, nmax + 1):
        ps = enumerate_partitions(n)
        for lam in ps:
            for mu in ps:
                yield lam, mu


def test_dominance_examples():
    assert dominance_leq((1, 1, 1), (3,))
    assert not dominance_leq((3,), (1, 1, 1))
    assert dominance_leq((2, 2), (3, 1))
    with pytest.raises(SizeMismatch):
        dominance_leq((2,), (1, 1, 1))


def test_conjugate_examples():
    assert conjugate((3,)) == (1, 1, 1)
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)


def test_kostka_examples():
    assert kostka_number((2, 1), (2, 1)) == 1
    assert kostka_number((1, 1), (2,)) == 0
    assert kostka_number((2, 1), (1, 1, 1)) == 2


def test_kostka_foulkes_examples():
    t = [0, 1]
    assert list(kostka_foulkes((2, 1), (2, 1)).coeffs) == [1]
    assert list(kostka_foulkes((2,), (1, 1)).coeffs) == t
    assert list(kostka_foulkes((2, 1), (1, 1, 1)).coeffs) == [0, 1, 1]


def test_kostka_foulkes_larger_values():
    # hand-checked charges
    assert list(kostka_foulkes((2, 2, 1), (1,) * 5).coeffs) == [0, 0, 1, 1, 1, 1, 1]
    assert list(kostka_foulkes((3, 1), (2, 1, 1)).coeffs) == [0, 1, 1]
    assert list(kostka_foulkes((2, 2), (2, 1, 1)).coeffs) == [0, 1]


def test_enumerate_examples():
    assert enumerate_partitions(0) == [()]
    assert enumerate_partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(enumerate_partitions(6)) == 11


@pytest.mark.parametrize("n", range(0, 13))
def test_partition_count_oracle(n):
    ps = enumerate_partitions(n)
    assert len(ps) == partition_count(n)
    assert len(set(ps)) == len(ps)
    assert ps == sorted(ps, reverse=True)


@pytest.mark.parametrize("lam,mu", list(pairs(5)))
def test_kostka_matches_brute_force(lam, mu):
    assert kostka_number(lam, mu) == brute_ssyt_count(lam, mu)
    assert len(list(ssyt(lam, mu))) == kostka_number(lam, mu)


@pytest.mark.parametrize("lam,mu", list(pairs(6)))
def test_kostka_foulkes_specialises_to_kostka(lam, mu):
    assert kostka_foulkes(lam, mu)(1) == kostka_number(lam, mu)


@pytest.mark.parametrize("n", range(1, 8))
def test_kostka_foulkes_fake_degree(n):
    ones = (1,) * n
    for lam in enumerate_partitions(n):
        assert list(kostka_foulkes(lam, ones).coeffs) == fake_degree(lam)


@pytest.mark.parametrize("n", range(1, 7))
def test_single_row_and_diagonal(n):
    for mu in enumerate_partitions(n):
        # K_{(n), mu}(t) = t^{n(mu)}
        assert list(kostka_foulkes((n,), mu).coeffs) == [0] * n_statistic(mu) + [1]
        assert list(kostka_foulkes(mu, mu).coeffs) == [1]


def test_syt_count_vs_hook_formula():
    from math import factorial, prod

    for n in range(1, 9):
        for lam in enumerate_partitions(n):
            assert syt_count(lam) * prod(hook_lengths(lam)) == factorial(n)
            assert kostka_number(lam, (1,) * n) == syt_count(lam)


def test_charge_of_standard_words():
    # a single row 1..n must give n(n-1)/2, a single column 0
    assert charge([1, 2, 3]) == 3
    assert charge([3, 2, 1]) == 0
    assert charge([1, 2]) == 1
    assert charge([2, 1]) == 0


def test_reading_word_order():
    assert reading_word(((1, 1, 2), (2, 3))) == [2, 3, 1, 1, 2]


def test_multipartitions_of_type():
    assert len(multipartitions_of_type((3,))) == 3
    assert len(multipartitions_of_type((2, 1))) == 2
    # equal parts: unordered pairs of partitions of 2
    assert len(multipartitions_of_type((2, 2))) == 3
    assert len(multipartitions_of_type((1, 1, 1))) == 1


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 9).flatmap(lambda n: st.sampled_from(enumerate_partitions(n))))
def test_conjugate_involution_and_dominance_reversal(lam):
    assert conjugate(conjugate(lam)) == lam
    for mu in enumerate_partitions(sum(lam)):
        assert dominance_leq(mu, lam) == dominance_leq(conjugate(lam), conjugate(mu))
