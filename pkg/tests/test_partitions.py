import pytest
from hypothesis import given, strategies as st

from ghbasis.errors import NotAHookError, PartitionError
from ghbasis.partitions import (
    Partition,
    biexponents,
    conjugate,
    conjugate_factorial,
    corners,
    hook_params,
    hook_partition,
    n_stat,
    parse_partition,
    partitions_of,
    remove_corner,
)


partitions_n8 = st.integers(1, 8).flatmap(
    lambda n: st.sampled_from(list(partitions_of(n))))


def test_parse_and_text_form():
    assert parse_partition("3,2,1").parts == (3, 2, 1)
    assert parse_partition(" 3 , 2 ,1").parts == (3, 2, 1)
    assert str(Partition((3, 2, 1))) == "3,2,1"
    mu = Partition((3, 2, 1))
    assert Partition.from_json(mu.to_json()) == mu
    assert mu.to_json() == '{"parts": [3, 2, 1]}'


def test_bad_partitions_rejected():
    with pytest.raises(PartitionError):
        Partition(())
    with pytest.raises(PartitionError):
        Partition((1, 2))
    with pytest.raises(PartitionError):
        Partition((2, 0))
    with pytest.raises(PartitionError):
        parse_partition("")
    with pytest.raises(PartitionError):
        parse_partition("a,b")


def test_conjugate_examples():
    assert conjugate(Partition((3, 1))).parts == (2, 1, 1)
    assert conjugate(Partition((1, 1, 1, 1))).parts == (4,)
    assert conjugate(Partition((2, 2))).parts == (2, 2)


@given(partitions_n8)
def test_conjugate_involution(mu):
    assert conjugate(conjugate(mu)) == mu
    assert conjugate(mu).n == mu.n


def test_biexponent_examples():
    assert [b.as_pair() for b in biexponents(Partition((2, 1)))] == [(0, 0), (0, 1), (1, 0)]
    assert [b.as_pair() for b in biexponents(Partition((1,)))] == [(0, 0)]
    assert [b.as_pair() for b in biexponents(Partition((2, 2)))] == [
        (0, 0), (0, 1), (1, 0), (1, 1)]


@given(partitions_n8)
def test_biexponents_sorted_and_complete(mu):
    pairs = [b.as_pair() for b in biexponents(mu)]
    assert len(pairs) == mu.n
    assert pairs == sorted(pairs)
    assert len(set(pairs)) == mu.n
    for p, q in pairs:
        assert p < mu.k
        assert q < mu.parts[p]


def test_n_stat_examples():
    assert n_stat(Partition((2, 1))) == 1
    assert n_stat(Partition((1, 1, 1, 1))) == 6
    for K in range(4):
        for L in range(4):
            assert n_stat(hook_partition(K, L)) == L * (L + 1) // 2


@given(partitions_n8)
def test_n_stat_matches_biexponents(mu):
    assert n_stat(mu) == sum(b.p for b in biexponents(mu))


def test_hook_params():
    hp = hook_params(Partition((3, 1, 1)))
    assert (hp.K, hp.L) == (2, 2)
    hp = hook_params(Partition((1,)))
    assert (hp.K, hp.L) == (0, 0)
    with pytest.raises(NotAHookError):
        hook_params(Partition((2, 2)))


@given(partitions_n8)
def test_hook_params_exactly_on_hooks(mu):
    big_parts = sum(1 for p in mu.parts if p >= 2)
    if big_parts <= 1 and all(p == 1 for p in mu.parts[1:]):
        hp = hook_params(mu)
        assert hook_partition(hp.K, hp.L) == mu
    else:
        with pytest.raises(NotAHookError):
            hook_params(mu)


def test_conjugate_factorial_examples():
    assert conjugate_factorial(Partition((2, 1))) == 2
    assert conjugate_factorial(Partition((2, 2))) == 4
    assert conjugate_factorial(Partition((5,))) == 1


def test_corners_and_removal():
    mu = Partition((3, 3, 1))
    assert corners(mu) == [2, 3]
    assert remove_corner(mu, 2) == Partition((3, 2, 1))
    assert remove_corner(mu, 3) == Partition((3, 3))
    with pytest.raises(PartitionError):
        remove_corner(mu, 1)


def test_partitions_of_counts():
    # partition numbers p(1..8) = 1, 2, 3, 5, 7, 11, 15, 22
    expected = [1, 2, 3, 5, 7, 11, 15, 22]
    for n, want in zip(range(1, 9), expected):
        got = list(partitions_of(n))
        assert len(got) == want
        assert len(set(got)) == want
