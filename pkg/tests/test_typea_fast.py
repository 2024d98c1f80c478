import math

import pytest

from oddlength.distribution import is_palindromic
from oddlength.golden import EXAMPLES, TABLE2
from oddlength.root_system import GroupSpec, build_root_system, height_class_count
from oddlength.stats import ODD, StatSpec
from oddlength.typea_fast import distribution_typeA, distribution_typeA_reference, split_depth

from oracles import eulerian


@pytest.mark.parametrize("n", sorted(EXAMPLES))
def test_published_small_cases(n):
    assert distribution_typeA(n, ODD, threads=1).counts == EXAMPLES[n]


def test_hand_examples():
    assert distribution_typeA(1, ODD).counts == (1, 1)
    assert distribution_typeA(2, ODD).counts == (1, 4, 1)
    assert distribution_typeA(3, ODD).counts == (1, 8, 6, 8, 1)
    assert distribution_typeA(3, StatSpec(3, 1)).counts == (1, 11, 11, 1)
    assert distribution_typeA(5, StatSpec(3, 1)).counts == TABLE2[5]


def test_metadata():
    d = distribution_typeA(4, StatSpec(3, 2))
    assert d.group == GroupSpec("A", 4) and d.stat == StatSpec(3, 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_matches_reference(n):
    for k in range(1, 9):
        for h in range(k):
            sp = StatSpec(k, h)
            assert distribution_typeA(n, sp, threads=2).counts == distribution_typeA_reference(n, sp).counts


@pytest.mark.slow
def test_matches_reference_n7():
    for k in range(1, 9):
        for h in range(k):
            sp = StatSpec(k, h)
            assert distribution_typeA(7, sp).counts == distribution_typeA_reference(7, sp).counts


@pytest.mark.parametrize("n", range(1, 9))
def test_sum_degree_palindrome(n):
    rs = build_root_system(GroupSpec("A", n))
    for k in range(1, 6):
        for h in range(k):
            d = distribution_typeA(n, StatSpec(k, h))
            assert d.total == math.factorial(n + 1)
            assert d.degree == height_class_count(rs, k, h)
            assert is_palindromic(d)
            if k == 1 or h == 1:  # every simple root counted
                assert d.counts[0] == d.counts[-1] == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_descent_distribution_when_only_adjacent_pairs_count(n):
    # for k >= n the only gap = 1 mod k in 1..n is 1 itself
    for k in range(n, n + 3):
        assert list(distribution_typeA(n, StatSpec(k, 1)).counts) == eulerian(n + 1)


def test_thread_and_depth_independence():
    sp = StatSpec(4, 3)
    base = distribution_typeA(8, sp, threads=1).counts
    for threads in (2, 3, 8):
        assert distribution_typeA(8, sp, threads=threads).counts == base
    for depth in (0, 1, 3, 9):
        assert distribution_typeA(8, sp, threads=2, depth=depth).counts == base


def test_split_depth():
    assert split_depth(12, 1) == 2
    assert split_depth(12, 8) == 2
    assert split_depth(12, 32) == 3
    assert split_depth(2, 64) == 2


def test_rejects_overflowing_sizes():
    with pytest.raises(OverflowError):
        distribution_typeA(20, ODD)
    with pytest.raises(ValueError):
        distribution_typeA(0, ODD)
    with pytest.raises(ValueError):
        distribution_typeA_reference(8, ODD)
