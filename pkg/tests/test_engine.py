import pytest

from oddlength.distribution import is_palindromic
from oddlength.engine import compute_distribution, distribution_general, distributions_general
from oddlength.root_system import GroupSpec, build_root_system, height_class_count
from oddlength.stats import ODD, StatSpec
from oddlength.typea_fast import distribution_typeA

from oracles import euclidean_distribution, order_from_degrees, signed_perm_distribution_B


def general(family, n, k, h, threads=1):
    return list(distribution_general(build_root_system(GroupSpec(family, n)), StatSpec(k, h), threads).counts)


@pytest.mark.parametrize("family,n", [("A", 3), ("B", 3), ("C", 3), ("B", 4), ("D", 4), ("G", 2)])
def test_matches_matrix_group(family, n):
    for k in (1, 2, 3, 4):
        for h in range(k):
            assert general(family, n, k, h) == euclidean_distribution(family, n, k, h)


@pytest.mark.slow
def test_f4_matches_matrix_group():
    for k, h in [(2, 1), (3, 1), (4, 1), (4, 3), (8, 2)]:
        assert general("F", 4, k, h) == euclidean_distribution("F", 4, k, h)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_type_b_matches_signed_permutations(n):
    for k in (2, 3, 5):
        for h in range(k):
            assert general("B", n, k, h) == signed_perm_distribution_B(n, k, h)


def test_b_and_c_differ():
    assert general("B", 3, 2, 1) == [1, 7, 11, 10, 11, 7, 1]
    assert general("C", 3, 2, 1) == [1, 6, 11, 12, 11, 6, 1]


@pytest.mark.parametrize("n", range(1, 7))
def test_agrees_with_type_a_kernel(n):
    rs = build_root_system(GroupSpec("A", n))
    specs = [StatSpec(k, h) for k in range(1, 6) for h in range(k)]
    for sp, d in zip(specs, distributions_general(rs, specs, threads=2)):
        assert d.counts == distribution_typeA(n, sp, threads=1).counts


@pytest.mark.parametrize("family,n", [("B", 5), ("D", 5), ("F", 4), ("E", 6)])
def test_totals_degree_palindrome(family, n):
    rs = build_root_system(GroupSpec(family, n))
    specs = [StatSpec(k, h) for k in (1, 2, 3, 4) for h in range(k)]
    for sp, d in zip(specs, distributions_general(rs, specs)):
        assert d.total == order_from_degrees(family, n)
        assert d.degree == height_class_count(rs, sp.k, sp.h)
        assert is_palindromic(d)
        if sp.k == 1 or sp.h == 1:  # every simple root counted
            assert d.counts[0] == d.counts[-1] == 1
        assert d.group == rs.spec and d.stat == sp


def test_length_distribution_b2():
    assert general("B", 2, 1, 0) == [1, 2, 2, 2, 1]


def test_thread_determinism():
    rs = build_root_system(GroupSpec("D", 6))
    base = distribution_general(rs, StatSpec(3, 1), threads=1)
    for threads in (2, 8):
        assert distribution_general(rs, StatSpec(3, 1), threads=threads) == base
    for depth in (0, 2, 5):
        assert distribution_general(rs, StatSpec(3, 1), threads=3, depth=depth) == base


@pytest.mark.slow
def test_e7_total():
    d = compute_distribution(GroupSpec("E", 7), ODD)
    assert d.total == 2903040 and is_palindromic(d)


def test_router():
    assert compute_distribution(GroupSpec("A", 3), ODD).counts == (1, 8, 6, 8, 1)
    assert compute_distribution(GroupSpec("G", 2), StatSpec(1, 0)).total == 12
