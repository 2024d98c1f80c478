from itertools import chain, combinations

import numpy as np
import pytest

from oddlength.root_system import GroupSpec, build_root_system
from oddlength.weyl import (
    check_complement_law, elements, enumerate_elements, from_word, identity, inversion_set,
    is_right_descent, longest_element, min_coset_rep_left, mul_right_gen, random_element,
)

from oracles import order_from_degrees


def rs_of(family, n):
    return build_root_system(GroupSpec(family, n))


def test_identity():
    rs = rs_of("A", 3)
    e = identity(rs)
    assert e.length == 0 and len(inversion_set(e)) == 0
    assert all(e.apply(b) == (b, 1) for b in range(rs.num_positive))


@pytest.mark.parametrize("family,n", [("A", 3), ("B", 3), ("G", 2), ("F", 4)])
def test_generator_edges(family, n):
    rs = rs_of(family, n)
    for s in range(n):
        w = mul_right_gen(identity(rs), s)
        assert w.length == 1
        assert list(inversion_set(w)) == [int(rs.simple_index[s])]
        assert is_right_descent(w, s)
        assert not is_right_descent(identity(rs), s)


def test_involution_and_braid():
    rng = np.random.default_rng(1)
    for family, n in [("A", 4), ("B", 3), ("F", 4), ("G", 2)]:
        rs = rs_of(family, n)
        for _ in range(20):
            w = random_element(rs, rng)
            s = int(rng.integers(n))
            ws = w.mul_right_gen(s)
            assert ws.mul_right_gen(s) == w
            assert abs(ws.length - w.length) == 1
    a2 = rs_of("A", 2)
    assert from_word(a2, [0, 1, 0]) == from_word(a2, [1, 0, 1])
    g2 = rs_of("G", 2)
    assert from_word(g2, [0, 1] * 3) == from_word(g2, [1, 0] * 3)


@pytest.mark.parametrize("family,n", [("A", 1), ("A", 3), ("B", 4), ("D", 4), ("G", 2),
                                      ("F", 4), ("E", 6)])
def test_longest_element(family, n):
    rs = rs_of(family, n)
    w0 = longest_element(rs)
    assert w0.length == rs.num_positive
    assert w0 * w0 == identity(rs)
    assert all(is_right_descent(w0, s) for s in range(n))
    assert len(inversion_set(w0)) == rs.num_positive
    # ht(w0 a) = -ht(a)
    for b in range(rs.num_positive):
        i, sign = w0.apply(b)
        assert sign * rs.heights[i] == -rs.heights[b]


def test_a1_longest_is_generator():
    rs = rs_of("A", 1)
    assert longest_element(rs) == from_word(rs, [0])


@pytest.mark.parametrize("family,n", [("A", 2), ("A", 4), ("B", 3), ("C", 3), ("D", 4),
                                      ("G", 2), ("F", 4)])
def test_enumeration_visits_each_element_once(family, n):
    rs = rs_of(family, n)
    seen = set()
    inv = {}

    def visit(w, new_root):
        assert w not in seen
        seen.add(w)
        inv[w] = w.inversion_set()
        assert len(inv[w]) == w.length

    count = enumerate_elements(rs, visit)
    assert count == len(seen) == order_from_degrees(family, n)


def test_enumeration_edges_add_one_new_root():
    rs = rs_of("B", 3)
    stack = []

    def visit(w, new_root):
        while stack and stack[-1].length >= w.length:
            stack.pop()
        if new_root is None:
            assert w.length == 0
        else:
            parent = stack[-1]
            assert w.length == parent.length + 1
            assert new_root not in parent.inversion_set()
            assert w.inversion_set().bits == parent.inversion_set().bits | (1 << new_root)
        stack.append(w)

    enumerate_elements(rs, visit)


@pytest.mark.slow
def test_e6_order():
    assert len(elements(rs_of("E", 6))) == 51840 == order_from_degrees("E", 6)


def subsets(n):
    return chain.from_iterable(combinations(range(n), r) for r in range(n + 1))


def test_parabolic_decomposition_a3():
    rs = rs_of("A", 3)
    for w in elements(rs):
        for J in subsets(3):
            x = min_coset_rep_left(w, J)
            wJ = w * x.inverse()
            assert x.length + wJ.length == w.length
            # wJ lies in W_J: its reduced word uses only J
            assert all(not wJ.is_right_descent(s) for s in range(3) if s not in J)
            assert all(not x.is_left_descent(s) for s in J)


def test_coset_rep_edge_cases():
    rs = rs_of("B", 3)
    rng = np.random.default_rng(7)
    w = random_element(rs, rng)
    assert min_coset_rep_left(w, ()) == w
    assert min_coset_rep_left(w, range(3)) == identity(rs)
    s = from_word(rs, [1])
    assert min_coset_rep_left(s, [1]) == identity(rs)


def test_complement_law_examples():
    rs = rs_of("A", 3)
    w0 = longest_element(rs)
    assert check_complement_law(identity(rs))
    assert check_complement_law(w0)
    assert inversion_set(identity(rs)).complement() == inversion_set(w0)


@pytest.mark.parametrize("family,n", [("F", 4), ("B", 4)])
def test_complement_law_random(family, n):
    rs = rs_of(family, n)
    w0 = longest_element(rs)
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        w = random_element(rs, rng)
        assert check_complement_law(w, w0)


def test_left_complement_via_w0_conjugation():
    # Phi(w0 w) = Phi+ minus -w0(Phi(w))
    rs = rs_of("B", 4)
    w0 = longest_element(rs)
    rng = np.random.default_rng(3)
    for _ in range(200):
        w = random_element(rs, rng)
        image = {w0.apply(b)[0] for b in inversion_set(w)}
        expected = set(range(rs.num_positive)) - image
        assert set(inversion_set(w0 * w)) == expected


def test_inversion_set_via_inverse():
    # Phi(w) = {a : w^-1(a) < 0}
    rs = rs_of("F", 4)
    rng = np.random.default_rng(5)
    for _ in range(50):
        w = random_element(rs, rng)
        winv = w.inverse()
        direct = {b for b in range(rs.num_positive) if winv.apply(b)[1] < 0}
        assert set(inversion_set(w)) == direct
        assert w * winv == identity(rs)
