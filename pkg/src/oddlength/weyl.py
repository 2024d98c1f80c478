"""
Weyl group elements as signed permutations of the positive roots.

An :class:`Element` stores ``w(beta_b) = sign[b] * beta_{idx[b]}`` for every
positive root index ``b``. All group operations are table lookups.

>>> from oddlength.root_system import GroupSpec, build_root_system
>>> rs = build_root_system(GroupSpec("A", 2))
>>> w = identity(rs).mul_right_gen(0).mul_right_gen(1).mul_right_gen(0)
>>> w == longest_element(rs)
True
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional

import numpy as np

from .root_system import RootSystem

__all__ = [
    "Element", "InversionSet", "identity", "from_word", "longest_element",
    "mul_right_gen", "is_right_descent", "inversion_set", "enumerate_elements",
    "elements", "min_coset_rep_left", "check_complement_law", "random_element",
]


class InversionSet:
    """Set of positive-root indices packed into an int bitmask."""

    __slots__ = ("bits", "size")

    def __init__(self, bits: int, size: int):
        self.bits = bits
        self.size = size

    @classmethod
    def from_indices(cls, indices: Iterable[int], size: int) -> "InversionSet":
        bits = 0
        for i in indices:
            bits |= 1 << int(i)
        return cls(bits, size)

    def __contains__(self, i) -> bool:
        return bool(self.bits >> int(i) & 1)

    def __len__(self):
        return self.bits.bit_count()

    def __iter__(self):
        b, i = self.bits, 0
        while b:
            if b & 1:
                yield i
            b >>= 1
            i += 1

    def __eq__(self, other):
        return isinstance(other, InversionSet) and (self.bits, self.size) == (other.bits, other.size)

    def __hash__(self):
        return hash((self.bits, self.size))

    def complement(self) -> "InversionSet":
        return InversionSet(((1 << self.size) - 1) & ~self.bits, self.size)

    def __repr__(self):
        return f"InversionSet({sorted(self)})"


class Element:
    __slots__ = ("rs", "idx", "sign", "length")

    def __init__(self, rs: RootSystem, idx: np.ndarray, sign: np.ndarray):
        self.rs = rs
        self.idx = idx
        self.sign = sign
        self.length = int(np.count_nonzero(sign < 0))

    def apply(self, b: int) -> tuple[int, int]:
        """Image of positive root ``b`` as ``(index, sign)``."""
        return int(self.idx[b]), int(self.sign[b])

    def mul_right_gen(self, s: int) -> "Element":
        # (ws)(b) = w(s(b))
        a_idx, a_sign = self.rs.act_idx[s], self.rs.act_sign[s]
        return Element(self.rs, self.idx[a_idx], a_sign * self.sign[a_idx])

    def mul_left_gen(self, s: int) -> "Element":
        a_idx, a_sign = self.rs.act_idx[s], self.rs.act_sign[s]
        return Element(self.rs, a_idx[self.idx], self.sign * a_sign[self.idx])

    def __mul__(self, other: "Element") -> "Element":
        return Element(self.rs, self.idx[other.idx], other.sign * self.sign[other.idx])

    def inverse(self) -> "Element":
        idx = np.empty_like(self.idx)
        sign = np.empty_like(self.sign)
        idx[self.idx] = np.arange(len(self.idx), dtype=idx.dtype)
        sign[self.idx] = self.sign
        return Element(self.rs, idx, sign)

    def is_right_descent(self, s: int) -> bool:
        return bool(self.sign[self.rs.simple_index[s]] < 0)

    def is_left_descent(self, s: int) -> bool:
        # a_s in Phi(w)  <=>  some w(b) = -a_s
        a = self.rs.simple_index[s]
        hit = np.nonzero(self.idx == a)[0][0]
        return bool(self.sign[hit] < 0)

    def inversion_set(self) -> InversionSet:
        # Phi(w) = Phi+ ∩ w(Phi-) = {|w(b)| : w(b) < 0}
        return InversionSet.from_indices(self.idx[self.sign < 0].tolist(), len(self.idx))

    def __eq__(self, other):
        return (isinstance(other, Element) and self.rs is other.rs
                and np.array_equal(self.idx, other.idx) and np.array_equal(self.sign, other.sign))

    def __hash__(self):
        return hash((self.idx.tobytes(), self.sign.tobytes()))

    def __repr__(self):
        return f"<Element of W({self.rs.spec}) length {self.length}>"


def identity(rs: RootSystem) -> Element:
    N = rs.num_positive
    return Element(rs, np.arange(N, dtype=np.int16), np.ones(N, dtype=np.int8))


def from_word(rs: RootSystem, word: Iterable[int]) -> Element:
    w = identity(rs)
    for s in word:
        w = w.mul_right_gen(s)
    return w


def mul_right_gen(w: Element, s: int) -> Element:
    return w.mul_right_gen(s)


def is_right_descent(w: Element, s: int) -> bool:
    return w.is_right_descent(s)


def inversion_set(w: Element) -> InversionSet:
    return w.inversion_set()


def longest_element(rs: RootSystem) -> Element:
    """Greedy ascent: multiply by non-descents until every generator is a descent."""
    w = identity(rs)
    while True:
        for s in range(rs.rank):
            if not w.is_right_descent(s):
                w = w.mul_right_gen(s)
                break
        else:
            return w


def enumerate_elements(rs: RootSystem, visitor: Callable[[Element, Optional[int]], None]) -> int:
    """
    Visit every element of W once, depth first along right weak order.

    ``w -> ws`` is a tree edge iff ``w(a_s) > 0`` and ``s`` is the smallest right
    descent of ``ws``. ``visitor(element, new_root)`` receives the positive root
    ``|w(a_s)|`` that the edge adds to the inversion set (``None`` at the root).
    Returns the number of elements visited.
    """
    count = 0
    stack: list[tuple[Element, Optional[int]]] = [(identity(rs), None)]
    while stack:
        w, new_root = stack.pop()
        visitor(w, new_root)
        count += 1
        children = []
        for s, child in tree_children(w):
            children.append((child, int(w.idx[rs.simple_index[s]])))
        stack.extend(reversed(children))
    return count


def tree_children(w: Element):
    """Yield ``(s, w*s)`` for the spanning-tree children of ``w``."""
    rs = w.rs
    simple = rs.simple_index
    for s in range(rs.rank):
        if w.sign[simple[s]] < 0:
            continue
        # (ws)(a_t) = w(s(a_t)) and s(a_t) is positive for t != s
        if any(w.sign[rs.act_idx[s, simple[t]]] < 0 for t in range(s)):
            continue
        yield s, w.mul_right_gen(s)


def elements(rs: RootSystem) -> list[Element]:
    out: list[Element] = []
    enumerate_elements(rs, lambda w, _: out.append(w))
    return out


def min_coset_rep_left(w: Element, J: Iterable[int]) -> Element:
    """Minimal-length representative of the coset ``W_J w``."""
    J = sorted(set(J))
    x = w
    changed = True
    while changed:
        changed = False
        for s in J:
            if x.is_left_descent(s):
                x = x.mul_left_gen(s)
                changed = True
    return x


def check_complement_law(w: Element, w0: Optional[Element] = None) -> bool:
    """Whether the inversion set of ``w * w0`` is the complement of that of ``w``."""
    if w0 is None:
        w0 = longest_element(w.rs)
    return (w * w0).inversion_set() == w.inversion_set().complement()


def random_element(rs: RootSystem, rng: np.random.Generator, steps: Optional[int] = None) -> Element:
    """Product of a random word; long enough words are close to uniform."""
    if steps is None:
        steps = 4 * rs.num_positive + 8
    return from_word(rs, rng.integers(0, rs.rank, size=steps).tolist())
