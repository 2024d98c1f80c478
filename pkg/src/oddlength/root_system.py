"""
Finite crystallographic root systems in simple-root coordinates.

Positive roots are produced by saturating the simple roots under the simple
reflections ``s_i(b) = b - <b, a_i^vee> a_i``, using the Cartan matrix with
Bourbaki node numbering.

>>> rs = build_root_system(GroupSpec("G", 2))
>>> sorted(rs.heights.tolist())
[1, 1, 2, 3, 4, 5]
>>> rs.num_positive
6
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

__all__ = [
    "GroupSpec", "Root", "RootSystem", "build_root_system", "cartan_matrix",
    "height_class_count", "group_order",
]

FAMILIES = "ABCDEFG"


@dataclass(frozen=True, order=True)
class GroupSpec:
    """A Weyl type such as ``GroupSpec("E", 7)``."""
    family: str
    rank: int

    def __post_init__(self):
        family = str(self.family).upper()
        object.__setattr__(self, "family", family)
        rank = self.rank
        if family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if not isinstance(rank, (int, np.integer)) or isinstance(rank, bool):
            raise ValueError(f"rank must be an integer, got {rank!r}")
        object.__setattr__(self, "rank", int(rank))
        ok = {
            "A": rank >= 1,
            "B": rank >= 2,
            "C": rank >= 2,
            "D": rank >= 4,
            "E": rank in (6, 7, 8),
            "F": rank == 4,
            "G": rank == 2,
        }[family]
        if not ok:
            rule = {
                "A": "n >= 1", "B": "n >= 2", "C": "n >= 2", "D": "n >= 4",
                "E": "n in {6, 7, 8}", "F": "n = 4", "G": "n = 2",
            }[family]
            raise ValueError(f"invalid rank {rank} for type {family}: requires {rule}")

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """``"A11"``, ``"e_7"`` or ``"F4"`` to a spec."""
        text = text.strip().replace("_", "")
        if len(text) < 2 or not text[1:].isdigit():
            raise ValueError(f"cannot parse Weyl type {text!r}")
        return cls(text[0], int(text[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    coeffs: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coeffs)


def cartan_matrix(spec: GroupSpec) -> np.ndarray:
    """Cartan matrix ``A[i, j] = <a_i^vee, a_j>`` in Bourbaki numbering (0-based)."""
    n, fam = spec.rank, spec.family
    A = 2 * np.eye(n, dtype=np.int64)

    def link(i, j, aij=-1, aji=-1):
        A[i, j] = aij
        A[j, i] = aji

    if fam in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if fam == "B":
            # a_n short
            A[n - 1, n - 2] = -2
        elif fam == "C":
            # a_n long
            A[n - 2, n - 1] = -2
    elif fam == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif fam == "E":
        # 1-3-4-5-6-7-8 with 2 attached to 4
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif fam == "F":
        link(0, 1)
        link(1, 2, aij=-1, aji=-2)
        link(2, 3)
    elif fam == "G":
        # a_1 short, a_2 long
        link(0, 1, aij=-3, aji=-1)
    return A


@dataclass(frozen=True, eq=False)
class RootSystem:
    """
    Static geometry of a Weyl type.

    ``act_idx[s, b]`` and ``act_sign[s, b]`` encode ``s(beta_b) = sign * beta_idx``.
    Positive roots are ordered by (height, coefficient tuple).
    """
    spec: GroupSpec
    cartan: np.ndarray
    coeffs: np.ndarray  # (N, rank) int8
    heights: np.ndarray  # (N,) int16
    simple_index: np.ndarray  # (rank,) position of each simple root
    act_idx: np.ndarray  # (rank, N) int16
    act_sign: np.ndarray  # (rank, N) int8
    index: dict = field(repr=False)

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def num_positive(self) -> int:
        return len(self.heights)

    @property
    def positive_roots(self) -> list[Root]:
        return [Root(tuple(int(c) for c in row)) for row in self.coeffs]

    @property
    def order(self) -> int:
        return group_order(self)

    def root_index(self, coeffs) -> int:
        return self.index[tuple(int(c) for c in coeffs)]

    def height_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.heights.tolist()).items()))

    def reflect(self, s: int, coeffs) -> tuple[int, ...]:
        b = np.asarray(coeffs, dtype=np.int64)
        pairing = int(self.cartan[s] @ b)
        out = b.copy()
        out[s] -= pairing
        return tuple(int(c) for c in out)

    def __repr__(self):
        return f"RootSystem({self.spec}, |Phi+|={self.num_positive})"


def _saturate(A: np.ndarray) -> list[tuple[int, ...]]:
    n = len(A)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for b in frontier:
            bv = np.array(b)
            for i in range(n):
                c = int(A[i] @ bv)
                if c == 0:
                    continue
                img = list(b)
                img[i] -= c
                img = tuple(img)
                if all(x >= 0 for x in img) and img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return sorted(seen, key=lambda r: (sum(r), r))


@lru_cache(maxsize=None)
def build_root_system(spec: GroupSpec) -> RootSystem:
    if not isinstance(spec, GroupSpec):
        spec = GroupSpec(*spec)
    A = cartan_matrix(spec)
    roots = _saturate(A)
    index = {r: i for i, r in enumerate(roots)}
    n, N = spec.rank, len(roots)
    act_idx = np.empty((n, N), dtype=np.int16)
    act_sign = np.empty((n, N), dtype=np.int8)
    for s in range(n):
        for b, r in enumerate(roots):
            c = sum(int(A[s, j]) * r[j] for j in range(n))
            img = list(r)
            img[s] -= c
            img = tuple(img)
            if img in index:
                act_idx[s, b], act_sign[s, b] = index[img], 1
            else:
                neg = tuple(-x for x in img)
                act_idx[s, b], act_sign[s, b] = index[neg], -1
    coeffs = np.array(roots, dtype=np.int8)
    heights = coeffs.sum(axis=1).astype(np.int16)
    simple_index = np.array([index[tuple(int(i == j) for j in range(n))] for i in range(n)],
                            dtype=np.int16)
    for arr in (A, coeffs, heights, simple_index, act_idx, act_sign):
        arr.setflags(write=False)
    return RootSystem(spec, A, coeffs, heights, simple_index, act_idx, act_sign, index)


def height_class_count(rs: RootSystem, k: int, h: int) -> int:
    """Number of positive roots whose height is ``h`` mod ``k``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return int(np.count_nonzero(rs.heights % k == h % k))


def group_order(rs: RootSystem) -> int:
    # |W| = prod (ht(a) + 1) / ht(a) over positive roots
    q = Fraction(1)
    for ht in rs.heights.tolist():
        q *= Fraction(ht + 1, ht)
    assert q.denominator == 1
    return int(q)
