"""
Coefficient vectors of generating polynomials and the predicates on them.

>>> is_unimodal([1, 8, 6, 8, 1])
(False, 2)
>>> to_csv(Distribution((1, 4, 1)))
'l N\\n0 1\\n1 4\\n2 1\\n'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from .root_system import GroupSpec
from .stats import StatSpec

__all__ = ["Distribution", "is_unimodal", "is_palindromic", "merge", "to_csv", "from_csv"]

COUNT_MAX = 2**64 - 1


@dataclass(frozen=True)
class Distribution:
    """``counts[d]`` is the number of group elements with statistic ``d``."""
    counts: tuple[int, ...]
    group: Optional[GroupSpec] = None
    stat: Optional[StatSpec] = None

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if any(c < 0 or c > COUNT_MAX for c in counts):
            raise OverflowError("counts must fit in an unsigned 64-bit integer")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_histogram(cls, hist, group=None, stat=None) -> "Distribution":
        return cls(tuple(int(c) for c in np.asarray(hist).tolist()), group, stat)

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def degree(self) -> int:
        return len(self.counts) - 1

    def __len__(self):
        return len(self.counts)

    def __getitem__(self, d):
        return self.counts[d]

    def __iter__(self):
        return iter(self.counts)

    def is_unimodal(self):
        return is_unimodal(self)

    def is_palindromic(self):
        return is_palindromic(self)

    def to_csv(self):
        return to_csv(self)


Counts = Union[Distribution, Sequence[int]]


def _counts(dist: Counts) -> list[int]:
    return list(dist.counts) if isinstance(dist, Distribution) else [int(c) for c in dist]


def is_unimodal(dist: Counts) -> tuple[bool, Optional[int]]:
    """
    Weak rise then weak fall. On failure, also return the smallest ``d`` with
    ``a[d] < a[d-1]`` and ``a[d] < a[e]`` for some ``e > d``.
    """
    a = _counts(dist)
    if not a:
        raise ValueError("empty coefficient sequence")
    suffix_max = a[:]
    for i in range(len(a) - 2, -1, -1):
        suffix_max[i] = max(a[i], suffix_max[i + 1])
    for d in range(1, len(a) - 1):
        if a[d] < a[d - 1] and a[d] < suffix_max[d + 1]:
            return False, d
    return True, None


def is_palindromic(dist: Counts) -> bool:
    a = _counts(dist)
    return a == a[::-1]


def merge(a: Distribution, b: Distribution) -> Distribution:
    """Pointwise sum; metadata must agree when both sides carry it."""
    for field in ("group", "stat"):
        x, y = getattr(a, field), getattr(b, field)
        if x is not None and y is not None and x != y:
            raise ValueError(f"cannot merge distributions with different {field}: {x} vs {y}")
    if len(a.counts) != len(b.counts):
        raise ValueError(f"length mismatch: {len(a.counts)} vs {len(b.counts)}")
    counts = []
    for x, y in zip(a.counts, b.counts):
        s = x + y
        if s > COUNT_MAX:
            raise OverflowError("count overflow while merging histograms")
        counts.append(s)
    return Distribution(tuple(counts), a.group or b.group, a.stat or b.stat)


def to_csv(dist: Counts) -> str:
    lines = ["l N"] + [f"{d} {c}" for d, c in enumerate(_counts(dist))]
    return "\n".join(lines) + "\n"


def from_csv(text: str) -> Distribution:
    lines = text.strip("\n").split("\n")
    if lines[0].split() != ["l", "N"]:
        raise ValueError(f"bad header {lines[0]!r}")
    counts = []
    for expected, line in enumerate(lines[1:]):
        d, c = line.split()
        if int(d) != expected:
            raise ValueError(f"degrees must be consecutive from 0; got {d} at row {expected}")
        counts.append(int(c))
    return Distribution(tuple(counts))
