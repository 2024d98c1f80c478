"""
Distribution of ``inv_kh`` over the symmetric group without building group elements.

Permutations are grown one position at a time. For every position residue
class ``r`` mod ``k`` a bitmask holds the values already placed at positions
``= r``; placing value ``v`` at position ``j`` creates exactly the inversions
``(i, j)`` with ``i = j - h`` mod ``k`` and ``w(i) > v``, which is one popcount.
"""

from __future__ import annotations

import math
from itertools import permutations

import numba as nb
import numpy as np

from ._pool import chunk_bounds, default_threads, map_histograms
from .distribution import Distribution
from .root_system import GroupSpec
from .stats import StatSpec, inv_kh

__all__ = ["distribution_typeA", "distribution_typeA_reference", "split_depth", "MAX_POINTS"]

# (n + 1)! must stay below 2^64
MAX_POINTS = 20


@nb.njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56


@nb.njit(cache=True, nogil=True)
def _subtree_hist(m, k, h, prefixes, lo, hi, degree):
    """Histogram of the statistic over all permutations extending prefixes[lo:hi]."""
    hist = np.zeros(degree + 1, dtype=np.int64)
    d = prefixes.shape[1]
    full = (np.int64(1) << m) - 1
    cls = np.zeros(k, dtype=np.int64)
    avail = np.zeros(m + 1, dtype=np.int64)
    chosen = np.zeros(m + 1, dtype=np.int64)
    stat = np.zeros(m + 1, dtype=np.int64)
    # partner residue of each position: inversions (i, j) with i = j - h mod k
    partner = np.empty(m, dtype=np.int64)
    for j in range(m):
        partner[j] = ((j - h) % k + k) % k
    for p in range(lo, hi):
        for r in range(k):
            cls[r] = 0
        used = np.int64(0)
        s0 = np.int64(0)
        for j in range(d):
            b = np.int64(1) << prefixes[p, j]
            s0 += _popcount(cls[partner[j]] & ~((b << 1) - 1))
            cls[j % k] |= b
            used |= b
        if d >= m:
            hist[s0] += 1
            continue
        j = d
        avail[j] = full & ~used
        chosen[j] = 0
        stat[j] = s0
        while j >= d:
            if j == m - 1:
                b = avail[j]
                hist[stat[j] + _popcount(cls[partner[j]] & ~((b << 1) - 1))] += 1
                j -= 1
                continue
            c = chosen[j]
            if c != 0:
                cls[j % k] ^= c
                used ^= c
                chosen[j] = 0
            rest = avail[j]
            if rest == 0:
                j -= 1
                continue
            b = rest & -rest
            avail[j] = rest ^ b
            chosen[j] = b
            stat[j + 1] = stat[j] + _popcount(cls[partner[j]] & ~((b << 1) - 1))
            cls[j % k] |= b
            used |= b
            j += 1
            avail[j] = full & ~used
            chosen[j] = 0
    return hist


def split_depth(m: int, threads: int) -> int:
    """Smallest prefix depth giving at least 16 subtrees per worker."""
    d, count = 0, 1
    while count < 16 * threads and d < m:
        count *= m - d
        d += 1
    return d


def _prefixes(m: int, d: int) -> np.ndarray:
    if d == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(permutations(range(m), d)), dtype=np.int64)


def _degree(m: int, spec: StatSpec) -> int:
    return sum(1 for gap in range(1, m) if gap % spec.k == spec.h for _ in range(m - gap))


def distribution_typeA(n: int, spec: StatSpec, threads: int | None = None,
                       depth: int | None = None) -> Distribution:
    """
    Exact coefficients of ``sum_w q^inv_kh(w)`` over ``S_{n+1}``.

    >>> distribution_typeA(3, StatSpec(2, 1), threads=1).counts
    (1, 8, 6, 8, 1)
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m = n + 1
    if m > MAX_POINTS:
        raise OverflowError(f"(n+1)! overflows 64-bit counts for n + 1 = {m} > {MAX_POINTS}")
    threads = default_threads() if threads is None else max(1, int(threads))
    d = split_depth(m, threads) if depth is None else min(max(0, depth), m)
    prefixes = _prefixes(m, d)
    degree = _degree(m, spec)
    k, h = spec.k, spec.h

    def run(lo, hi):
        return _subtree_hist(m, k, h, prefixes, lo, hi, degree)

    # several chunks per worker smooths out uneven subtrees
    bounds = chunk_bounds(len(prefixes), 4 * threads if threads > 1 else 1)
    hist = map_histograms(run, bounds, threads)
    if int(hist.sum()) != math.factorial(m):
        raise OverflowError("histogram total does not equal (n+1)!")
    return Distribution.from_histogram(hist, GroupSpec("A", n), spec)


def distribution_typeA_reference(n: int, spec: StatSpec) -> Distribution:
    """Brute force over all one-line permutations."""
    if n > 7:
        raise ValueError("reference enumeration limited to n <= 7")
    m = n + 1
    hist = [0] * (_degree(m, spec) + 1)
    for p in permutations(range(1, m + 1)):
        hist[inv_kh(p, spec)] += 1
    return Distribution(tuple(hist), GroupSpec("A", n), spec)
