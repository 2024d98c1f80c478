"""
Exhaustive distributions of ``L_kh`` over an arbitrary Weyl group.

The group is walked along the spanning tree of right weak order used by
:func:`oddlength.weyl.enumerate_elements`. Each tree edge adds one root to the
inversion set, so every statistic is updated in O(1) per edge; only the
signed-permutation table of the child costs O(|Phi+|).

Several statistics are accumulated in one walk: ``weights[t, b]`` is 1 when
root ``b`` counts towards statistic ``t``.
"""

from __future__ import annotations

from typing import Sequence

import numba as nb
import numpy as np

from ._pool import chunk_bounds, default_threads, map_histograms
from .distribution import Distribution
from .root_system import GroupSpec, RootSystem, build_root_system, height_class_count
from .stats import StatSpec, root_weights
from .typea_fast import distribution_typeA
from .weyl import identity, tree_children

__all__ = ["distribution_general", "distributions_general", "frontier", "compute_distribution"]

INT64_MAX = 2**63 - 1


@nb.njit(cache=True, nogil=True)
def _walk(act_idx, act_sign, simple, weights, root_idx, root_sign, root_stats, lo, hi, width):
    """Histograms (n_stats x width) over the subtrees hanging from roots[lo:hi]."""
    rank, N = act_idx.shape
    n_stats = weights.shape[0]
    hist = np.zeros((n_stats, width), dtype=np.int64)
    max_depth = N + 1
    img_idx = np.empty((max_depth, N), dtype=np.int16)
    img_sign = np.empty((max_depth, N), dtype=np.int8)
    stats = np.empty((max_depth, n_stats), dtype=np.int64)
    next_gen = np.empty(max_depth, dtype=np.int64)
    for r in range(lo, hi):
        img_idx[0] = root_idx[r]
        img_sign[0] = root_sign[r]
        for t in range(n_stats):
            stats[0, t] = root_stats[r, t]
            hist[t, stats[0, t]] += 1
        next_gen[0] = 0
        depth = 0
        while depth >= 0:
            s = next_gen[depth]
            if s >= rank:
                depth -= 1
                continue
            next_gen[depth] = s + 1
            a = simple[s]
            if img_sign[depth, a] < 0:
                continue
            ok = True
            for t in range(s):
                if img_sign[depth, act_idx[s, simple[t]]] < 0:
                    ok = False
                    break
            if not ok:
                continue
            new_root = img_idx[depth, a]
            child = depth + 1
            for b in range(N):
                g = act_idx[s, b]
                img_idx[child, b] = img_idx[depth, g]
                img_sign[child, b] = act_sign[s, b] * img_sign[depth, g]
            for t in range(n_stats):
                v = stats[depth, t] + weights[t, new_root]
                stats[child, t] = v
                hist[t, v] += 1
            next_gen[child] = 0
            depth = child
    return hist


def frontier(rs: RootSystem, depth: int, weights: np.ndarray):
    """
    Split the spanning tree at ``depth``.

    Returns the histogram contribution of nodes above the cut and the list of
    ``(element, stats)`` subtree roots sitting exactly at the cut.
    """
    width = weights.sum(axis=1).max() + 1
    upper = np.zeros((weights.shape[0], width), dtype=np.int64)
    level = [(identity(rs), np.zeros(weights.shape[0], dtype=np.int64))]
    for _ in range(depth):
        nxt = []
        for w, st in level:
            upper[np.arange(len(st)), st] += 1
            simple = rs.simple_index
            for s, child in tree_children(w):
                nxt.append((child, st + weights[:, w.idx[simple[s]]]))
        if not nxt:
            return upper, level[:0]
        level = nxt
    return upper, level


def _pick_depth(rs: RootSystem, threads: int) -> int:
    if threads <= 1:
        return 0
    # smallest depth with >= 16 subtrees per worker; elements of length d
    # are few for small d so this search is cheap
    target = 16 * threads
    level = [identity(rs)]
    d = 0
    while len(level) < target and d < rs.num_positive:
        nxt = [c for w in level for _, c in tree_children(w)]
        if not nxt:
            break
        level = nxt
        d += 1
    return d


def distributions_general(rs: RootSystem, specs: Sequence[StatSpec], threads: int | None = None,
                          depth: int | None = None) -> list[Distribution]:
    """Distributions of several statistics from one walk of the group."""
    if not isinstance(rs, RootSystem):
        rs = build_root_system(rs)
    if rs.order > INT64_MAX:
        raise OverflowError(f"|W({rs.spec})| does not fit the 64-bit visit counter")
    specs = list(specs)
    threads = default_threads() if threads is None else max(1, int(threads))
    weights = np.stack([root_weights(rs, sp) for sp in specs]).astype(np.int64)
    degrees = [height_class_count(rs, sp.k, sp.h) for sp in specs]
    width = max(degrees) + 1
    d = _pick_depth(rs, threads) if depth is None else max(0, int(depth))
    upper, roots = frontier(rs, d, weights)
    if roots:
        root_idx = np.stack([w.idx for w, _ in roots])
        root_sign = np.stack([w.sign for w, _ in roots])
        root_stats = np.stack([st for _, st in roots])

        def run(lo, hi):
            return _walk(rs.act_idx, rs.act_sign, rs.simple_index, weights,
                         root_idx, root_sign, root_stats, lo, hi, width)

        bounds = chunk_bounds(len(roots), 4 * threads if threads > 1 else 1)
        hist = map_histograms(run, bounds, threads)
    else:
        hist = np.zeros((len(specs), width), dtype=np.int64)
    hist[:, :upper.shape[1]] += upper
    order = rs.order
    out = []
    for t, (sp, deg) in enumerate(zip(specs, degrees)):
        row = hist[t, :deg + 1]
        if int(row.sum()) != order or hist[t, deg + 1:].any():
            raise OverflowError(f"visit count mismatch for W({rs.spec}); expected {order}")
        out.append(Distribution.from_histogram(row, rs.spec, sp))
    return out


def distribution_general(rs: RootSystem, spec: StatSpec, threads: int | None = None,
                         depth: int | None = None) -> Distribution:
    """
    >>> from oddlength.root_system import GroupSpec
    >>> distribution_general(build_root_system(GroupSpec("B", 2)), StatSpec(2, 1), threads=1).counts
    (1, 3, 3, 1)
    """
    return distributions_general(rs, [spec], threads, depth)[0]


def compute_distribution(group: GroupSpec, spec: StatSpec, threads: int | None = None) -> Distribution:
    """Type A goes through the permutation DFS, everything else through the root walk."""
    if group.family == "A":
        # permutation positions give right inversions; w -> w^-1 matches distributions
        return distribution_typeA(group.rank, spec, threads)
    return distribution_general(build_root_system(group), spec, threads)
