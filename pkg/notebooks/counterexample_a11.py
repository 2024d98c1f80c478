"""
A dip in the odd-length distribution of S_12
============================================

Counting odd inversions (pairs i < j with j - i odd and w(i) > w(j)) over a
symmetric group gives a palindromic polynomial. For small n it looks
unimodal apart from a dip at A_3, but n = 11 breaks the pattern in the
middle of the range.

Runtime: about 8 s on one core.
"""

import time

from oddlength import ODD, distribution_typeA, is_unimodal

# Small cases first: A_3 already has a dip at degree 2.
for n in range(1, 8):
    d = distribution_typeA(n, ODD)
    print(f"A_{n}: {' '.join(map(str, d.counts))}  ->  {is_unimodal(d)}")

# The full enumeration of all 12! permutations, split across threads.
t0 = time.perf_counter()
a11 = distribution_typeA(11, ODD)
print(f"\nA_11: {a11.total} permutations in {time.perf_counter() - t0:.1f}s")

ok, dip = is_unimodal(a11)
print(f"unimodal: {ok}, first dip at degree {dip}")
for d in range(dip - 2, dip + 3):
    print(f"  counts[{d}] = {a11.counts[d]}")

# The dip sits exactly at the centre, between two equal neighbours.
assert a11.degree == 2 * dip
assert a11.counts[dip - 1] == a11.counts[dip + 1] > a11.counts[dip]
