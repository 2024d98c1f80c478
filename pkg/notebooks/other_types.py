"""
Odd length beyond type A
========================

The same statistic makes sense in any Weyl group: count the inverted
positive roots whose height is odd. Here we tabulate it for types B, C, D
and the exceptional groups up to E_7, and check which distributions are
unimodal.

Runtime: about 2 s on one core, mostly B_8.
"""

from oddlength import GroupSpec, ODD, build_root_system, compute_distribution, is_unimodal

# Types B and C share their height multisets but not their distributions.
for name in ("B3", "C3"):
    print(name, compute_distribution(GroupSpec.parse(name), ODD).counts)

print()
for name in ("B2", "B3", "B4", "B5", "B6", "B7", "B8", "D4", "D5", "D6", "D7",
             "G2", "F4", "E6", "E7"):
    group = GroupSpec.parse(name)
    rs = build_root_system(group)
    d = compute_distribution(group, ODD)
    ok, dip = is_unimodal(d)
    verdict = "unimodal" if ok else f"dip at {dip} ({d.counts[dip]})"
    print(f"{name:>3}  |W| = {rs.order:>9}  degree {d.degree:>3}  {verdict}")
