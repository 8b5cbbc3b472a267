"""
Lattice code against ring arithmetic
====================================

Id(Z_n) is built from gcd and lcm on divisors. The ring side works on raw
residues 0..n-1. For each n we compare residuals with colon ideals,
S-prime elements with S-prime ideals, and Ako/Oka verdicts on sampled
families.
"""

import time

from multlat import crosscheck, ideal_lattice, residue_sets

# %%
print(f"{'n':>4} {'elements':>9} {'sets S':>7} {'mismatches':>11} {'seconds':>8}")
for n in (6, 12, 24, 30, 36):
    t = time.perf_counter()
    sets = residue_sets(n)
    bad = sum(not crosscheck(n, S, n_families=200).passed for S in sets)
    print(f"{n:>4} {ideal_lattice(n).n:>9} {len(sets):>7} {bad:>11} {time.perf_counter() - t:>8.2f}")

# %%
# One report in full.
r = crosscheck(12, {1, 4})
print(r.status, r.witnesses)
