"""
S-prime elements on two small lattices
======================================

N5 under the meet is a V-lattice that is not multiplicative. Id(Z12) is
the ideal lattice of the integers mod 12. Both are small enough to list
every multiplicatively closed set and its S-prime elements.
"""

from multlat import builtin, enumerate_mclosed, is_sprime, spec_s, validate_mclosed

n5 = builtin("n5_meet")
z12 = builtin("idz12")

# %%
# Every valid S on N5 and what it leaves S-prime. S = {1} gives the
# ordinary primes.
for members in enumerate_mclosed(n5):
    S = validate_mclosed(n5, members)
    print(f"N5   S = {{{', '.join(S.labels)}}}".ljust(24), "->", " ".join(n5.labels_of(spec_s(n5, S))))

# %%
# The same on Id(Z12). Adding (4) to S turns (0) and (6) into S-primes
# and removes (2).
for members in enumerate_mclosed(z12):
    S = validate_mclosed(z12, members)
    print(f"Z12  S = {{{', '.join(S.labels)}}}".ljust(24), "->", " ".join(z12.labels_of(spec_s(z12, S))))

# %%
# A verdict carries its evidence. For (6) with S = {(1),(4)} the witness is
# the single s that works for every pair; for (2) it is the member of S
# lying below it.
S = validate_mclosed(z12, [z12.lattice.index("(1)"), z12.lattice.index("(4)")])
for p in ("(6)", "(2)"):
    v = is_sprime(z12, S, z12.lattice.index(p))
    shown = {k: z12.label(x) for k, x in v.witness.items() if isinstance(x, int)}
    print(p, "s-prime" if v else v.reason, shown)
