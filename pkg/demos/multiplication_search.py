"""
Counting multiplications on small lattices
==========================================

A backtracking search fills the product table cell by cell and prunes on
associativity, monotonicity and, for the multiplicative level, join
distributivity. N5 admits V-lattice products but no multiplicative one.
"""

from multlat import catalog
from multlat.mult import classify_multiplication

lattices = {
    "chain(3)": catalog.chain_lattice(3),
    "chain(4)": catalog.chain_lattice(4),
    "boolean(2)": catalog.boolean_lattice(2),
    "N5": catalog.n5_lattice(),
    "K": catalog.k_lattice(),
}

# %%
print(f"{'lattice':<11} {'multiplicative':>14} {'v-lattice':>10}")
for name, L in lattices.items():
    m = catalog.search_multiplications(L, "multiplicative")
    v = catalog.search_multiplications(L, "v_lattice")
    print(f"{name:<11} {m.count:>14} {v.count:>10}")

# %%
# Each table found on N5 fails join distributivity somewhere.
res = catalog.search_multiplications(lattices["N5"], "v_lattice", max_examples=3)
for T in res.examples:
    M = classify_multiplication(lattices["N5"], T)
    w = {k: M.label(x) for k, x in M.violation.witness.items()}
    print(M.kind, M.violation.reason, w)
