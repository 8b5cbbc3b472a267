"""
Ako and Oka families
====================

A family is Ako when i v sa and i v sb in F force i v ab into F, and Oka
when i v sa and (i : sa) in F force i into F. When either holds, the
maximal elements outside F are S-prime. The converse fails, and on the
lattice K an Oka family need not be Ako.
"""

from multlat import (
    ElementFamily,
    build_named_family,
    builtin,
    check_converse_failure,
    check_s_pep,
    is_s_ako,
    is_s_oka,
    reports_to_text,
    trivial_set,
)

z12 = builtin("idz12")
ix = z12.lattice.index
S = trivial_set(z12)


def fam(*labels):
    return ElementFamily(z12, [ix(x) for x in labels])


def show(v):
    return "yes" if v else "no  " + " ".join(f"{k}={z12.label(x)}" for k, x in v.witness.items()
                                              if isinstance(x, int))


# %%
# {(1),(6)} is Oka but not Ako. Take i = (0) and a = b = (6).
F = fam("(1)", "(6)")
print("F = {(1),(6)}   ako:", show(is_s_ako(F, S)), "  oka:", show(is_s_oka(F, S)))
print(reports_to_text([check_s_pep(z12, S, F, "oka")]), end="")

# %%
# {(4),(6),(2),(1)} leaves only (3) maximal outside it, and (3) is prime,
# yet the family is neither Ako nor Oka.
r = check_converse_failure(z12, S, fam("(4)", "(6)", "(2)", "(1)"))
print(r.status, r.witnesses["max"], r.witnesses["oka_witness"])

# %%
# On K, where every product of proper elements is 0, the non-annihilator
# elements form an Oka family that is not Ako.
K = builtin("figure3_K")
F = build_named_family(K, "non_annihilator")
print("K non-annihilators:", F.labels, " ako:", bool(is_s_ako(F, trivial_set(K))),
      " oka:", bool(is_s_oka(F, trivial_set(K))))
