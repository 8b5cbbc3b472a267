"""
A multiplicative filter on N5 that is not Ako
=============================================

On a multiplicative lattice, an up-closed family closed under products is
both Ako and Oka: (i v sa)(i v sb) lies below i v ab. That inequality
uses distributivity of the product over joins. N5 under the meet is a
V-lattice without it, and the claim breaks there.
"""

from multlat import ElementFamily, builtin, is_s_ako, run_theorem_suite, trivial_set
from multlat.principle import report_line

n5 = builtin("n5_meet")
L = n5.lattice
a, b, c = (L.index(x) for x in "abc")

# %%
# F = {b, 1} is up-closed and closed under the meet.
F = ElementFamily(n5, [b, n5.one])
print("semi-filter:", bool(F.semi_filter), " M-closed:", bool(F.m_closed))

# %%
# With s = 1 and i = a: a v b = b and a v c = 1 are in F,
# but a v (b ^ c) = a v 0 = a is not.
print("a v b =", n5.label(L.join(a, b)), "  a v c =", n5.label(L.join(a, c)),
      "  a v bc =", n5.label(L.join(a, n5.mul(b, c))))
v = is_s_ako(F, trivial_set(n5))
print("ako:", bool(v), {k: n5.label(x) for k, x in v.witness.items()})

# %%
# The S-PEP itself still holds on N5; only the lemmas that build Ako
# families from filters fail.
for r in run_theorem_suite(n5, ids=("thm-2.3-ako", "thm-2.3-oka", "lemma-2.6", "lemma-2.11", "lemma-5.1")):
    print(report_line(r))
