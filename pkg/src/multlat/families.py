"""Element families: structural flags, S-Ako / S-Oka checks, named families.

All quantifier scans run in ascending index order (s, then i, then a, then
b) and report the first counterexample found.
"""

from collections import deque
from functools import cached_property
import random

import numpy as np

from .errors import (
    BadParams,
    MissingTop,
    NotRLattice,
    PrNotContained,
    SNotContained,
)
from .mult import MultLattice, lattice_class_flags
from .sprime import MClosedSet
from .verdict import Verdict


def _members(S):
    return S.members if isinstance(S, MClosedSet) else frozenset(S)


def _first(mask):
    idx = np.argwhere(mask)
    return tuple(int(v) for v in idx[0]) if len(idx) else None


class ElementFamily:
    """A set of lattice elements with lazily computed structural flags."""

    def __init__(self, host: MultLattice, members):
        self.host = host
        self.members = frozenset(int(x) for x in members)
        mask = np.zeros(host.n, dtype=bool)
        mask[list(self.members)] = True
        mask.setflags(write=False)
        self.mask = mask

    @classmethod
    def from_mask(cls, host, mask):
        return cls(host, np.flatnonzero(mask))

    def __repr__(self):
        return f"ElementFamily({self.labels})"

    def __eq__(self, other):
        if not isinstance(other, ElementFamily):
            return NotImplemented
        return self.host is other.host and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    @property
    def labels(self):
        return self.host.labels_of(sorted(self.members))

    @property
    def complement(self):
        return frozenset(x for x in self.host.elements if x not in self.members)

    # write-once caches; recomputing from scratch gives the same answer
    @cached_property
    def semi_filter(self):
        return check_semi_filter(self)

    @cached_property
    def filter(self):
        return check_filter(self)

    @cached_property
    def m_closed(self):
        return check_m_closed(self)


def check_semi_filter(F):
    """j in F and j <= i imply i in F. Witness keys j, i."""
    leq = F.host.lattice.leq
    w = _first(F.mask[:, None] & leq & ~F.mask[None, :])
    return Verdict.fail("semi-filter", j=w[0], i=w[1]) if w else Verdict.ok()


def check_meet_closed(F):
    M = F.host.lattice.meet_table
    w = _first(F.mask[:, None] & F.mask[None, :] & ~F.mask[M])
    return Verdict.fail("meet-closed", i=w[0], j=w[1]) if w else Verdict.ok()


def check_filter(F):
    sf = check_semi_filter(F)
    return sf if not sf else check_meet_closed(F)


def check_m_closed(F):
    T = F.host.table
    w = _first(F.mask[:, None] & F.mask[None, :] & ~F.mask[T])
    return Verdict.fail("m-closed", i=w[0], j=w[1]) if w else Verdict.ok()


def structural_flags(F):
    """Semi-filter, filter and M-closed verdicts for a family containing 1."""
    if F.host.one not in F.members:
        raise MissingTop("a family must contain the top element")
    return {"semi_filter": F.semi_filter, "filter": F.filter, "m_closed": F.m_closed}


def _require_contains(F, S):
    missing = sorted(_members(S) - F.members)
    if missing:
        raise SNotContained(
            "S is not contained in the family", tuple(F.host.labels_of(missing))
        )


def is_s_ako(F, S):
    """For s in S and i, a, b: i v sa, i v sb in F imply i v ab in F.

    Failing witness keys: s, i, a, b.
    """
    _require_contains(F, S)
    M = F.host
    J, T, inF = M.lattice.join_table, M.table, F.mask
    ab_in = inF[J[:, T]]  # ab_in[i, a, b] = i v ab in F
    for s in sorted(_members(S)):
        left = inF[J[:, T[s]]]  # left[i, a] = i v sa in F
        w = _first(left[:, :, None] & left[:, None, :] & ~ab_in)
        if w:
            return Verdict.fail("s-ako", s=s, i=w[0], a=w[1], b=w[2])
    return Verdict.ok()


def ako_violated_at(F, s, i, a, b):
    """Whether the single instance (s, i, a, b) violates the S-Ako law."""
    M = F.host
    J, T = M.lattice.join_table, M.table
    return (
        J[i, T[s, a]] in F.members
        and J[i, T[s, b]] in F.members
        and J[i, T[a, b]] not in F.members
    )


def _oka_scan(F, S, a_range):
    M = F.host
    J, T, R, inF = M.lattice.join_table, M.table, M.residual_table, F.mask
    cols = np.zeros(M.n, dtype=bool)
    cols[list(a_range)] = True
    for s in sorted(_members(S)):
        sa = T[s]
        bad = inF[J[:, sa]] & inF[R[:, sa]] & ~inF[:, None] & cols[None, :]
        w = _first(bad)
        if w:
            i, a = w
            return Verdict.fail(
                "s-oka", s=s, i=i, a=a, join=int(J[i, sa[a]]), residual=int(R[i, sa[a]])
            )
    return Verdict.ok()


def is_s_oka(F, S):
    """For s in S and i, a: i v sa, (i : sa) in F imply i in F.

    Failing witness keys: s, i, a, plus the join and residual involved.
    """
    _require_contains(F, S)
    return _oka_scan(F, S, F.host.elements)


def is_spr_oka(F, S):
    """The S-Oka law with ``a`` restricted to principal elements.

    Requires an r-lattice host and S within Pr(L) within F.
    """
    M = F.host
    if not lattice_class_flags(M)["r_lattice"]:
        raise NotRLattice(f"{M.name or 'host'} is not an r-lattice")
    pr = M.principal_elements
    outside = sorted(_members(S) - pr)
    if outside:
        raise SNotContained("S is not contained in Pr(L)", tuple(M.labels_of(outside)))
    missing = sorted(pr - F.members)
    if missing:
        raise PrNotContained("Pr(L) is not contained in the family", tuple(M.labels_of(missing)))
    return _oka_scan(F, S, sorted(pr))


def residual_oka_condition(F, S):
    """i <= sj and sj, (i : sj) in F imply i in F, for all s in S and i, j.

    Failing witness keys: s, i, j.
    """
    _require_contains(F, S)
    M = F.host
    T, R, leq, inF = M.table, M.residual_table, M.lattice.leq, F.mask
    for s in sorted(_members(S)):
        sj = T[s]
        bad = leq[:, sj] & inF[sj][None, :] & inF[R[:, sj]] & ~inF[:, None]
        w = _first(bad)
        if w:
            return Verdict.fail("lemma-1.67", s=s, i=w[0], j=w[1])
    return Verdict.ok()


def max_complement(F):
    return F.host.lattice.maximal_members(F.complement)


# --- named families -----------------------------------------------------


def semigroup_closure(M, generators):
    """All finite products (length >= 1, repeats allowed) of the generators."""
    gens = sorted(set(int(g) for g in generators))
    seen = set(gens)
    queue = deque(gens)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = M.mul(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def product_word(M, generators, target):
    """Shortest generator word whose product lies below ``target``.

    Breadth-first over product values, so the word has minimal length. The
    product is commutative, so the word is returned sorted. Returns None if
    no product works.
    """
    gens = sorted(set(int(g) for g in generators))
    queue = deque((g, (g,)) for g in gens)
    seen = set(gens)
    while queue:
        x, word = queue.popleft()
        if M.le(x, target):
            return tuple(sorted(word))
        for g in gens:
            y = M.mul(x, g)
            if y not in seen:
                seen.add(y)
                queue.append((y, word + (g,)))
    return None


def _upset_of(M, elems):
    leq = M.lattice.leq
    mask = np.zeros(M.n, dtype=bool)
    for x in elems:
        mask |= leq[x]
    return mask


FAMILY_KINDS = (
    "avoiding_primes",
    "above_S",
    "star_zero",
    "dense",
    "non_annihilator",
    "essential",
    "meet_principal",
    "compact",
    "product_closure",
)


def build_named_family(M, kind, S=None, primes=None, generators=None):
    """Construct one of the named families.

    ``avoiding_primes`` needs ``S`` and ``primes``: {j | s*j not <= p for
    every p in primes and every s in S}. ``above_S`` needs ``S``.
    ``product_closure`` needs ``generators``: the elements lying above some
    finite product of generators.
    """
    n = M.n
    T, leq = M.table, M.lattice.leq
    if kind == "avoiding_primes":
        if S is None or primes is None:
            raise BadParams("avoiding_primes needs S and primes")
        mask = np.ones(n, dtype=bool)
        for p in primes:
            for s in _members(S):
                mask &= ~leq[T[s], p]
    elif kind == "above_S":
        if S is None:
            raise BadParams("above_S needs S")
        mask = _upset_of(M, _members(S))
    elif kind == "star_zero":
        mask = np.array([M.star(j) == M.zero for j in M.elements])
    elif kind == "dense":
        mask = np.array([M.is_dense(j) for j in M.elements])
    elif kind == "non_annihilator":
        mask = np.array([not M.is_annihilator(j) for j in M.elements])
    elif kind == "essential":
        mask = np.array([M.is_essential(j) for j in M.elements])
    elif kind == "meet_principal":
        mask = np.array([j in M.meet_principal_elements for j in M.elements])
    elif kind == "compact":
        mask = np.array([M.is_compact(j) for j in M.elements])
    elif kind == "product_closure":
        if not generators:
            raise BadParams("product_closure needs a non-empty generator list")
        mask = _upset_of(M, semigroup_closure(M, generators))
    else:
        raise BadParams(f"unknown family kind {kind!r}; expected one of {', '.join(FAMILY_KINDS)}")
    return ElementFamily.from_mask(M, mask)


# --- enumeration ----------------------------------------------------------

# Exhaustive family enumeration stops at this many elements.
EXHAUSTIVE_MAX_N = 7
SAMPLE_SIZE = 10_000


def families_containing(M, base, limit_n=EXHAUSTIVE_MAX_N, sample=SAMPLE_SIZE, seed=0):
    """Families F with base within F.

    All of them when n <= ``limit_n``, otherwise a seeded random sample of
    ``sample`` families (duplicates possible).
    """
    base = sorted(set(base))
    free = [x for x in M.elements if x not in base]
    if M.n <= limit_n:
        for mask in range(1 << len(free)):
            yield ElementFamily(M, base + [x for k, x in enumerate(free) if mask >> k & 1])
        return
    rng = random.Random(f"families:{M.name}:{base}:{seed}")
    for _ in range(sample):
        bits = rng.getrandbits(len(free))
        yield ElementFamily(M, base + [x for k, x in enumerate(free) if bits >> k & 1])


def upsets(M):
    """Every nonempty up-closed family, as ElementFamily objects."""
    leq = M.lattice.leq
    out = []
    seen = set()

    # an up-set is determined by its antichain of minimal elements; grow
    # them one element at a time in index order
    def grow(mask, start):
        key = mask.tobytes()
        if key not in seen:
            seen.add(key)
            out.append(ElementFamily.from_mask(M, mask))
        for x in range(start, M.n):
            if not mask[x]:
                grow(mask | leq[x], x + 1)

    for x in M.elements:
        grow(leq[x].copy(), x + 1)
    return out
