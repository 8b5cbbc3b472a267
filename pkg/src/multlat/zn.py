"""The ring Z_n, its ideals, and ring-side oracles for the lattice notions.

Ideals of Z_n are principal. The ideal (d) with ``d | n`` is labelled
``"(d)"`` and the zero ideal ``(n)`` is labelled ``"(0)"``. In the lattice
Id(Z_n) the elements are ordered by descending divisor, so index 0 is the
zero ideal and the last index is the whole ring.

Two independent routes live here:

* :func:`ideal_lattice` builds Id(Z_n) from gcd/lcm arithmetic on divisors;
* the ``ring_*`` functions work on raw residues ``0..n-1`` and never use
  that arithmetic, so they can serve as oracles for the lattice code.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
import random

import numpy as np

from .errors import BadModulus, OracleMismatch, SNotClosed
from .lattice import FiniteLattice
from .mult import classify_multiplication
from .verdict import Verdict


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def ideal_label(d, n):
    return "(0)" if d == n else f"({d})"


@dataclass(frozen=True)
class ZnModel:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise BadModulus(f"modulus must be an integer >= 2, got {self.n!r}")

    @cached_property
    def divisors(self):
        """Divisors in lattice order: zero ideal first, whole ring last."""
        return sorted(divisors(self.n), reverse=True)

    def contains(self, d, e):
        """(d) is a subset of (e)."""
        return d % e == 0

    def ideal_sum(self, d, e):
        return gcd(d, e)

    def ideal_meet(self, d, e):
        return d * e // gcd(d, e)

    def ideal_product(self, d, e):
        return gcd(d * e, self.n)

    def generator(self, r):
        """Divisor generating the principal ideal (r) of Z_n."""
        return gcd(r % self.n, self.n)


def ideal_lattice(n):
    """Id(Z_n) as a classified MultLattice."""
    Z = ZnModel(n)
    ds = Z.divisors
    k = len(ds)
    leq = np.array([[Z.contains(d, e) for e in ds] for d in ds], dtype=bool)
    L = FiniteLattice([ideal_label(d, n) for d in ds], leq, name=f"Id(Z{n})")
    pos = {d: i for i, d in enumerate(ds)}
    T = np.array([[pos[Z.ideal_product(d, e)] for e in ds] for d in ds], dtype=np.int64)
    M = classify_multiplication(L, T)
    assert M.kind == "multiplicative", M.violation
    assert k == L.n
    return M


def divisor_index(M, n, d):
    return M.lattice.index(ideal_label(d, n))


# --- raw residue arithmetic --------------------------------------------


def residue_ideal(n, gens):
    """Ideal of Z_n generated by ``gens``, as a frozenset of residues.

    In Z_n every ideal is the additive subgroup generated by its
    generators, so this is a breadth-first walk adding generators, with no
    gcd arithmetic.
    """
    steps = sorted({g % n for g in gens} - {0})
    out = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in steps:
            y = (x + g) % n
            if y not in out:
                out.add(y)
                frontier.append(y)
    return frozenset(out)


class ResidueRing:
    """Ideals of Z_n as residue sets plus their operations, by brute force."""

    def __init__(self, n):
        if not isinstance(n, int) or n < 2:
            raise BadModulus(f"modulus must be an integer >= 2, got {n!r}")
        self.n = n
        of_residue = [residue_ideal(n, [r]) for r in range(n)]
        # every ideal of Z_n is principal, so this is the full list
        self.ideals = sorted(set(of_residue), key=lambda s: (len(s), sorted(s)))
        self.pos = {s: i for i, s in enumerate(self.ideals)}
        self._gen = {}
        for r in range(n - 1, -1, -1):
            self._gen[self.pos[of_residue[r]]] = r or n
        self.masks = np.array(
            [[r in s for r in range(n)] for s in self.ideals], dtype=bool
        )
        self._scale_rows = {}

    def __len__(self):
        return len(self.ideals)

    def ideal_of(self, gens):
        return self.pos[residue_ideal(self.n, gens)]

    def generator(self, k):
        """Least positive residue generating ideal k (n for the zero ideal)."""
        return self._gen[k]

    @cached_property
    def sum_table(self):
        k = len(self)
        return np.array(
            [
                [self.pos[residue_ideal(self.n, self.ideals[i] | self.ideals[j])] for j in range(k)]
                for i in range(k)
            ]
        )

    @cached_property
    def product_table(self):
        k, n = len(self), self.n
        return np.array(
            [
                [
                    self.pos[
                        residue_ideal(n, {(x * y) % n for x in self.ideals[i] for y in self.ideals[j]})
                    ]
                    for j in range(k)
                ]
                for i in range(k)
            ]
        )

    def scale(self, s, k):
        """The ideal s*I for residue s and ideal index k."""
        return self.pos[residue_ideal(self.n, {(s * x) % self.n for x in self.ideals[k]})]

    def scale_row(self, s):
        """Ideal indices of s*I for every ideal I (cached per residue)."""
        s %= self.n
        row = self._scale_rows.get(s)
        if row is None:
            row = np.array([self.scale(s, a) for a in range(len(self))])
            self._scale_rows[s] = row
        return row

    def colon_set(self, a, b):
        """{r | r*B subset of A} as a residue set, by scanning residues."""
        A, B = self.ideals[a], self.ideals[b]
        return frozenset(r for r in range(self.n) if all((r * x) % self.n in A for x in B))

    @cached_property
    def colon_table(self):
        k = len(self)
        return np.array([[self.pos[self.colon_set(a, b)] for b in range(k)] for a in range(k)])

    def contains(self, i, j):
        return self.ideals[i] <= self.ideals[j]


def _residues_closed(n, S):
    for x in sorted(S):
        for y in sorted(S):
            if (x * y) % n not in S:
                return (x, y)
    return None


def validate_residue_set(n, S):
    S = frozenset(int(s) % n for s in S)
    if 1 not in S:
        raise SNotClosed("S must contain 1", (1,))
    if 0 in S:
        raise SNotClosed("S must not contain 0", (0,))
    bad = _residues_closed(n, S)
    if bad:
        raise SNotClosed(f"{bad[0]}*{bad[1]} mod {n} is not in S", bad)
    return S


def ring_colon(n, a, b):
    """Generator (a divisor of n) of the colon ideal ((a) : (b)) in Z_n.

    Found by scanning residues r with r*b in (a); the result is the gcd of
    the hits with n.
    """
    ZnModel(n)
    hits = [r for r in range(n) if ((r * b) % n) % a == 0]
    g = n
    for r in hits:
        g = gcd(g, r)
    # the hit set must be exactly the ideal (g)
    assert set(hits) == {r for r in range(n) if r % g == 0}
    return g


def ring_s_prime(n, S, p):
    """Ring-side S-primality of the ideal (p), p a divisor of n.

    Evaluated twice: element-wise over all residue pairs, and ideal-wise
    (for all ideals I, J with IJ in P, sI or sJ lies in P). The two must
    agree; disagreement raises OracleMismatch.
    """
    S = validate_residue_set(n, S)
    if n % p:
        raise BadModulus(f"{p} does not divide {n}")
    r = np.arange(n)
    inP = r % p == 0
    if any(inP[s] for s in S):
        t = min(s for s in S if inP[s])
        return Verdict.fail("meets-S", t=t)
    prod_in = inP[np.outer(r, r) % n]
    elem_s = None
    for s in sorted(S):
        sa = inP[(s * r) % n]
        if not (prod_in & ~(sa[:, None] | sa[None, :])).any():
            elem_s = s
            break
    ideal_s = _ideal_form(n, S, inP)
    if (elem_s is None) != (ideal_s is None):
        raise OracleMismatch(
            f"element-wise and ideal-wise S-primality disagree for ({p}) in Z{n}",
            (elem_s, ideal_s),
        )
    if elem_s is None:
        return Verdict.fail("no-uniform-s")
    return Verdict.ok(s=elem_s, s_ideal=ideal_s)


@lru_cache(maxsize=None)
def _ring_ideals(n):
    return tuple(sorted({residue_ideal(n, [g]) for g in range(n)}, key=sorted))


def _ideal_form(n, S, inP):
    """Least s with: IJ in P implies sI in P or sJ in P, for ideals I, J."""
    ideals = _ring_ideals(n)
    for s in sorted(S):
        ok = True
        for I in ideals:
            sI = all(inP[(s * x) % n] for x in I)
            if sI:
                continue
            for J in ideals:
                IJ = all(inP[(x * y) % n] for x in I for y in J)
                if IJ and not all(inP[(s * y) % n] for y in J):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return s
    return None


def lattice_s(M, n, S):
    """S_L = {(s) | s in S} as element indices of Id(Z_n)."""
    Z = ZnModel(n)
    return frozenset(divisor_index(M, n, Z.generator(s)) for s in S)


def saturate(n, SL_divisors):
    """All residues whose ideal lies in the given set of divisors."""
    Z = ZnModel(n)
    keep = set(SL_divisors)
    return frozenset(r for r in range(n) if Z.generator(r) in keep)


def multiplicative_closure(n, gens):
    S = {1}
    frontier = [g % n for g in gens]
    while frontier:
        g = frontier.pop()
        if g in S:
            continue
        S.add(g)
        frontier.extend(y for y in {(g * x) % n for x in S} if y not in S)
    return frozenset(S)


def residue_sets(n, exhaustive_max=12):
    """Valid multiplicatively closed residue sets S of Z_n.

    Exhaustive for n <= ``exhaustive_max``. Above that: the saturation of
    every lattice-level valid S, plus the closure of every single residue,
    deduplicated. Returned in a deterministic order.
    """
    from .sprime import enumerate_mclosed

    found = set()
    if n <= exhaustive_max:
        others = list(range(2, n))
        for mask in range(1 << len(others)):
            S = frozenset([1] + [x for k, x in enumerate(others) if mask >> k & 1])
            if _residues_closed(n, S) is None:
                found.add(S)
    else:
        M = ideal_lattice(n)
        ds = ZnModel(n).divisors
        for SL in enumerate_mclosed(M):
            found.add(saturate(n, [ds[i] for i in SL]))
        for r in range(1, n):
            S = multiplicative_closure(n, [r])
            if 0 not in S:
                found.add(S)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


# --- ring-side family checks -------------------------------------------


@lru_cache(maxsize=None)
def _residue_ring(n):
    return ResidueRing(n)


def ring_family_verdicts(R, S, F):
    """Ring-sense S-Ako and S-Oka verdicts for an ideal family.

    ``R`` is a ResidueRing, ``S`` a residue set, ``F`` a boolean mask over
    ``R.ideals``. Terms are built exactly as in the ring definitions:
    (I, sA) is the ideal sum of I and sA, (I : sA) the colon ideal.
    """
    k = len(R)
    Sum, Prod, Col = R.sum_table, R.product_table, R.colon_table
    ab_in = F[Sum[np.arange(k)[:, None, None], Prod[None, :, :]]]  # (I, AB) in F
    ako = oka = True
    # residues with the same s*A row give identical constraints
    rows = {tuple(R.scale_row(s)) for s in S}
    for row in sorted(rows):
        sA = np.array(row)
        left = F[Sum[:, sA]]  # left[I, A] = (I, sA) in F
        # Ako: left[I, A] & left[I, B] ==> (I, AB) in F
        if ako and (left[:, :, None] & left[:, None, :] & ~ab_in).any():
            ako = False
        # Oka: (I, sA) in F & (I : sA) in F ==> I in F
        col_in = F[Col[:, sA]]
        if oka and (left & col_in & ~F[:, None]).any():
            oka = False
        if not (ako or oka):
            break
    return ako, oka


def ring_index_map(M, n, R):
    """Map ResidueRing ideal index -> lattice element index."""
    return np.array([divisor_index(M, n, R.generator(i)) for i in range(len(R))])


def crosscheck(n, S, n_families=1000, seed=0):
    """Compare ring-side oracles with the lattice implementation on Z_n.

    Returns a TheoremReport (id ``zn-crosscheck``) whose witnesses record
    every mismatch found; a passing report has none.
    """
    from .families import ElementFamily, is_s_ako, is_s_oka
    from .principle import TheoremReport
    from .sprime import is_sprime, validate_mclosed

    S = validate_residue_set(n, S)
    M = ideal_lattice(n)
    Z = ZnModel(n)
    ds = Z.divisors
    SL = validate_mclosed(M, lattice_s(M, n, S))
    mismatches = []

    # residual vs ring colon
    for i, a in enumerate(ds):
        for j, b in enumerate(ds):
            lat = M.residual(i, j)
            ring = divisor_index(M, n, ring_colon(n, a, b))
            if lat != ring:
                mismatches.append(("residual", M.label(i), M.label(j), M.label(lat), M.label(ring)))

    # S-prime ideals vs S_L-prime elements
    ring_spec, lat_spec = [], []
    for i, p in enumerate(ds):
        rv = ring_s_prime(n, S, p)
        lv = is_sprime(M, SL, i)
        if rv.passed:
            ring_spec.append(i)
        if lv.passed:
            lat_spec.append(i)
        if rv.passed != lv.passed:
            mismatches.append(("s-prime", M.label(i), rv.passed, lv.passed))

    # family verdicts, ring sense vs lattice sense
    R = _residue_ring(n)
    to_lat = ring_index_map(M, n, R)
    k = M.n
    S_idx = sorted(SL.members)
    free = [x for x in M.elements if x not in SL.members]
    rng = random.Random(f"crosscheck:{n}:{sorted(S)}:{seed}")
    if len(free) <= 10 and (1 << len(free)) <= n_families:
        masks = range(1 << len(free))
    else:
        masks = [rng.getrandbits(len(free)) for _ in range(n_families)]
    checked = 0
    for mask in masks:
        members = set(S_idx) | {x for b, x in enumerate(free) if mask >> b & 1}
        lat_mask = np.zeros(k, dtype=bool)
        lat_mask[list(members)] = True
        F = ElementFamily(M, members)
        lat_ako = is_s_ako(F, SL).passed
        lat_oka = is_s_oka(F, SL).passed
        ring_ako, ring_oka = ring_family_verdicts(R, S, lat_mask[to_lat])
        checked += 1
        if (lat_ako, lat_oka) != (ring_ako, ring_oka):
            mismatches.append(
                ("family", tuple(M.labels_of(sorted(members))), (lat_ako, lat_oka), (ring_ako, ring_oka))
            )

    verdict = (
        Verdict.ok(families=checked)
        if not mismatches
        else Verdict.fail("mismatch", mismatches=tuple(mismatches))
    )
    return TheoremReport(
        theorem_id="zn-crosscheck",
        host=M.name,
        preconditions=(("s-valid", Verdict.ok()),),
        conclusion=verdict,
        witnesses={
            "S": tuple(sorted(S)),
            "S_L": tuple(M.labels_of(S_idx)),
            "spec_s": tuple(M.labels_of(lat_spec)),
            "ring_spec_s": tuple(M.labels_of(ring_spec)),
            "families": checked,
        },
    )
