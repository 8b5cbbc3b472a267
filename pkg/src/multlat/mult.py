"""Multiplications on finite lattices.

A :class:`MultLattice` couples a :class:`~multlat.lattice.FiniteLattice`
with a commutative product table and records which axiom level the table
reaches:

``MULTIPLICATIVE``
    associative, 1 is the identity, and the product distributes over every
    join. On a finite lattice it is enough to check binary joins and the
    empty join (``a * 0 == 0``).
``V_LATTICE``
    not multiplicative, but associative, 1 is the identity, the product is
    monotone and ``a * b <= a ^ b``.
``INVALID``
    neither.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from .errors import DimensionMismatch
from .lattice import FiniteLattice
from .verdict import Verdict

MULTIPLICATIVE = "multiplicative"
V_LATTICE = "v-lattice-only"
INVALID = "invalid"

# Full definitional audit of compactness enumerates 2^n subsets.
COMPACT_AUDIT_MAX_N = 12


def _first(mask):
    idx = np.argwhere(mask)
    return tuple(int(v) for v in idx[0]) if len(idx) else None


def check_commutative(T):
    w = _first(T != T.T)
    return Verdict.fail("commutativity", a=w[0], b=w[1]) if w else Verdict.ok()


def check_associative(T):
    # left[a, b, c] = (a*b)*c ; right[a, b, c] = a*(b*c)
    left = T[T[:, :, None], np.arange(len(T))[None, None, :]]
    right = T[np.arange(len(T))[:, None, None], T[None, :, :]]
    w = _first(left != right)
    return Verdict.fail("associativity", a=w[0], b=w[1], c=w[2]) if w else Verdict.ok()


def check_identity(L, T):
    w = _first(T[:, L.top] != np.arange(L.n))
    return Verdict.fail("identity", a=w[0]) if w else Verdict.ok()


def check_join_distributive(L, T):
    J = L.join_table
    # lhs[a, x, y] = a*(x v y) ; rhs = (a*x) v (a*y)
    lhs = T[np.arange(L.n)[:, None, None], J[None, :, :]]
    rhs = J[T[:, :, None], T[:, None, :]]
    w = _first(lhs != rhs)
    return Verdict.fail("distributivity", a=w[0], x=w[1], y=w[2]) if w else Verdict.ok()


def check_zero_absorbing(L, T):
    w = _first(T[:, L.bottom] != L.bottom)
    return Verdict.fail("zero", a=w[0]) if w else Verdict.ok()


def check_monotone(L, T):
    # a <= b  ==>  a*c <= b*c
    le_prod = L.leq[T[:, None, :], T[None, :, :]]
    w = _first(L.leq[:, :, None] & ~le_prod)
    return Verdict.fail("monotonicity", a=w[0], b=w[1], c=w[2]) if w else Verdict.ok()


def check_below_meet(L, T):
    w = _first(~L.leq[T, L.meet_table])
    return Verdict.fail("below-meet", a=w[0], b=w[1]) if w else Verdict.ok()


def multiplicative_checks(L, T):
    yield check_associative(T)
    yield check_identity(L, T)
    yield check_join_distributive(L, T)
    yield check_zero_absorbing(L, T)


def v_lattice_checks(L, T):
    yield check_associative(T)
    yield check_identity(L, T)
    yield check_monotone(L, T)
    yield check_below_meet(L, T)


def _first_failure(checks):
    for v in checks:
        if not v:
            return v
    return None


def classify_table(L, T):
    """Return ``(class, violation)`` for table ``T`` on lattice ``L``.

    ``violation`` is the first failed multiplicative-level axiom for a
    V-lattice, the first failed V-level axiom for an invalid table, and
    ``None`` for a multiplicative lattice.
    """
    comm = check_commutative(T)
    if not comm:
        return INVALID, comm
    mult_fail = _first_failure(multiplicative_checks(L, T))
    if mult_fail is None:
        return MULTIPLICATIVE, None
    v_fail = _first_failure(v_lattice_checks(L, T))
    if v_fail is None:
        return V_LATTICE, mult_fail
    return INVALID, v_fail


@dataclass(frozen=True, eq=False)
class MultLattice:
    lattice: FiniteLattice
    table: np.ndarray
    kind: str
    violation: Verdict | None = None

    def __repr__(self):
        return f"MultLattice({self.lattice.name or '?'}, n={self.n}, {self.kind})"

    def __eq__(self, other):
        if not isinstance(other, MultLattice):
            return NotImplemented
        return self.lattice == other.lattice and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.lattice, self.table.tobytes()))

    # shorthands used all over the verifiers
    @property
    def n(self):
        return self.lattice.n

    @property
    def name(self):
        return self.lattice.name

    @property
    def zero(self):
        return self.lattice.bottom

    @property
    def one(self):
        return self.lattice.top

    @property
    def elements(self):
        return self.lattice.elements

    @property
    def is_multiplicative(self):
        return self.kind == MULTIPLICATIVE

    def mul(self, a, b):
        return int(self.table[a, b])

    def product(self, elems):
        acc = self.one
        for x in elems:
            acc = self.table[acc, x]
        return int(acc)

    def le(self, a, b):
        return bool(self.lattice.leq[a, b])

    def label(self, i):
        return self.lattice.labels[i]

    def labels_of(self, elems):
        return [self.lattice.labels[i] for i in elems]

    @cached_property
    def residual_table(self):
        """``R[a, b] = (a : b)``, the join of all x with x*b <= a."""
        L, T = self.lattice, self.table
        n = L.n
        R = np.empty((n, n), dtype=np.int64)
        # below[x, b, a] = x*b <= a
        below = L.leq[T[:, :, None], np.arange(n)[None, None, :]]
        for a in range(n):
            for b in range(n):
                R[a, b] = L.join_mask(below[:, b, a])
        R.setflags(write=False)
        return R

    def residual(self, a, b):
        return int(self.residual_table[a, b])

    def powers(self, a):
        """Distinct powers a, a^2, ... up to the first repeat."""
        seen = []
        p = a
        while p not in seen:
            seen.append(p)
            p = int(self.table[p, a])
        return seen

    def nilpotency_index(self, a):
        """Least k with a^k == 0, or None."""
        for k, p in enumerate(self.powers(a), start=1):
            if p == self.zero:
                return k
        return None

    def star(self, a):
        """Join of every x with a^k * x == 0 for some k >= 1."""
        T = self.table
        killed = np.zeros(self.n, dtype=bool)
        for p in self.powers(a):
            killed |= T[p] == self.zero
        return self.lattice.join_mask(killed)

    @cached_property
    def star_table(self):
        return tuple(self.star(a) for a in self.elements)

    # --- element predicates -------------------------------------------

    def is_nilpotent(self, a):
        return self.nilpotency_index(a) is not None

    def is_dense(self, a):
        return self.residual(self.zero, a) == self.zero

    def is_essential(self, a):
        M = self.lattice.meet_table
        others = [x for x in self.elements if x != self.zero]
        return all(M[a, x] != self.zero for x in others)

    def is_zero_divisor(self, a):
        return any(
            self.table[a, y] == self.zero for y in self.elements if y != self.zero
        )

    @cached_property
    def annihilator_elements(self):
        z = self.zero
        hits = {self.residual(z, x) for x in self.elements if x != z}
        return frozenset(a for a in hits if a != self.one)

    def is_annihilator(self, a):
        return a in self.annihilator_elements

    def meet_principal_verdict(self, m):
        """a ^ m*b == m*((a:m) ^ b) for all a, b."""
        L, T, R = self.lattice, self.table, self.residual_table
        M = L.meet_table
        lhs = M[:, T[m]]  # lhs[a, b] = a ^ (m*b)
        rhs = T[m][M[R[:, m][:, None], np.arange(self.n)[None, :]]]
        w = _first(lhs != rhs)
        return Verdict.fail("meet-principal", a=w[0], b=w[1]) if w else Verdict.ok()

    def join_principal_verdict(self, m):
        """a v (b:m) == ((a*m) v b) : m for all a, b."""
        L, T, R = self.lattice, self.table, self.residual_table
        J = L.join_table
        lhs = J[:, R[:, m]]  # lhs[a, b] = a v (b:m)
        rhs = R[J[T[:, m][:, None], np.arange(self.n)[None, :]], m]
        w = _first(lhs != rhs)
        return Verdict.fail("join-principal", a=w[0], b=w[1]) if w else Verdict.ok()

    @cached_property
    def meet_principal_elements(self):
        return frozenset(m for m in self.elements if self.meet_principal_verdict(m))

    @cached_property
    def join_principal_elements(self):
        return frozenset(m for m in self.elements if self.join_principal_verdict(m))

    @cached_property
    def principal_elements(self):
        return self.meet_principal_elements & self.join_principal_elements

    def is_compact(self, a, audit=False):
        """Every element of a finite lattice is compact.

        ``audit=True`` runs the definition literally (see compact_audit).
        """
        if not audit:
            return True
        return compact_audit(self.lattice, a)

    def element_flags(self, a):
        return element_predicates(self, a)


def compact_audit(L, a):
    """Check compactness of ``a`` from the definition, for n <= 12.

    For every subset A with a <= join(A), look for a finite sub-family of A
    whose join already covers ``a``, trying the smallest sizes first.
    """
    if L.n > COMPACT_AUDIT_MAX_N:
        raise ValueError(f"compactness audit is limited to n <= {COMPACT_AUDIT_MAX_N}")
    for mask in range(1 << L.n):
        members = [x for x in L.elements if mask >> x & 1]
        if not L.leq[a, L.join_set(members)]:
            continue
        if not any(
            L.leq[a, L.join_set(sub)]
            for k in range(len(members) + 1)
            for sub in combinations(members, k)
        ):
            return False
    return True


def classify_multiplication(L, T):
    """Classify a product table on ``L`` and wrap both in a MultLattice."""
    T = np.array(T, dtype=np.int64)
    if T.shape != (L.n, L.n):
        raise DimensionMismatch(f"table has shape {T.shape}, lattice has {L.n} elements")
    if T.size and (T.min() < 0 or T.max() >= L.n):
        raise DimensionMismatch("table entries fall outside the element range")
    kind, violation = classify_table(L, T)
    T.setflags(write=False)
    return MultLattice(L, T, kind, violation)


def meet_multiplication(L):
    return classify_multiplication(L, L.meet_table.copy())


def residual(M, a, b):
    return M.residual(a, b)


def star(M, a):
    return M.star(a)


FLAG_NAMES = (
    "nilpotent",
    "dense",
    "essential",
    "zero_divisor",
    "annihilator",
    "compact",
    "meet_principal",
    "join_principal",
    "principal",
)


def element_predicates(M, a):
    """All element-level flags of ``a`` as a dict keyed by FLAG_NAMES."""
    mp = a in M.meet_principal_elements
    jp = a in M.join_principal_elements
    return {
        "nilpotent": M.is_nilpotent(a),
        "dense": M.is_dense(a),
        "essential": M.is_essential(a),
        "zero_divisor": M.is_zero_divisor(a),
        "annihilator": M.is_annihilator(a),
        "compact": M.is_compact(a),
        "meet_principal": mp,
        "join_principal": jp,
        "principal": mp and jp,
    }


def is_reduced(M):
    for a in M.elements:
        if a != M.zero and M.is_nilpotent(a):
            return Verdict.fail("nilpotent", a=a, k=M.nilpotency_index(a))
    return Verdict.ok()


def is_join_of_principals(M, a):
    P = [p for p in M.principal_elements if M.le(p, a)]
    return M.lattice.join_set(P) == a


def lattice_class_flags(M):
    c_lattice = M.is_multiplicative
    r_lattice = (
        c_lattice
        and bool(M.lattice.is_modular())
        and all(is_join_of_principals(M, a) for a in M.elements)
    )
    return {"c_lattice": c_lattice, "r_lattice": r_lattice}
