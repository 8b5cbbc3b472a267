"""Finite bounded lattices over canonical element indices.

Elements are the integers ``0..n-1``; labels only matter for I/O. The order
is stored as a dense boolean matrix and join/meet are tabulated once at
construction, so every later query is a table lookup.

A finite bounded lattice is complete, so no separate completeness check is
made.
"""

from itertools import product

import numpy as np

from .errors import FormatError, NoBounds, NotALattice, NotAPoset
from .verdict import Verdict


def _frozen(arr):
    arr.setflags(write=False)
    return arr


def transitive_closure(rel):
    """Reflexive-transitive closure of a boolean relation (Warshall)."""
    closure = np.array(rel, dtype=bool, copy=True)
    np.fill_diagonal(closure, True)
    for k in range(closure.shape[0]):
        closure |= np.outer(closure[:, k], closure[k, :])
    return closure


def _least_in(leq, mask):
    """Index of the least element of ``mask`` under ``leq``, or -1."""
    cand = np.flatnonzero(mask)
    for c in cand:
        if leq[c, cand].all():
            return int(c)
    return -1


class FiniteLattice:
    """A finite lattice given by its order matrix.

    ``leq[i, j]`` is true iff element ``i`` lies below element ``j``.
    """

    def __init__(self, labels, leq, name=""):
        labels = [str(x) for x in labels]
        if len(set(labels)) != len(labels):
            dup = next(x for x in labels if labels.count(x) > 1)
            raise FormatError(f"duplicate element label {dup!r}", dup)
        leq = np.array(leq, dtype=bool)
        n = len(labels)
        if n == 0:
            raise NoBounds("a lattice needs at least one element")
        if leq.shape != (n, n):
            raise FormatError(f"order matrix has shape {leq.shape}, expected {(n, n)}")
        if not leq.diagonal().all():
            i = int(np.flatnonzero(~leq.diagonal())[0])
            raise NotAPoset(f"order is not reflexive at {labels[i]}", (labels[i],))
        both = leq & leq.T
        np.fill_diagonal(both, False)
        if both.any():
            i, j = (int(v) for v in np.argwhere(both)[0])
            raise NotAPoset(
                f"order is not antisymmetric: {labels[i]} and {labels[j]} lie below each other",
                (labels[i], labels[j]),
            )
        two_step = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
        if (two_step & ~leq).any():
            i, j = (int(v) for v in np.argwhere(two_step & ~leq)[0])
            raise NotAPoset(
                f"order is not transitive: {labels[i]} < {labels[j]} is implied but missing",
                (labels[i], labels[j]),
            )

        bottoms = np.flatnonzero(leq.all(axis=1))
        tops = np.flatnonzero(leq.all(axis=0))
        if len(bottoms) == 0 or len(tops) == 0:
            raise NoBounds("order has no least or no greatest element")

        join = np.empty((n, n), dtype=np.int64)
        meet = np.empty((n, n), dtype=np.int64)
        for i, j in product(range(n), repeat=2):
            if j < i:
                join[i, j] = join[j, i]
                meet[i, j] = meet[j, i]
                continue
            u = _least_in(leq, leq[i] & leq[j])
            if u < 0:
                raise NotALattice(
                    f"{labels[i]} and {labels[j]} have no least upper bound",
                    (labels[i], labels[j]),
                )
            m = _least_in(leq.T, leq[:, i] & leq[:, j])
            if m < 0:
                raise NotALattice(
                    f"{labels[i]} and {labels[j]} have no greatest lower bound",
                    (labels[i], labels[j]),
                )
            join[i, j] = u
            meet[i, j] = m

        self.name = name
        self.labels = tuple(labels)
        self.n = n
        self.leq = _frozen(leq)
        self.join_table = _frozen(join)
        self.meet_table = _frozen(meet)
        self.bottom = int(bottoms[0])
        self.top = int(tops[0])
        self._index = {x: i for i, x in enumerate(labels)}

    def __repr__(self):
        return f"FiniteLattice({self.name or '?'}, n={self.n})"

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash((self.labels, self.leq.tobytes()))

    def __len__(self):
        return self.n

    @property
    def elements(self):
        return range(self.n)

    def index(self, label):
        try:
            return self._index[str(label)]
        except KeyError:
            raise FormatError(f"unknown element {label!r}", label) from None

    def indices(self, labels):
        return [self.index(x) for x in labels]

    def label(self, i):
        return self.labels[i]

    def le(self, a, b):
        return bool(self.leq[a, b])

    def lt(self, a, b):
        return a != b and bool(self.leq[a, b])

    def join(self, a, b):
        return int(self.join_table[a, b])

    def meet(self, a, b):
        return int(self.meet_table[a, b])

    def join_set(self, elems):
        """Least upper bound of ``elems``; the empty join is the bottom."""
        acc = self.bottom
        for x in elems:
            acc = self.join_table[acc, x]
        return int(acc)

    def meet_set(self, elems):
        acc = self.top
        for x in elems:
            acc = self.meet_table[acc, x]
        return int(acc)

    def join_mask(self, mask):
        return self.join_set(np.flatnonzero(mask))

    def upset(self, a):
        return frozenset(int(x) for x in np.flatnonzero(self.leq[a]))

    def downset(self, a):
        return frozenset(int(x) for x in np.flatnonzero(self.leq[:, a]))

    def maximal_members(self, elems):
        """Members of ``elems`` with no strictly larger member."""
        elems = sorted(set(elems))
        return frozenset(
            a for a in elems if not any(b != a and self.leq[a, b] for b in elems)
        )

    def minimal_members(self, elems):
        elems = sorted(set(elems))
        return frozenset(
            a for a in elems if not any(b != a and self.leq[b, a] for b in elems)
        )

    def coatoms(self):
        return self.maximal_members(x for x in self.elements if x != self.top)

    def covers(self):
        """Covering pairs ``(lower, upper)`` in ascending index order."""
        strict = self.leq.copy()
        np.fill_diagonal(strict, False)
        through = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
        cov = strict & ~through
        return [(int(a), int(b)) for a, b in np.argwhere(cov)]

    def is_modular(self):
        """For a <= c: a v (b ^ c) == (a v b) ^ c. Witness keys a, b, c."""
        J, M = self.join_table, self.meet_table
        n = self.n
        for a in range(n):
            for c in np.flatnonzero(self.leq[a]):
                lhs = J[a, M[:, c]]
                rhs = M[J[a, :], c]
                bad = np.flatnonzero(lhs != rhs)
                if len(bad):
                    return Verdict.fail("modularity", a=a, b=int(bad[0]), c=int(c))
        return Verdict.ok()

    def is_distributive(self):
        J, M = self.join_table, self.meet_table
        # lhs[a, b, c] = a ^ (b v c); rhs = (a ^ b) v (a ^ c)
        lhs = M[np.arange(self.n)[:, None, None], J[None, :, :]]
        rhs = J[M[:, :, None], M[:, None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            a, b, c = (int(v) for v in bad[0])
            return Verdict.fail("distributivity", a=a, b=b, c=c)
        return Verdict.ok()


def build_lattice(labels, covers, name=""):
    """Build a lattice from its Hasse diagram.

    ``covers`` is an iterable of ``(lower, upper)`` label pairs; the order is
    their reflexive-transitive closure.
    """
    labels = [str(x) for x in labels]
    if len(set(labels)) != len(labels):
        raise FormatError("element labels must be distinct")
    index = {x: i for i, x in enumerate(labels)}
    rel = np.zeros((len(labels), len(labels)), dtype=bool)
    for lo, hi in covers:
        try:
            rel[index[str(lo)], index[str(hi)]] = True
        except KeyError as exc:
            raise FormatError(f"cover mentions unknown element {exc.args[0]!r}") from None
    closure = transitive_closure(rel)
    both = closure & closure.T
    np.fill_diagonal(both, False)
    if both.any():
        i, j = (int(v) for v in np.argwhere(both)[0])
        raise NotAPoset(
            f"covers contain a cycle through {labels[i]} and {labels[j]}",
            (labels[i], labels[j]),
        )
    return FiniteLattice(labels, closure, name=name)
