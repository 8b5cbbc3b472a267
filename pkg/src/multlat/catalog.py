"""Builtin example structures and brute-force multiplication search."""

from dataclasses import dataclass, field
from itertools import combinations
import re

import numpy as np

from .errors import BadParams, UnknownName
from .lattice import FiniteLattice, build_lattice
from .mult import (
    MULTIPLICATIVE,
    V_LATTICE,
    classify_multiplication,
    meet_multiplication,
)
from .zn import ideal_lattice


def n5_lattice():
    return build_lattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
        name="N5",
    )


def k_lattice():
    return build_lattice(
        ["0", "a", "b", "c", "d", "1"],
        [("0", "a"), ("a", "b"), ("b", "d"), ("0", "c"), ("c", "d"), ("d", "1")],
        name="K",
    )


def zero_multiplication(L):
    """x*y = 0 unless one factor is the top, which acts as identity."""
    T = np.full((L.n, L.n), L.bottom, dtype=np.int64)
    T[L.top, :] = np.arange(L.n)
    T[:, L.top] = np.arange(L.n)
    return T


def chain_lattice(k):
    if k < 1:
        raise BadParams("a chain needs at least one element")
    labels = [str(i) for i in range(k)]
    return build_lattice(labels, list(zip(labels, labels[1:])), name=f"chain({k})")


def boolean_lattice(k):
    """Subsets of k atoms, labelled by their sorted atom letters ("0" for the empty set)."""
    if not 0 <= k <= 6:
        raise BadParams("boolean(k) supports 0 <= k <= 6")
    atoms = "abcdef"[:k]
    subsets = [frozenset(c) for r in range(k + 1) for c in combinations(atoms, r)]

    def name(s):
        if not s:
            return "0"
        if len(s) == k:
            return "1"
        return "".join(sorted(s))

    leq = np.array([[a <= b for b in subsets] for a in subsets], dtype=bool)
    return FiniteLattice([name(s) for s in subsets], leq, name=f"boolean({k})")


_CALL = re.compile(r"^([a-z_0-9]+?)(?:\((\d+)\)|_?(\d+))?$")

BUILTIN_NAMES = ("n5_meet", "idz12", "figure3_K", "chain(k)", "boolean(k)", "idzn(n)")


def builtin(name):
    """One of the example structures, already classified.

    Accepts ``n5_meet``, ``idz12``, ``figure3_K``, ``chain(k)``,
    ``boolean(k)`` and ``idzn(n)``.
    """
    key = name.strip()
    if key == "n5_meet":
        return meet_multiplication(n5_lattice())
    if key == "idz12":
        return ideal_lattice(12)
    if key in ("figure3_K", "K"):
        L = k_lattice()
        return classify_multiplication(L, zero_multiplication(L))
    m = _CALL.match(key)
    if m and (m.group(2) or m.group(3)):
        base, arg = m.group(1), int(m.group(2) or m.group(3))
        if base == "chain":
            return meet_multiplication(chain_lattice(arg))
        if base == "boolean":
            return meet_multiplication(boolean_lattice(arg))
        if base == "idzn":
            return ideal_lattice(arg)
    raise UnknownName(f"unknown builtin {name!r}; expected one of {', '.join(BUILTIN_NAMES)}")


def small_catalog(max_n=6):
    """Every builtin with at most ``max_n`` elements, in a fixed order."""
    out = [builtin("n5_meet"), builtin("figure3_K")]
    out += [builtin(f"chain({k})") for k in range(2, max_n + 1)]
    out += [builtin(f"boolean({k})") for k in (1, 2, 3) if 2**k <= max_n]
    out += [builtin(f"idzn({n})") for n in (4, 6, 8, 9, 12, 16, 18, 20, 24, 30, 36, 60)]
    return [M for M in out if M.n <= max_n]


# --- multiplication search ---------------------------------------------

LEVELS = ("multiplicative", "v_lattice")


@dataclass
class SearchResult:
    count: int
    complete: bool
    nodes: int
    examples: list = field(default_factory=list)
    certificate: np.ndarray | None = None


class _Search:
    """Backtracking over symmetric tables with top acting as identity.

    Cells of the upper triangle (excluding the top row) are filled in
    row-major order. Every candidate value for cell (x, y) lies below x ^ y,
    which both axiom levels imply. After each assignment the partially
    filled table is checked on all fully determined instances of
    associativity, monotonicity and (for the multiplicative level) binary
    join-distributivity.
    """

    def __init__(self, L, level, budget, max_examples):
        self.L = L
        self.level = level
        self.budget = budget
        self.max_examples = max_examples
        n = L.n
        self.T = np.full((n, n), -1, dtype=np.int64)
        self.T[L.top, :] = np.arange(n)
        self.T[:, L.top] = np.arange(n)
        rest = [x for x in range(n) if x != L.top]
        self.cells = [(x, y) for i, x in enumerate(rest) for y in rest[i:]]
        self.domains = [
            [int(v) for v in np.flatnonzero(L.leq[:, L.meet_table[x, y]])]
            for x, y in self.cells
        ]
        self.count = 0
        self.nodes = 0
        self.examples = []
        self.complete = True
        self._ar = np.arange(n)

    def consistent(self):
        L, T = self.L, self.T
        A = self._ar
        known = T >= 0
        Tc = np.where(known, T, 0)
        ab = Tc[:, :, None]
        bc = Tc[None, :, :]
        a_, c_ = A[:, None, None], A[None, None, :]
        # (a*b)*c == a*(b*c) wherever all four products are known
        both = known[:, :, None] & known[ab, c_] & known[None, :, :] & known[a_, bc]
        if (both & (Tc[ab, c_] != Tc[a_, bc])).any():
            return False
        # a <= b ==> a*c <= b*c
        kk = known[:, None, :] & known[None, :, :]
        if (L.leq[:, :, None] & kk & ~L.leq[Tc[:, None, :], Tc[None, :, :]]).any():
            return False
        if self.level == "multiplicative":
            J = L.join_table
            # a*(x v y) == (a*x) v (a*y)
            jxy = J[None, :, :]
            both = known[a_, jxy] & known[:, :, None] & known[:, None, :]
            if (both & (Tc[a_, jxy] != J[Tc[:, :, None], Tc[:, None, :]])).any():
                return False
        return True

    def run(self, k=0):
        if not self.complete:
            return
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            self.complete = False
            return
        if k == len(self.cells):
            self.count += 1
            if len(self.examples) < self.max_examples:
                self.examples.append(self.T.copy())
            return
        x, y = self.cells[k]
        for v in self.domains[k]:
            self.T[x, y] = self.T[y, x] = v
            if self.consistent():
                self.run(k + 1)
                if not self.complete:
                    break
        self.T[x, y] = self.T[y, x] = -1


def search_multiplications(L, level="multiplicative", budget=None, max_examples=3):
    """Count commutative tables on ``L`` with identity top reaching ``level``.

    ``level`` is ``"multiplicative"`` or ``"v_lattice"`` (the latter counts
    every table satisfying the V-lattice axioms, multiplicative ones
    included). Lattices with more than 7 elements need a ``budget`` (node
    limit); when the budget runs out the result has ``complete=False`` and
    ``count`` is a lower bound.
    """
    if level not in LEVELS:
        raise BadParams(f"level must be one of {LEVELS}")
    if not isinstance(L, FiniteLattice):
        L = L.lattice
    if L.n > 7 and budget is None:
        raise BadParams("lattices with more than 7 elements need a search budget")
    s = _Search(L, level, budget, max_examples)
    s.run()
    zero = zero_multiplication(L)
    cert = zero if classify_multiplication(L, zero).kind in (MULTIPLICATIVE, V_LATTICE) else None
    return SearchResult(s.count, s.complete, s.nodes, s.examples, cert)
