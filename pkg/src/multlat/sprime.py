"""Multiplicatively closed sets, prime and S-prime elements."""

from dataclasses import dataclass

import numpy as np

from .errors import (
    ContainsZero,
    MissingOne,
    NotClosed,
    PreconditionViolated,
    UnsupportedClass,
)
from .mult import INVALID, MultLattice
from .verdict import Verdict


@dataclass(frozen=True)
class MClosedSet:
    """A validated multiplicatively closed set: contains 1, misses 0."""

    host: MultLattice
    members: frozenset

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    @property
    def labels(self):
        return self.host.labels_of(sorted(self.members))


def validate_mclosed(M, members):
    members = frozenset(int(x) for x in members)
    if M.one not in members:
        raise MissingOne("S must contain the top element", (M.label(M.one),))
    if M.zero in members:
        raise ContainsZero("S must not contain the bottom element", (M.label(M.zero),))
    for s in sorted(members):
        for t in sorted(members):
            if M.mul(s, t) not in members:
                raise NotClosed(
                    f"{M.label(s)}*{M.label(t)} = {M.label(M.mul(s, t))} is not in S",
                    (M.label(s), M.label(t)),
                )
    return MClosedSet(M, members)


def trivial_set(M):
    return MClosedSet(M, frozenset([M.one]))


def enumerate_mclosed(M):
    """Every valid S, as frozensets, in increasing bitmask order."""
    T = M.table
    others = [x for x in M.elements if x not in (M.zero, M.one)]
    out = []
    for mask in range(1 << len(others)):
        S = [M.one] + [x for k, x in enumerate(others) if mask >> k & 1]
        inS = np.zeros(M.n, dtype=bool)
        inS[S] = True
        if inS[T[np.ix_(S, S)]].all():
            out.append(frozenset(S))
    return out


def _require_valid_class(M):
    if M.kind == INVALID:
        raise UnsupportedClass(f"{M.name or 'host'} is neither multiplicative nor a V-lattice")


def is_prime(M, p):
    """p != 1 and a*b <= p implies a <= p or b <= p. Witness keys a, b."""
    _require_valid_class(M)
    if p == M.one:
        return Verdict.fail("not-proper", p=p)
    below = M.lattice.leq[:, p]
    bad = np.argwhere(below[M.table] & ~below[:, None] & ~below[None, :])
    if len(bad):
        a, b = (int(v) for v in bad[0])
        return Verdict.fail("not-prime", a=a, b=b)
    return Verdict.ok()


def prime_elements(M):
    return frozenset(p for p in M.elements if is_prime(M, p))


def is_sprime(M, S, p):
    """S-primality of ``p``.

    Passing verdicts carry the least-index uniform ``s``. Failing verdicts
    have reason ``"meets-S"`` (some ``t`` in S lies below p; witness ``t``)
    or ``"no-uniform-s"`` (witness ``defeats`` maps each s to the first
    pair (a, b) with a*b <= p, s*a, s*b not <= p).
    """
    _require_valid_class(M)
    members = S.members if isinstance(S, MClosedSet) else frozenset(S)
    below = M.lattice.leq[:, p]
    for t in sorted(members):
        if below[t]:
            return Verdict.fail("meets-S", t=t)
    hyp = below[M.table]
    defeats = {}
    for s in sorted(members):
        sa = below[M.table[s]]
        bad = np.argwhere(hyp & ~sa[:, None] & ~sa[None, :])
        if not len(bad):
            return Verdict.ok(s=s)
        defeats[s] = tuple(int(v) for v in bad[0])
    return Verdict.fail("no-uniform-s", defeats=defeats)


def spec_s(M, S):
    """All S-prime elements, ascending by index."""
    return tuple(p for p in M.elements if is_sprime(M, S, p))


def spec_s_with_witnesses(M, S):
    return {p: is_sprime(M, S, p) for p in M.elements}


def residual_prime_equiv(M, S, p):
    """Check: p is S-prime iff (p : s) is prime for some s in S.

    Only for multiplicative hosts and p avoiding S. The witness records the
    uniform s (if any), the first s whose residual is prime (if any), and
    every residual (p : s).
    """
    if not M.is_multiplicative:
        raise UnsupportedClass("the residual criterion needs a multiplicative lattice")
    members = S.members if isinstance(S, MClosedSet) else frozenset(S)
    for t in sorted(members):
        if M.le(t, p):
            raise PreconditionViolated(
                f"{M.label(t)} in S lies below {M.label(p)}", (M.label(t), M.label(p))
            )
    lhs = is_sprime(M, members, p)
    residuals = {s: M.residual(p, s) for s in sorted(members)}
    prime_s = [s for s, r in residuals.items() if is_prime(M, r)]
    agree = lhs.passed == bool(prime_s)
    witness = dict(
        sprime_s=lhs.witness.get("s"),
        residual_s=prime_s[0] if prime_s else None,
        residuals=residuals,
        sprime=lhs.passed,
    )
    if agree:
        return Verdict.ok(**witness)
    return Verdict.fail("equivalence-broken", **witness)


def maximal_avoiding(M, S, a):
    """Elements >= a maximal among those avoiding S, each checked prime.

    Returns ``(elements, verdict)``. Only defined for multiplicative hosts
    (finite c-lattices).
    """
    if not M.is_multiplicative:
        raise UnsupportedClass(f"{M.name or 'host'} is not a c-lattice")
    members = S.members if isinstance(S, MClosedSet) else frozenset(S)
    leq = M.lattice.leq
    for t in sorted(members):
        if leq[t, a]:
            raise PreconditionViolated(
                f"{M.label(t)} in S lies below {M.label(a)}", (M.label(t), M.label(a))
            )
    avoiding = [
        p for p in M.elements if leq[a, p] and not any(leq[t, p] for t in members)
    ]
    top = M.lattice.maximal_members(avoiding)
    for p in sorted(top):
        v = is_prime(M, p)
        if not v:
            return top, Verdict.fail("not-prime", p=p, **v.witness)
    return top, Verdict.ok(elements=tuple(sorted(top)))
