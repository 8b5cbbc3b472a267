"""Theorem checks and the theorem registry.

Every check returns a :class:`TheoremReport`. A report first evaluates the
named hypotheses; only when all of them hold is the conclusion evaluated.
A failed hypothesis makes the report ``not-applicable``, never ``fail``.
"""

from dataclasses import dataclass, field
from itertools import combinations
import json

from .errors import (
    LimitExceeded,
    MultLatError,
    PreconditionViolated,
    UnsupportedClass,
)
from .families import (
    EXHAUSTIVE_MAX_N,
    ElementFamily,
    build_named_family,
    check_filter,
    check_semi_filter,
    families_containing,
    is_s_ako,
    is_s_oka,
    is_spr_oka,
    max_complement,
    product_word,
    residual_oka_condition,
    semigroup_closure,
    upsets,
)
from .mult import INVALID, is_reduced, lattice_class_flags
from .sprime import (
    MClosedSet,
    enumerate_mclosed,
    is_prime,
    is_sprime,
    prime_elements,
    residual_prime_equiv,
    spec_s,
)
from .verdict import Verdict

PASS = "pass"
FAIL = "fail"
VACUOUS = "vacuous"
NOT_APPLICABLE = "not-applicable"
DEGENERATE = "degenerate-pass"

OK_STATUSES = frozenset({PASS, VACUOUS, NOT_APPLICABLE, DEGENERATE})


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one theorem check on one host.

    ``preconditions`` is a tuple of ``(name, Verdict)`` pairs. ``witnesses``
    holds label-level data (strings, tuples of strings, counts) ready for
    emission. ``status`` is derived unless given explicitly.
    """

    theorem_id: str
    host: str
    preconditions: tuple = ()
    conclusion: Verdict | None = None
    witnesses: dict = field(default_factory=dict)
    status: str | None = None
    note: str = ""

    def __post_init__(self):
        if self.status is None:
            object.__setattr__(self, "status", self._derive_status())

    def _derive_status(self):
        if any(not v for _, v in self.preconditions) or self.conclusion is None:
            return NOT_APPLICABLE
        if not self.conclusion:
            return FAIL
        return VACUOUS if self.conclusion.vacuous else PASS

    @property
    def passed(self):
        return self.status in OK_STATUSES

    @property
    def vacuous(self):
        return self.status == VACUOUS

    @property
    def failed_precondition(self):
        for name, v in self.preconditions:
            if not v:
                return name, v
        return None


# --- label conversion ---------------------------------------------------

_ELEMENT_KEYS = frozenset(
    "s t i j a b c p m x y z join residual m1 m2 element generator".split()
)


def _lab(M, x):
    return M.label(int(x))


def label_witness(M, witness):
    """Copy of a Verdict witness with element indices replaced by labels."""
    out = {}
    for k, v in witness.items():
        if k in _ELEMENT_KEYS and isinstance(v, (int,)) and not isinstance(v, bool):
            out[k] = _lab(M, v)
        elif k == "defeats":
            out[k] = {_lab(M, s): tuple(_lab(M, e) for e in ab) for s, ab in v.items()}
        elif k == "residuals":
            out[k] = {_lab(M, s): _lab(M, r) for s, r in v.items()}
        elif k in ("elements", "sprime_elements") and isinstance(v, tuple):
            out[k] = tuple(_lab(M, e) for e in v)
        elif k in ("sprime_s", "residual_s"):
            out[k] = None if v is None else _lab(M, v)
        else:
            out[k] = v
    return out


def _labels(M, elems):
    return tuple(M.labels_of(sorted(elems)))


def _members(S):
    return S.members if isinstance(S, MClosedSet) else frozenset(S)


def _host(M):
    return M.name or f"L{M.n}"


# --- hypotheses ---------------------------------------------------------


def _v_lattice(M):
    if M.kind == INVALID:
        return Verdict.fail("not a V-lattice", **label_witness(M, M.violation.witness))
    return Verdict.ok()


def _c_lattice(M):
    if M.is_multiplicative:
        return Verdict.ok()
    return Verdict.fail(
        "not a c-lattice", violation=M.violation.reason, **label_witness(M, M.violation.witness)
    )


def _r_lattice(M):
    if lattice_class_flags(M)["r_lattice"]:
        return Verdict.ok()
    return Verdict.fail("not an r-lattice")


def _reduced(M):
    v = is_reduced(M)
    return v if v else Verdict.fail("not reduced", a=_lab(M, v.witness["a"]), k=v.witness["k"])


def _avoids_S(M, S, mx):
    leq = M.lattice.leq
    for m in sorted(mx):
        for t in sorted(_members(S)):
            if leq[t, m]:
                return Verdict.fail("Max(F') meets S", m=_lab(M, m), t=_lab(M, t))
    return Verdict.ok()


def _contains_S(F, S):
    missing = sorted(_members(S) - F.members)
    if missing:
        return Verdict.fail("S not contained in F", missing=_labels(F.host, missing))
    return Verdict.ok()


# --- S-PEP --------------------------------------------------------------

VARIANTS = ("ako", "oka", "spr_oka")


def _family_verdict(F, S, variant):
    if variant == "ako":
        return is_s_ako(F, S)
    if variant == "oka":
        return is_s_oka(F, S)
    if variant == "spr_oka":
        return is_spr_oka(F, S)
    raise ValueError(f"variant must be one of {VARIANTS}")


def _msp_conclusion(M, S, mx, spec=None):
    """Every member of ``mx`` is S-prime. Empty ``mx`` gives a vacuous pass."""
    if not mx:
        return Verdict.ok("Max(F') is empty", vacuous=True)
    for m in sorted(mx):
        if spec is not None and m in spec:
            continue
        v = is_sprime(M, S, m)
        if not v:
            return Verdict.fail(
                "not S-prime", m=_lab(M, m), cause=v.reason, **label_witness(M, v.witness)
            )
    return Verdict.ok()


def _raise_if_strict(report, strict):
    if strict and report.status == NOT_APPLICABLE:
        name, v = report.failed_precondition
        raise PreconditionViolated(f"{report.theorem_id}: {name} ({v.reason})", v.witness)
    return report


def check_s_pep(M, S, F, variant="ako", strict=False, _spec=None):
    """Max(F') within Spec_S(L) for an S-Ako, S-Oka or S_pr-Oka family F.

    ``variant="spr_oka"`` runs the principal-element version, which also
    needs an r-lattice host and S within Pr(L). When a hypothesis fails the
    report is not-applicable; ``strict=True`` raises PreconditionViolated
    instead.
    """
    tid = "thm-spr" if variant == "spr_oka" else f"thm-2.3-{variant}"
    pre = [("v-lattice", _v_lattice(M))]
    if pre[0][1]:
        sv = _contains_S(F, S)
        pre.append(("s-in-family", sv))
        if sv:
            try:
                pre.append((f"family-{variant}", _family_verdict(F, S, variant)))
            except MultLatError as exc:
                pre.append((f"family-{variant}", Verdict.fail(str(exc), detail=exc.witness)))
    mx = max_complement(F)
    if all(v for _, v in pre):
        pre.append(("max-avoids-S", _avoids_S(M, S, mx)))
    witnesses = {"S": _labels(M, _members(S)), "F": _labels(M, F.members), "max": _labels(M, mx)}
    conclusion = None
    if all(v for _, v in pre):
        conclusion = _msp_conclusion(M, S, mx, _spec)
        if not conclusion:
            witnesses.update(conclusion.witness)
    report = TheoremReport(tid, _host(M), tuple(pre), conclusion, witnesses)
    return _raise_if_strict(report, strict)


def check_converse_failure(M, S, F):
    """Is F' an MSP family while F is neither S-Ako nor S-Oka?

    Passes exactly when this configuration (a counterexample to the converse
    of the S-PEP) is present; an empty Max(F') does not count.
    """
    mx = max_complement(F)
    spec = set(spec_s(M, S))
    ako = is_s_ako(F, S)
    oka = is_s_oka(F, S)
    msp = bool(mx) and set(mx) <= spec
    witnesses = {
        "S": _labels(M, _members(S)),
        "F": _labels(M, F.members),
        "max": _labels(M, mx),
        "msp": msp,
        "ako": ako.passed,
        "oka": oka.passed,
    }
    if not ako:
        witnesses["ako_witness"] = label_witness(M, ako.witness)
    if not oka:
        witnesses["oka_witness"] = label_witness(M, oka.witness)
    if msp and not ako and not oka:
        conclusion = Verdict.ok()
    else:
        conclusion = Verdict.fail("not a converse failure")
    return TheoremReport("remark-2.4", _host(M), (), conclusion, witnesses)


def find_converse_failures(M, S):
    """Every family containing S that witnesses a converse failure."""
    S = _members(S)
    return [F for F in families_containing(M, S) if check_converse_failure(M, S, F).passed]


PEPS_MODES = ("semifilter", "above", "all")


def check_s_peps(M, S, F, mode="all", j=None, fbar=None, strict=False):
    """The supplement: S-primes of a semi-filter lying in F pull the whole semi-filter into F.

    ``mode`` selects the semi-filter: ``"semifilter"`` uses ``fbar`` (an
    element set), ``"above"`` the elements above ``j``, ``"all"`` every
    element. The chain hypothesis always holds on a finite lattice.
    """
    if mode not in PEPS_MODES:
        raise ValueError(f"mode must be one of {PEPS_MODES}")
    leq = M.lattice.leq
    if mode == "semifilter":
        if fbar is None:
            raise ValueError("mode 'semifilter' needs fbar")
        target = ElementFamily(M, fbar)
    elif mode == "above":
        if j is None:
            raise ValueError("mode 'above' needs j")
        target = ElementFamily(M, [x for x in M.elements if leq[j, x]])
    else:
        target = ElementFamily(M, M.elements)

    pre = [("v-lattice", _v_lattice(M))]
    if pre[0][1]:
        sv = _contains_S(F, S)
        pre.append(("s-in-family", sv))
        if sv:
            ako, oka = is_s_ako(F, S), is_s_oka(F, S)
            fam = Verdict.ok(ako=ako.passed, oka=oka.passed) if (ako or oka) else Verdict.fail(
                "neither S-Ako nor S-Oka", ako=label_witness(M, ako.witness)
            )
            pre.append(("family-ako-or-oka", fam))
    mx = max_complement(F)
    if all(v for _, v in pre):
        pre.append(("max-avoids-S", _avoids_S(M, S, mx)))
        pre.append(("chains-bounded", Verdict.ok("finite lattice")))
        if mode == "semifilter":
            pre.append(("fbar-semi-filter", check_semi_filter(target)))

    witnesses = {"S": _labels(M, _members(S)), "F": _labels(M, F.members), "mode": mode}
    if mode == "above":
        witnesses["j"] = _lab(M, j)
    conclusion = None
    if all(v for _, v in pre):
        sprimes = [p for p in target.members if is_sprime(M, S, p)]
        outside = sorted(p for p in sprimes if p not in F.members)
        witnesses["sprimes"] = _labels(M, sprimes)
        if outside:
            conclusion = Verdict.ok("hypothesis fails", vacuous=True)
            witnesses["sprime_outside"] = _lab(M, outside[0])
        else:
            missing = sorted(target.members - F.members)
            if missing:
                conclusion = Verdict.fail("element outside F", element=_lab(M, missing[0]))
                witnesses["element"] = _lab(M, missing[0])
            else:
                conclusion = Verdict.ok()
    report = TheoremReport("thm-2.5", _host(M), tuple(pre), conclusion, witnesses)
    return _raise_if_strict(report, strict)


# --- exhaustive audit ---------------------------------------------------


@dataclass
class AuditResult:
    """Non-vacuous applicable reports plus tallies of the rest."""

    host: str
    reports: list
    vacuous: int = 0
    not_applicable: int = 0
    pairs: int = 0

    def __iter__(self):
        return iter(self.reports)

    def __len__(self):
        return len(self.reports)

    @property
    def failures(self):
        return [r for r in self.reports if r.status == FAIL]


def exhaustive_audit(M, limit_n=EXHAUSTIVE_MAX_N, supplement=False, variants=None):
    """Run the S-PEP on every valid S and every family F containing S.

    V-lattice-only hosts are audited with the S-PEP only; the supplement
    (``supplement=True``, every semi-filter as F-bar) needs a multiplicative
    host. Raises LimitExceeded above ``limit_n`` elements; use
    :func:`sampled_audit` there.
    """
    if M.kind == INVALID:
        raise UnsupportedClass(f"{_host(M)} is neither multiplicative nor a V-lattice")
    if M.n > limit_n:
        raise LimitExceeded(
            f"{_host(M)} has {M.n} elements; exhaustive audit is limited to {limit_n}."
            " Use sampled_audit instead."
        )
    return _audit(M, None, 0, supplement, variants)


def sampled_audit(M, sample=200, seed=0, supplement=False, variants=None):
    """As exhaustive_audit, with ``sample`` random families per S."""
    if M.kind == INVALID:
        raise UnsupportedClass(f"{_host(M)} is neither multiplicative nor a V-lattice")
    return _audit(M, sample, seed, supplement, variants)


def _audit(M, sample, seed, supplement, variants):
    variants = variants or ("ako", "oka")
    result = AuditResult(_host(M), [])
    semis = [U.members for U in upsets(M)] if supplement and M.is_multiplicative else []
    for S in enumerate_mclosed(M):
        spec = frozenset(spec_s(M, S))
        if sample is None:
            fams = families_containing(M, S)
        else:
            fams = families_containing(M, S, limit_n=0, sample=sample, seed=seed)
        for F in fams:
            result.pairs += 1
            for variant in variants:
                r = check_s_pep(M, S, F, variant, _spec=spec)
                _tally(result, r)
            if semis and (is_s_ako(F, S) or is_s_oka(F, S)):
                for fbar in semis:
                    _tally(result, check_s_peps(M, S, F, "semifilter", fbar=fbar))
    return result


def _tally(result, r):
    if r.status == VACUOUS:
        result.vacuous += 1
    elif r.status == NOT_APPLICABLE:
        result.not_applicable += 1
    else:
        result.reports.append(r)


# --- theorem registry -----------------------------------------------------

# Families per S for members that need sampling on hosts above EXHAUSTIVE_MAX_N.
SUITE_SAMPLE = 200


def _families(M, S, sample=SUITE_SAMPLE):
    if M.n <= EXHAUSTIVE_MAX_N:
        return families_containing(M, S)
    return families_containing(M, S, limit_n=0, sample=sample)


def _first_failure_report(tid, M, pre, checks, checked_key="checked", note=""):
    """Scan ``checks`` (an iterable of (witness-dict | None)) until one fails."""
    if not all(v for _, v in pre):
        return TheoremReport(tid, _host(M), tuple(pre), None, {}, note=note)
    count = 0
    for w in checks:
        if w is not None:
            return TheoremReport(
                tid, _host(M), tuple(pre), Verdict.fail("counterexample", **w), dict(w), note=note
            )
        count += 1
    return TheoremReport(tid, _host(M), tuple(pre), Verdict.ok(), {checked_key: count}, note=note)


def _max_prime_report(tid, M, pre, F, extra=None, require=None):
    """Max(F') consists of primes (S = {1}), optionally after a side check."""
    if not all(v for _, v in pre):
        return TheoremReport(tid, _host(M), tuple(pre), None, {})
    mx = max_complement(F)
    witnesses = {"F": _labels(M, F.members), "max": _labels(M, mx)}
    if extra:
        witnesses.update(extra)
    if require is not None and not require:
        return TheoremReport(
            tid, _host(M), tuple(pre), Verdict.fail(require.reason, **require.witness), witnesses
        )
    for m in sorted(mx):
        v = is_prime(M, m)
        if not v:
            w = label_witness(M, v.witness)
            witnesses.update(m=_lab(M, m), **w)
            return TheoremReport(tid, _host(M), tuple(pre), Verdict.fail("not prime", m=m), witnesses)
    conclusion = Verdict.ok(vacuous=not mx)
    return TheoremReport(tid, _host(M), tuple(pre), conclusion, witnesses)


def _pep_audit_member(M, variant):
    pre = [("v-lattice", _v_lattice(M))]

    def checks():
        for S in enumerate_mclosed(M):
            spec = frozenset(spec_s(M, S))
            for F in _families(M, S):
                r = check_s_pep(M, S, F, variant, _spec=spec)
                if r.status == FAIL:
                    yield dict(r.witnesses)
                    return
                yield None

    return _first_failure_report(f"thm-2.3-{variant}", M, pre, checks(), "pairs")


def _filter_member(M):
    pre = [("v-lattice", _v_lattice(M))]
    semis = upsets(M)
    candidates = [U for U in semis if U.m_closed]
    all_sets = enumerate_mclosed(M)

    def checks():
        for U in semis:
            # semi-filter + M-closed <=> filter + M-closed
            if bool(U.m_closed) and bool(U.semi_filter) != bool(check_filter(U)):
                yield {"F": _labels(M, U.members), "issue": "filter-equivalence"}
                return
        for F in candidates:
            for S in all_sets:
                if not S <= F.members:
                    continue
                for name, fn in (("ako", is_s_ako), ("oka", is_s_oka)):
                    v = fn(F, S)
                    if not v:
                        yield {
                            "S": _labels(M, S),
                            "F": _labels(M, F.members),
                            "law": name,
                            **label_witness(M, v.witness),
                        }
                        return
                yield None

    return _first_failure_report("lemma-2.6", M, pre, checks(), "pairs")


def _avoiding_primes_member(M, max_primes=8):
    pre = [("v-lattice", _v_lattice(M))]

    def prime_subsets(sp):
        if len(sp) <= max_primes:
            for r in range(len(sp) + 1):
                yield from combinations(sp, r)
        else:
            yield ()
            yield from ((p,) for p in sp)
            yield tuple(sp)

    def checks():
        for S in enumerate_mclosed(M):
            for P in prime_subsets(spec_s(M, S)):
                F = build_named_family(M, "avoiding_primes", S=S, primes=P)
                w = {"S": _labels(M, S), "primes": _labels(M, P), "F": _labels(M, F.members)}
                if not S <= F.members:
                    yield {**w, "issue": "S not in F"}
                    return
                v = is_s_ako(F, S)
                if not v:
                    yield {**w, **label_witness(M, v.witness)}
                    return
                yield None

    return _first_failure_report("lemma-2.11", M, pre, checks(), "instances")


def _named_ako_member(tid, M, kind, pre):
    def checks():
        for S in enumerate_mclosed(M):
            F = build_named_family(M, kind, S=S)
            if not S <= F.members:
                continue
            v = is_s_ako(F, S)
            if not v:
                yield {"S": _labels(M, S), "F": _labels(M, F.members), **label_witness(M, v.witness)}
                return
            yield None

    return _first_failure_report(tid, M, pre, checks(), "instances")


def _residual_oka_member(M):
    pre = [("c-lattice", _c_lattice(M))]

    def checks():
        for S in enumerate_mclosed(M):
            for F in _families(M, S):
                a = residual_oka_condition(F, S)
                b = is_s_oka(F, S)
                if a.passed != b.passed:
                    yield {"S": _labels(M, S), "F": _labels(M, F.members), "condition": a.passed, "oka": b.passed}
                    return
                yield None

    return _first_failure_report("lemma-1.67", M, pre, checks(), "pairs")


def principal_product_checks(M):
    """Yield None per meet-principal pair whose product stays meet principal."""
    mp = sorted(M.meet_principal_elements)
    for m1 in mp:
        for m2 in mp:
            prod = M.mul(m1, m2)
            if prod not in M.meet_principal_elements:
                yield {"m1": _lab(M, m1), "m2": _lab(M, m2), "product": _lab(M, prod)}
                return
            yield None


def principal_residual_checks(M):
    """Yield None per pair i <= j, j meet principal, with j*(i:j) == i."""
    leq = M.lattice.leq
    for j in sorted(M.meet_principal_elements):
        for i in M.elements:
            if not leq[i, j]:
                continue
            got = M.mul(j, M.residual(i, j))
            if got != i:
                yield {"i": _lab(M, i), "j": _lab(M, j), "product": _lab(M, got)}
                return
            yield None


def _meet_principal_member(M):
    pre = [("c-lattice", _c_lattice(M))]
    if not pre[0][1]:
        return TheoremReport("thm-1.71", _host(M), tuple(pre), None, {})
    one = frozenset([M.one])
    F = build_named_family(M, "meet_principal")
    primes = prime_elements(M)
    all_mp = len(F) == M.n
    primes_mp = primes <= F.members
    oka = is_s_oka(F, one)
    witnesses = {
        "meet_principal": _labels(M, F.members),
        "primes": _labels(M, primes),
        "all_meet_principal": all_mp,
        "primes_meet_principal": primes_mp,
    }
    if not oka:
        return TheoremReport(
            "thm-1.71", _host(M), tuple(pre), Verdict.fail("family not S-Oka"),
            {**witnesses, **label_witness(M, oka.witness)},
        )
    if all_mp != primes_mp:
        return TheoremReport("thm-1.71", _host(M), tuple(pre), Verdict.fail("equivalence broken"), witnesses)
    peps = check_s_peps(M, one, F, "all")
    if peps.status == FAIL:
        return TheoremReport("thm-1.71", _host(M), tuple(pre), Verdict.fail("supplement failed"), witnesses)
    return TheoremReport("thm-1.71", _host(M), tuple(pre), Verdict.ok(), witnesses)


def finite_product_instance(M, generators):
    """Both parts of the finite-product theorem for one generator set.

    Part one: Max(F') consists of primes, where F is everything above a
    finite product of generators. Part two: if every prime lies in F, some
    product of generators is the bottom (witness: the shortest such word).
    """
    gens = sorted(set(generators))
    pre = [("c-lattice", _c_lattice(M))]
    witnesses = {"generators": _labels(M, gens)}
    if not pre[0][1]:
        return TheoremReport("thm-2.60", _host(M), tuple(pre), None, witnesses)
    one = frozenset([M.one])
    F = build_named_family(M, "product_closure", generators=gens)
    closure = semigroup_closure(M, gens)
    witnesses["closure"] = _labels(M, closure)
    witnesses["max"] = _labels(M, max_complement(F))
    part1 = check_s_pep(M, one, F, "ako")
    if part1.status == FAIL:
        return TheoremReport("thm-2.60", _host(M), tuple(pre), Verdict.fail("part 1"), {**witnesses, **part1.witnesses})
    primes = prime_elements(M)
    if primes <= F.members:
        word = product_word(M, gens, M.zero)
        peps = check_s_peps(M, one, F, "all")
        witnesses["zero_word"] = None if word is None else _labels_seq(M, word)
        witnesses["peps"] = peps.status
        if word is None or peps.status == FAIL:
            return TheoremReport("thm-2.60", _host(M), tuple(pre), Verdict.fail("part 2"), witnesses)
    return TheoremReport("thm-2.60", _host(M), tuple(pre), Verdict.ok(), witnesses)


def _labels_seq(M, word):
    return tuple(M.label(x) for x in word)


def minimal_primes(M):
    return M.lattice.minimal_members(prime_elements(M))


def _finite_product_member(M, max_gens=8):
    pre = [("c-lattice", _c_lattice(M))]
    if not pre[0][1]:
        return TheoremReport("thm-2.60", _host(M), tuple(pre), None, {})
    pool = [x for x in M.elements if x != M.one]
    sizes = range(1, len(pool) + 1) if len(pool) <= max_gens else (1, 2)
    count = 0
    for r in sizes:
        for gens in combinations(pool, r):
            rep = finite_product_instance(M, gens)
            if rep.status == FAIL:
                return rep
            count += 1
    rep = finite_product_instance(M, minimal_primes(M))
    return TheoremReport("thm-2.60", _host(M), tuple(pre), rep.conclusion, {**rep.witnesses, "generator_sets": count})


def _min_prime_corollary(M):
    pre = [("c-lattice", _c_lattice(M))]
    if not pre[0][1]:
        return TheoremReport("min-prime-corollary", _host(M), tuple(pre), None, {})
    mins = minimal_primes(M)
    word = product_word(M, mins, M.zero)
    w = {"minimal_primes": _labels(M, mins), "zero_word": None if word is None else _labels_seq(M, word)}
    concl = Verdict.ok() if word is not None else Verdict.fail("no product of minimal primes is zero")
    return TheoremReport("min-prime-corollary", _host(M), tuple(pre), concl, w)


def _alarcon(M):
    pre = [("c-lattice", _c_lattice(M))]
    return _max_prime_report("alarcon", M, pre, ElementFamily(M, [M.one]))


def _joshi_sarode(M):
    pre = [("c-lattice", _c_lattice(M))]
    if pre[0][1]:
        pre.append(("reduced", _reduced(M)))
    if not all(v for _, v in pre):
        return TheoremReport("joshi-sarode", _host(M), tuple(pre), None, {})
    stars = {M.star(a) for a in M.elements} - {M.one}
    top = M.lattice.maximal_members(stars)
    w = {"stars": _labels(M, stars), "max": _labels(M, top)}
    for x in sorted(top):
        v = is_prime(M, x)
        if not v:
            return TheoremReport(
                "joshi-sarode", _host(M), tuple(pre), Verdict.fail("not prime"),
                {**w, "m": _lab(M, x), **label_witness(M, v.witness)},
            )
    return TheoremReport("joshi-sarode", _host(M), tuple(pre), Verdict.ok(vacuous=not top), w)


def _residual_prime_member(M):
    pre = [("c-lattice", _c_lattice(M))]

    def checks():
        leq = M.lattice.leq
        for S in enumerate_mclosed(M):
            for p in M.elements:
                if p == M.one or any(leq[t, p] for t in S):
                    continue
                v = residual_prime_equiv(M, S, p)
                if not v:
                    yield {"S": _labels(M, S), "p": _lab(M, p), **label_witness(M, v.witness)}
                    return
                yield None

    return _first_failure_report("lemma-5.11", M, pre, checks(), "instances")


def _avoiding_set_member(M):
    """Elements maximal among those meeting no member of S are prime."""
    pre = [("c-lattice", _c_lattice(M))]

    def checks():
        for S in enumerate_mclosed(M):
            F = build_named_family(M, "above_S", S=S)
            for m in sorted(max_complement(F)):
                v = is_prime(M, m)
                if not v:
                    yield {"S": _labels(M, S), "m": _lab(M, m), **label_witness(M, v.witness)}
                    return
            yield None

    return _first_failure_report("prop-3.1", M, pre, checks(), "sets")


def _valid_pr_sets(M):
    pr = M.principal_elements
    return [S for S in enumerate_mclosed(M) if S <= pr]


def _spr_member(M):
    pre = [("c-lattice", _c_lattice(M))]
    if pre[0][1]:
        pre.append(("r-lattice", _r_lattice(M)))

    def checks():
        pr = M.principal_elements
        for S in _valid_pr_sets(M):
            for F in _families(M, S | pr):
                r = check_s_pep(M, S, F, "spr_oka")
                if r.status == FAIL:
                    yield dict(r.witnesses)
                    return
                yield None

    return _first_failure_report("thm-spr", M, pre, checks(), "pairs")


def _spr_oka_member(M):
    pre = [("c-lattice", _c_lattice(M))]
    if pre[0][1]:
        pre.append(("r-lattice", _r_lattice(M)))

    def checks():
        F = build_named_family(M, "compact")
        for S in _valid_pr_sets(M):
            v = is_spr_oka(F, S)
            if not v:
                yield {"S": _labels(M, S), **label_witness(M, v.witness)}
                return
            yield None

    return _first_failure_report(
        "thm-spr-oka", M, pre, checks(), "sets",
        note="every element of a finite lattice is compact, so the family is the whole lattice",
    )


def _degenerate(tid, M, note):
    pre = (("c-lattice", _c_lattice(M)),)
    if not pre[0][1]:
        return TheoremReport(tid, _host(M), pre, None, {})
    return TheoremReport(tid, _host(M), pre, Verdict.ok(), {}, status=DEGENERATE, note=note)


def _zero_divisor_member(M):
    pre = [("c-lattice", _c_lattice(M))]
    if not pre[0][1]:
        return TheoremReport("thm-15.8-zero-divisor", _host(M), tuple(pre), None, {})
    F = ElementFamily(M, [x for x in M.elements if not M.is_zero_divisor(x)])
    dense = build_named_family(M, "dense")
    same = Verdict.ok() if F == dense else Verdict.fail(
        "non-zero-divisors differ from dense elements",
        symmetric_difference=_labels(M, F.members ^ dense.members),
    )
    return _max_prime_report("thm-15.8-zero-divisor", M, pre, F, require=same)


def _essential_member(M):
    pre = [("c-lattice", _c_lattice(M))]
    if pre[0][1]:
        pre.append(("reduced", _reduced(M)))
    if not all(v for _, v in pre):
        return TheoremReport("thm-essential", _host(M), tuple(pre), None, {})
    F = build_named_family(M, "essential")
    sf, mc = F.semi_filter, F.m_closed
    ok = Verdict.ok() if sf and mc else Verdict.fail(
        "essential elements not a semi-filter with M-closed property",
        **label_witness(M, (sf if not sf else mc).witness),
    )
    return _max_prime_report("thm-essential", M, pre, F, require=ok)


def _anni_member(M):
    pre = [("c-lattice", _c_lattice(M))]
    if not pre[0][1]:
        return TheoremReport("thm-anni", _host(M), tuple(pre), None, {})
    F = build_named_family(M, "non_annihilator")
    oka = is_s_oka(F, frozenset([M.one]))
    ako = is_s_ako(F, frozenset([M.one]))
    req = oka if oka else Verdict.fail("non-annihilators not S-Oka", **label_witness(M, oka.witness))
    return _max_prime_report("thm-anni", M, pre, F, extra={"ako": ako.passed, "oka": oka.passed}, require=req)


def _dense_member(M):
    pre = [("c-lattice", _c_lattice(M))]
    F = build_named_family(M, "dense") if pre[0][1] else None
    return _max_prime_report("thm-5.8-dense", M, pre, F)


SUITE_IDS = (
    "thm-2.3-ako",
    "thm-2.3-oka",
    "thm-5.8-dense",
    "thm-15.8-zero-divisor",
    "thm-anni",
    "thm-essential",
    "lemma-2.6",
    "lemma-2.11",
    "lemma-5.1",
    "lemma-5.7",
    "lemma-15.7",
    "lemma-1.67",
    "lemma-1.68",
    "lemma-1.69",
    "thm-1.71",
    "thm-2.60",
    "min-prime-corollary",
    "alarcon",
    "joshi-sarode",
    "lemma-5.11",
    "prop-3.1",
    "thm-spr",
    "thm-spr-oka",
    "cohen",
    "noetherian",
)

_COMPACT_NOTE = "every element of a finite lattice is compact; the statement holds trivially"


def _suite_member(M, tid):
    if tid == "thm-2.3-ako":
        return _pep_audit_member(M, "ako")
    if tid == "thm-2.3-oka":
        return _pep_audit_member(M, "oka")
    if tid == "thm-5.8-dense":
        return _dense_member(M)
    if tid == "thm-15.8-zero-divisor":
        return _zero_divisor_member(M)
    if tid == "thm-anni":
        return _anni_member(M)
    if tid == "thm-essential":
        return _essential_member(M)
    if tid == "lemma-2.6":
        return _filter_member(M)
    if tid == "lemma-2.11":
        return _avoiding_primes_member(M)
    if tid == "lemma-5.1":
        return _named_ako_member(tid, M, "above_S", [("v-lattice", _v_lattice(M))])
    if tid == "lemma-5.7":
        return _named_ako_member(tid, M, "star_zero", [("c-lattice", _c_lattice(M))])
    if tid == "lemma-15.7":
        return _named_ako_member(tid, M, "dense", [("c-lattice", _c_lattice(M))])
    if tid == "lemma-1.67":
        return _residual_oka_member(M)
    if tid == "lemma-1.68":
        return _first_failure_report(tid, M, [("c-lattice", _c_lattice(M))], principal_product_checks(M), "pairs")
    if tid == "lemma-1.69":
        return _first_failure_report(tid, M, [("c-lattice", _c_lattice(M))], principal_residual_checks(M), "pairs")
    if tid == "thm-1.71":
        return _meet_principal_member(M)
    if tid == "thm-2.60":
        return _finite_product_member(M)
    if tid == "min-prime-corollary":
        return _min_prime_corollary(M)
    if tid == "alarcon":
        return _alarcon(M)
    if tid == "joshi-sarode":
        return _joshi_sarode(M)
    if tid == "lemma-5.11":
        return _residual_prime_member(M)
    if tid == "prop-3.1":
        return _avoiding_set_member(M)
    if tid == "thm-spr":
        return _spr_member(M)
    if tid == "thm-spr-oka":
        return _spr_oka_member(M)
    if tid in ("cohen", "noetherian"):
        return _degenerate(tid, M, _COMPACT_NOTE)
    raise KeyError(tid)


def run_theorem_suite(M, ids=SUITE_IDS):
    """One report per registry member, in registry order."""
    return [_suite_member(M, tid) for tid in ids]


# --- emission -----------------------------------------------------------


def _fmt(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (tuple, list, frozenset, set)):
        return "{" + ",".join(_fmt(x) for x in v) + "}"
    if isinstance(v, dict):
        return "{" + ";".join(f"{_fmt(k)}:{_fmt(x)}" for k, x in v.items()) + "}"
    return str(v)


def report_line(report):
    """``<theorem-id>\\t<verdict>\\t<key=value>...``"""
    fields = [report.theorem_id, report.status]
    if report.status == NOT_APPLICABLE and report.failed_precondition:
        name, v = report.failed_precondition
        fields.append(f"hypothesis={name}")
        fields.extend(f"{k}={_fmt(x)}" for k, x in v.witness.items())
    fields.extend(f"{k}={_fmt(x)}" for k, x in report.witnesses.items())
    if report.note:
        fields.append(f"note={report.note}")
    return "\t".join(fields)


def reports_to_text(reports):
    return "".join(report_line(r) + "\n" for r in reports)


def _jsonable(v):
    if isinstance(v, (tuple, list, frozenset, set)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    return str(v)


def report_record(report):
    return {
        "theorem": report.theorem_id,
        "host": report.host,
        "verdict": report.status,
        "preconditions": [
            {"name": name, "passed": v.passed, "reason": v.reason, "witness": _jsonable(v.witness)}
            for name, v in report.preconditions
        ],
        "witnesses": _jsonable(report.witnesses),
        "note": report.note,
    }


def reports_to_json(reports):
    return json.dumps([report_record(r) for r in reports], indent=2, sort_keys=True) + "\n"
