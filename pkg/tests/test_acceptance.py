"""Acceptance criteria, one test each.

Every test records a ``PASS``/``FAIL`` line (criterion number, title,
elapsed time, detail). The lines are printed as they are produced and
again as a block in the terminal summary, so they show up in a plain
``pytest`` run without ``-s``.
"""

import time

import pytest

from multlat.catalog import builtin, n5_lattice, search_multiplications
from multlat.families import (
    ElementFamily,
    ako_violated_at,
    build_named_family,
    families_containing,
    is_s_ako,
    is_s_oka,
    max_complement,
    residual_oka_condition,
)
from multlat.principle import (
    PASS,
    check_s_peps,
    exhaustive_audit,
    finite_product_instance,
    principal_product_checks,
    principal_residual_checks,
    run_theorem_suite,
)
from multlat.sprime import (
    enumerate_mclosed,
    is_prime,
    is_sprime,
    residual_prime_equiv,
    spec_s,
    trivial_set,
    validate_mclosed,
)
from multlat.zn import crosscheck, ideal_lattice, residue_sets

from conftest import ACCEPTANCE_LINES, ix, lab

ZN_SET = (6, 12, 24, 30, 36, 60)
SOUNDNESS_HOSTS = (
    ["n5_meet", "figure3_K", "boolean(2)"]
    + [f"chain({k})" for k in range(2, 7)]
    + [f"idzn({n})" for n in (4, 6, 8, 9, 12)]
)


def record(num, title, ok, elapsed, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] {num:>2}. {title} ({elapsed:.3f} s)"
    if detail:
        line += f": {detail}"
    ACCEPTANCE_LINES.append((num, line))
    print(line)
    return ok


def fastest(fn, repeat=20):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return out, best


def mset(M, *labels):
    return validate_mclosed(M, ix(M, *labels))


def witness_labels(M, v, keys):
    return tuple(M.label(v.witness[k]) for k in keys)


# 1 ------------------------------------------------------------------------


def test_01_n5_sprime_sets(n5):
    cases = [(("1",), {"b", "c"}), (("1", "c"), {"0", "a", "b"}), (("1", "a"), {"0", "c"})]
    ok, worst, got = True, 0.0, []
    for S_labels, want in cases:
        S = mset(n5, *S_labels)
        found, t = fastest(lambda: spec_s(n5, S))
        worst = max(worst, t)
        got.append(sorted(lab(n5, found)))
        ok &= lab(n5, found) == want
    ok &= worst < 1e-3
    record(1, "N5-meet S-prime sets", ok, worst, f"{got}, slowest call {worst * 1e3:.3f} ms")
    assert ok


# 2 ------------------------------------------------------------------------


def test_02_idz12_sprime_sets(idz12):
    cases = [(("(1)", "(4)"), {"(0)", "(6)", "(3)"}), (("(1)", "(3)"), {"(2)", "(6)"})]
    ok, worst, got = True, 0.0, []
    for S_labels, want in cases:
        S = mset(idz12, *S_labels)
        found, t = fastest(lambda: spec_s(idz12, S))
        worst = max(worst, t)
        got.append(sorted(lab(idz12, found)))
        ok &= lab(idz12, found) == want
    ok &= worst < 1e-3
    record(2, "Id(Z12) S-prime sets", ok, worst, f"{got}, slowest call {worst * 1e3:.3f} ms")
    assert ok


# 3 ------------------------------------------------------------------------


def test_03_filter_and_oka_examples(idz12):
    t = time.perf_counter()
    F1, S1 = ElementFamily(idz12, ix(idz12, "(1)", "(2)", "(4)")), mset(idz12, "(1)", "(4)")
    F2, S2 = ElementFamily(idz12, ix(idz12, "(1)", "(6)")), trivial_set(idz12)
    ako2 = is_s_ako(F2, S2)
    w = witness_labels(idz12, ako2, ("s", "i", "a", "b")) if not ako2 else None
    ok = bool(is_s_ako(F1, S1)) and bool(is_s_oka(F1, S1)) and bool(is_s_oka(F2, S2))
    ok &= w == ("(1)", "(0)", "(6)", "(6)")
    record(3, "Ako/Oka verdicts on the two Id(Z12) families", ok, time.perf_counter() - t,
           f"Ako witness (s,i,a,b)={w}")
    assert ok


# 4 ------------------------------------------------------------------------


def test_04_converse_counterexample(idz12):
    t = time.perf_counter()
    F, S = ElementFamily(idz12, ix(idz12, "(4)", "(6)", "(2)", "(1)")), trivial_set(idz12)
    mx = max_complement(F)
    oka, ako = is_s_oka(F, S), is_s_ako(F, S)
    oka_w = witness_labels(idz12, oka, ("i", "a", "residual")) if not oka else None
    ako_w = witness_labels(idz12, ako, ("i", "a", "b")) if not ako else None
    ok = lab(idz12, mx) == {"(3)"} and all(is_sprime(idz12, S, m) for m in mx)
    ok &= oka_w == ("(0)", "(6)", "(2)") and ako_w == ("(0)", "(6)", "(6)")
    record(4, "MSP family that is neither Ako nor Oka", ok, time.perf_counter() - t,
           f"Max(F')={sorted(lab(idz12, mx))}, Oka (i,a,residual)={oka_w}, Ako (i,a,b)={ako_w}")
    assert ok


# 5 ------------------------------------------------------------------------


def test_05_n5_multiplication_search():
    t = time.perf_counter()
    mult = search_multiplications(n5_lattice(), "multiplicative")
    vlat = search_multiplications(n5_lattice(), "v_lattice")
    elapsed = time.perf_counter() - t
    ok = mult.complete and vlat.complete and mult.count == 0 and vlat.count >= 1 and elapsed < 10
    record(5, "N5 admits no multiplicative structure", ok, elapsed,
           f"multiplicative={mult.count}, v_lattice={vlat.count}")
    assert ok


# 6 ------------------------------------------------------------------------


def test_06_lattice_k(k_host):
    t = time.perf_counter()
    F, S = build_named_family(k_host, "non_annihilator"), trivial_set(k_host)
    a, b, d = ix(k_host, "a", "b", "d")
    ako = is_s_ako(F, S)
    # the ascending scan reports (i=0, a=a, b=a) first; the instance (0, a, b)
    # is checked directly
    ok = F.labels == ["a", "b", "c", "1"] and not ako
    ok &= ako_violated_at(F, k_host.one, k_host.zero, a, b)
    ok &= bool(is_s_oka(F, S))
    top = k_host.lattice.maximal_members(k_host.annihilator_elements)
    ok &= top == frozenset([d]) and bool(is_prime(k_host, d))
    record(6, "lattice K non-annihilator family", ok, time.perf_counter() - t,
           f"first Ako witness (i,a,b)={witness_labels(k_host, ako, ('i', 'a', 'b'))}, "
           f"(0,a,b) violates: {ako_violated_at(F, k_host.one, k_host.zero, a, b)}, "
           f"Max(annihilators)={sorted(lab(k_host, top))}")
    assert ok


# 7 ------------------------------------------------------------------------


def soundness_failures(M):
    """(check, witness) for every failing S-PEP, Ako-implies-Oka, filter or residual-Oka instance."""
    out = []
    for r in exhaustive_audit(M, limit_n=6).failures:
        out.append(("S-PEP", r.witnesses))
    one = [M.one]
    for F in families_containing(M, one):
        if is_s_ako(F, trivial_set(M)) and not is_s_oka(F, trivial_set(M)):
            out.append(("ako-implies-oka", F.labels))
    for S in enumerate_mclosed(M):
        for F in families_containing(M, S):
            if F.semi_filter and F.m_closed:
                ako = is_s_ako(F, S)
                if not ako or not is_s_oka(F, S):
                    w = ako.witness if not ako else {}
                    out.append(("filter-lemma", (M.labels_of(sorted(S)), F.labels,
                                                 {k: M.label(v) for k, v in w.items()})))
            if M.is_multiplicative:
                if bool(residual_oka_condition(F, S)) != bool(is_s_oka(F, S)):
                    out.append(("residual-oka", (M.labels_of(sorted(S)), F.labels)))
    return out


@pytest.fixture(scope="module")
def soundness():
    t = time.perf_counter()
    found = {name: soundness_failures(builtin(name)) for name in SOUNDNESS_HOSTS}
    return found, time.perf_counter() - t


@pytest.mark.xfail(
    strict=True,
    reason="on N5 under the meet, the up-closed product-closed family {b, 1} is not Ako",
)
def test_07_soundness_audits(soundness):
    found, elapsed = soundness
    bad = {name: f for name, f in found.items() if f}
    first = next(iter(bad.items()), None)
    detail = "no failures" if not bad else (
        f"{sum(map(len, bad.values()))} failing instances on {sorted(bad)}; "
        f"first on {first[0]}: {first[1][0]}"
    )
    ok = not bad and elapsed < 60
    record(7, "soundness audits over the small catalog", ok, elapsed, detail)
    assert ok


def test_07_soundness_on_multiplicative_hosts(soundness):
    found, elapsed = soundness
    mult = {name: f for name, f in found.items() if builtin(name).is_multiplicative}
    assert all(not f for f in mult.values()) and elapsed < 60
    # the only failures are the filter lemma on N5-meet, and S-PEP itself holds there
    n5 = found["n5_meet"]
    assert n5 and {kind for kind, _ in n5} == {"filter-lemma"}
    print(f"        multiplicative hosts: 0 failures; N5-meet: {len(n5)} filter-lemma failures")


# 8 ------------------------------------------------------------------------


def constructed_failures(M):
    out = []
    for members in enumerate_mclosed(M):
        S = validate_mclosed(M, members)
        fams = [("above_S", build_named_family(M, "above_S", S=S))]
        sp = spec_s(M, S)
        for mask in range(1, 1 << len(sp)):
            primes = [p for k, p in enumerate(sp) if mask >> k & 1]
            fams.append(("avoiding_primes", build_named_family(M, "avoiding_primes", S=S, primes=primes)))
        if M.is_multiplicative:
            fams += [(k, build_named_family(M, k)) for k in ("star_zero", "dense")]
        for kind, F in fams:
            if members <= F.members:
                v = is_s_ako(F, S)
                if not v:
                    out.append((kind, M.labels_of(sorted(S)), F.labels,
                                {k: M.label(x) for k, x in v.witness.items()}))
    return out


@pytest.fixture(scope="module")
def constructed():
    t = time.perf_counter()
    found = {name: constructed_failures(builtin(name)) for name in SOUNDNESS_HOSTS}
    return found, time.perf_counter() - t


@pytest.mark.xfail(
    strict=True,
    reason="on N5 under the meet, the above-S and prime-avoiding families equal {b, 1}, which is not Ako",
)
def test_08_constructed_families(constructed):
    found, elapsed = constructed
    bad = {name: f for name, f in found.items() if f}
    first = next(iter(bad.items()), None)
    detail = "no failures" if not bad else (
        f"{sum(map(len, bad.values()))} failing families on {sorted(bad)}; first on {first[0]}: {first[1][0]}"
    )
    record(8, "constructed families are S-Ako", not bad, elapsed, detail)
    assert not bad


def test_08_constructed_on_multiplicative_hosts(constructed):
    found, _ = constructed
    assert all(not f for name, f in found.items() if builtin(name).is_multiplicative)
    assert {kind for kind, *_ in found["n5_meet"]} == {"above_S", "avoiding_primes"}


# 9 ------------------------------------------------------------------------


def test_09_principal_lemmas():
    t = time.perf_counter()
    checked, bad = 0, []
    for n in ZN_SET:
        M = ideal_lattice(n)
        for checks in (principal_product_checks, principal_residual_checks):
            for w in checks(M):
                checked += 1
                if w is not None:
                    bad.append((n, w))
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 5
    record(9, "principal-element lemmas on Id(Z_n)", ok, elapsed,
           f"{checked} pairs, {len(bad)} failures")
    assert ok


# 10 -----------------------------------------------------------------------


def test_10_oracle_equivalence():
    t = time.perf_counter()
    total, bad = 0, []
    for n in ZN_SET:
        for S in residue_sets(n):
            r = crosscheck(n, S, n_families=1000)
            total += 1
            if not r.passed:
                bad.append((n, sorted(S), r.conclusion.witness))
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 60
    record(10, "ring oracles agree with the lattice code", ok, elapsed,
           f"{total} (n, S) pairs, {len(bad)} mismatching")
    assert ok


# 11 -----------------------------------------------------------------------


def test_11_residual_criterion():
    t = time.perf_counter()
    checked, bad = 0, []
    for n in ZN_SET:
        M = ideal_lattice(n)
        for members in enumerate_mclosed(M):
            for p in M.elements:
                if p == M.one or any(M.le(s, p) for s in members):
                    continue
                checked += 1
                if not residual_prime_equiv(M, members, p):
                    bad.append((n, M.labels_of(sorted(members)), M.label(p)))
    record(11, "S-prime iff some residual (p:s) is prime", not bad, time.perf_counter() - t,
           f"{checked} instances, {len(bad)} failures")
    assert not bad


# 12 -----------------------------------------------------------------------


def test_12_essential_theorem():
    t = time.perf_counter()
    z30 = {r.theorem_id: r for r in run_theorem_suite(ideal_lattice(30), ids=("thm-essential",))}
    z12 = {r.theorem_id: r for r in run_theorem_suite(ideal_lattice(12), ids=("thm-essential",))}
    r30, r12 = z30["thm-essential"], z12["thm-essential"]
    name, v = r12.failed_precondition or (None, None)
    ok = r30.status == PASS and set(r30.witnesses["max"]) == {"(2)", "(3)", "(5)"}
    ok &= r12.status == "not-applicable" and name == "reduced" and v.witness.get("a") == "(6)"
    record(12, "essential-element theorem on Id(Z30) and Id(Z12)", ok, time.perf_counter() - t,
           f"Z30 {r30.status} max={sorted(r30.witnesses.get('max', ()))}; "
           f"Z12 {r12.status} ({name}, nilpotent {v.witness.get('a') if v is not None else None})")
    assert ok


# 13 -----------------------------------------------------------------------


def test_13_finite_product_instance(idz12):
    t = time.perf_counter()
    gens = ix(idz12, "(2)", "(3)")
    r = finite_product_instance(idz12, gens)
    F = build_named_family(idz12, "product_closure", generators=gens)
    peps = check_s_peps(idz12, trivial_set(idz12), F, "all")
    word = r.witnesses.get("zero_word")
    ok = r.status == PASS and "(0)" in r.witnesses["closure"]
    ok &= word is not None and len(word) == 3 and peps.status == PASS
    record(13, "finite product of (2),(3) reaches (0) in Id(Z12)", ok, time.perf_counter() - t,
           f"word={word}, supplement mode-all {peps.status}")
    assert ok
