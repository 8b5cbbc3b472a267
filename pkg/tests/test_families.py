import numpy as np
import pytest

from multlat.catalog import builtin, small_catalog
from multlat.errors import BadParams, MissingTop, NotRLattice, SNotContained
from multlat.families import (
    ElementFamily,
    ako_violated_at,
    build_named_family,
    check_filter,
    check_m_closed,
    check_semi_filter,
    families_containing,
    is_s_ako,
    is_s_oka,
    is_spr_oka,
    max_complement,
    product_word,
    residual_oka_condition,
    semigroup_closure,
    structural_flags,
    upsets,
)
from multlat.mult import is_reduced
from multlat.sprime import enumerate_mclosed, is_prime, spec_s, trivial_set, validate_mclosed

from conftest import ix, lab

SMALL = small_catalog()
MULTIPLICATIVE_SMALL = [M for M in SMALL if M.is_multiplicative]


def fam(M, *labels):
    return ElementFamily(M, ix(M, *labels))


def mset(M, *labels):
    return validate_mclosed(M, ix(M, *labels))


def named(M, v):
    return {k: M.label(x) for k, x in v.witness.items() if isinstance(x, (int, np.integer))}


# --- structural flags -----------------------------------------------------


def test_flags_on_idz12(idz12):
    flags = structural_flags(fam(idz12, "(1)", "(2)", "(4)"))
    assert flags["semi_filter"] and flags["m_closed"] and flags["filter"]
    v = structural_flags(fam(idz12, "(1)", "(6)"))["semi_filter"]
    assert not v
    # the first upward step out of the family from (6)
    assert idz12.label(v.witness["j"]) == "(6)"
    assert idz12.label(v.witness["i"]) in {"(3)", "(2)"}
    full = ElementFamily(idz12, idz12.elements)
    assert full.filter and full.m_closed


def test_flags_need_top(idz12):
    with pytest.raises(MissingTop):
        structural_flags(fam(idz12, "(2)"))


# --- Ako and Oka on the worked examples -----------------------------------


def test_example_filter_family(idz12):
    F = fam(idz12, "(1)", "(2)", "(4)")
    S = mset(idz12, "(1)", "(4)")
    assert is_s_ako(F, S) and is_s_oka(F, S)


def test_oka_not_ako(idz12):
    F = fam(idz12, "(1)", "(6)")
    S = trivial_set(idz12)
    assert is_s_oka(F, S)
    v = is_s_ako(F, S)
    assert named(idz12, v) == {"s": "(1)", "i": "(0)", "a": "(6)", "b": "(6)"}


def test_converse_family(idz12):
    F = fam(idz12, "(4)", "(6)", "(2)", "(1)")
    S = trivial_set(idz12)
    assert lab(idz12, max_complement(F)) == {"(3)"}
    assert set(max_complement(F)) <= set(spec_s(idz12, S))
    oka = is_s_oka(F, S)
    w = named(idz12, oka)
    assert (w["i"], w["a"], w["residual"]) == ("(0)", "(6)", "(2)")
    assert named(idz12, is_s_ako(F, S)) == {"s": "(1)", "i": "(0)", "a": "(6)", "b": "(6)"}


def test_k_non_annihilator_family(k_host):
    F = build_named_family(k_host, "non_annihilator")
    assert F.labels == ["a", "b", "c", "1"]
    S = trivial_set(k_host)
    assert is_s_oka(F, S)
    v = is_s_ako(F, S)
    assert not v
    # the scan meets (i=0, a=a, b=a) first; the instance (0, a, b) fails as well
    assert ako_violated_at(F, k_host.one, k_host.zero, *ix(k_host, "a", "b"))
    anni = k_host.annihilator_elements
    top = k_host.lattice.maximal_members(anni)
    assert lab(k_host, top) == {"d"}
    assert is_prime(k_host, ix(k_host, "d")[0])


def test_s_must_be_inside_family(idz12):
    F = fam(idz12, "(1)", "(6)")
    S = mset(idz12, "(1)", "(4)")
    for check in (is_s_ako, is_s_oka, residual_oka_condition):
        with pytest.raises(SNotContained):
            check(F, S)


def test_full_family_passes_everything(idz12):
    F = ElementFamily(idz12, idz12.elements)
    for S in enumerate_mclosed(idz12):
        assert is_s_ako(F, S) and is_s_oka(F, S)
    assert max_complement(F) == frozenset()


def test_spr_oka(idz12, n5):
    S = trivial_set(idz12)
    assert is_spr_oka(ElementFamily(idz12, idz12.elements), S)
    assert is_spr_oka(build_named_family(idz12, "compact"), S)
    with pytest.raises(NotRLattice):
        is_spr_oka(ElementFamily(n5, n5.elements), trivial_set(n5))


def test_max_complement_of_filter(idz12):
    assert lab(idz12, max_complement(fam(idz12, "(1)", "(2)", "(4)"))) == {"(3)"}


# --- named families -------------------------------------------------------


def test_named_examples(idz12):
    F = build_named_family(idz12, "above_S", S=mset(idz12, "(1)", "(4)"))
    assert set(F.labels) == {"(1)", "(2)", "(4)"}
    z30 = builtin("idzn(30)")
    assert build_named_family(z30, "dense").labels == ["(1)"]
    gens = ix(idz12, "(2)", "(3)")
    closure = semigroup_closure(idz12, gens)
    assert lab(idz12, closure) == {"(2)", "(4)", "(3)", "(6)", "(0)"}
    assert len(build_named_family(idz12, "product_closure", generators=gens)) == idz12.n
    word = product_word(idz12, gens, idz12.zero)
    assert len(word) == 3 and idz12.product(word) == idz12.zero


def test_named_family_params(idz12):
    with pytest.raises(BadParams):
        build_named_family(idz12, "avoiding_primes", S=trivial_set(idz12))
    with pytest.raises(BadParams):
        build_named_family(idz12, "above_S")
    with pytest.raises(BadParams):
        build_named_family(idz12, "product_closure", generators=[])
    with pytest.raises(BadParams):
        build_named_family(idz12, "cofinite")


@pytest.mark.parametrize("M", MULTIPLICATIVE_SMALL, ids=lambda M: M.name)
def test_constructed_families_are_ako(M):
    for members in enumerate_mclosed(M):
        S = validate_mclosed(M, members)
        assert is_s_ako(build_named_family(M, "above_S", S=S), S)
        sp = spec_s(M, S)
        for k in range(1, min(len(sp), 3) + 1):
            for start in range(len(sp) - k + 1):
                F = build_named_family(M, "avoiding_primes", S=S, primes=sp[start:start + k])
                if members <= F.members:
                    assert is_s_ako(F, S)
        for kind in ("star_zero", "dense"):
            F = build_named_family(M, kind)
            if members <= F.members:
                assert is_s_ako(F, S)


@pytest.mark.parametrize("M", MULTIPLICATIVE_SMALL, ids=lambda M: M.name)
def test_non_annihilator_is_oka(M):
    assert is_s_oka(build_named_family(M, "non_annihilator"), trivial_set(M))


@pytest.mark.parametrize(
    "M", [M for M in MULTIPLICATIVE_SMALL if is_reduced(M)], ids=lambda M: M.name
)
def test_essential_on_reduced_hosts(M):
    F = build_named_family(M, "essential")
    assert F.semi_filter and F.m_closed


# --- exhaustive invariants ------------------------------------------------


@pytest.mark.parametrize("M", small_catalog(7), ids=lambda M: M.name)
def test_ako_implies_oka(M):
    S = trivial_set(M)
    for F in families_containing(M, [M.one]):
        if is_s_ako(F, S):
            assert is_s_oka(F, S)


@pytest.mark.parametrize("M", SMALL, ids=lambda M: M.name)
def test_filter_equivalence_and_cached_flags(M):
    for F in families_containing(M, [M.one]):
        assert bool(F.semi_filter and F.m_closed) == bool(F.filter and F.m_closed)
        assert bool(F.semi_filter) == bool(check_semi_filter(F))
        assert bool(F.filter) == bool(check_filter(F))
        assert bool(F.m_closed) == bool(check_m_closed(F))


@pytest.mark.parametrize("M", MULTIPLICATIVE_SMALL, ids=lambda M: M.name)
def test_semifilter_m_closed_is_ako_and_oka(M):
    for F in upsets(M):
        if M.one not in F or not F.m_closed:
            continue
        for members in enumerate_mclosed(M):
            if members <= F.members:
                assert is_s_ako(F, members) and is_s_oka(F, members)


@pytest.mark.parametrize("M", MULTIPLICATIVE_SMALL, ids=lambda M: M.name)
def test_residual_condition_matches_oka(M):
    for members in enumerate_mclosed(M):
        for F in families_containing(M, members):
            assert bool(residual_oka_condition(F, members)) == bool(is_s_oka(F, members))


def test_n5_breaks_the_filter_claim(n5):
    # without join-distributivity a multiplicative filter need not be Ako
    F = fam(n5, "b", "1")
    assert F.semi_filter and F.m_closed
    S = trivial_set(n5)
    v = is_s_ako(F, S)
    assert named(n5, v) == {"s": "1", "i": "a", "a": "b", "b": "c"}
