import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from multlat.catalog import boolean_lattice, chain_lattice, k_lattice, n5_lattice
from multlat.errors import NoBounds, NotALattice, NotAPoset
from multlat.lattice import FiniteLattice, build_lattice, transitive_closure
from multlat.zn import ideal_lattice


def test_n5_shape():
    L = n5_lattice()
    assert L.n == 5
    assert L.label(L.bottom) == "0" and L.label(L.top) == "1"
    a, b, c = L.indices(["a", "b", "c"])
    assert L.join(a, c) == L.top
    assert L.meet(b, c) == L.bottom
    assert L.le(a, b) and not L.le(c, b)


def test_n5_not_modular_with_witness():
    L = n5_lattice()
    v = L.is_modular()
    assert not v
    w = {k: L.label(x) for k, x in v.witness.items()}
    assert w == {"a": "a", "b": "c", "c": "b"}
    # a <= c, yet a v (b ^ c) != (a v b) ^ c
    a, b, c = v.witness["a"], v.witness["b"], v.witness["c"]
    assert L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c)
    assert not L.is_distributive()


def test_boolean_is_distributive():
    assert boolean_lattice(3).is_distributive()
    assert chain_lattice(4).is_modular()


def test_k_not_modular():
    assert not k_lattice().is_modular()


def test_cycle_rejected():
    with pytest.raises(NotAPoset):
        build_lattice(["x", "y"], [("x", "y"), ("y", "x")])


def test_missing_bounds():
    leq = np.eye(2, dtype=bool)
    with pytest.raises(NoBounds):
        FiniteLattice(["x", "y"], leq)


def test_not_a_lattice():
    # 0 < a, b < c, d < 1 : a and b have two minimal upper bounds
    covers = [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")]
    with pytest.raises(NotALattice):
        build_lattice(["0", "a", "b", "c", "d", "1"], covers)


def test_not_transitive_matrix_rejected():
    leq = np.array([[1, 1, 0], [0, 1, 1], [0, 0, 1]], dtype=bool)
    with pytest.raises(NotAPoset):
        FiniteLattice(["0", "m", "1"], leq)


def test_tables_read_only():
    L = chain_lattice(3)
    with pytest.raises(ValueError):
        L.join_table[0, 0] = 1


def test_covers_of_boolean2():
    L = boolean_lattice(2)
    got = {(L.label(a), L.label(b)) for a, b in L.covers()}
    assert got == {("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")}


def test_transitive_closure_chain():
    rel = np.array([[1, 1, 0], [0, 1, 1], [0, 0, 1]], dtype=bool)
    assert transitive_closure(rel)[0, 2]


def test_maximal_and_minimal_members():
    L = n5_lattice()
    a, b, c = L.indices(["a", "b", "c"])
    assert set(L.maximal_members([a, b, c])) == {b, c}
    assert set(L.minimal_members([a, b, c])) == {a, c}
    assert set(L.coatoms()) == {b, c}


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=400))
def test_divisor_lattice_laws(n):
    L = ideal_lattice(n).lattice
    J, M, leq = L.join_table, L.meet_table, L.leq
    idx = np.arange(L.n)
    assert (J == J.T).all() and (M == M.T).all()
    # absorption
    assert (J[idx[:, None], M] == idx[:, None]).all()
    assert (M[idx[:, None], J] == idx[:, None]).all()
    # join is an upper bound and the order agrees with it
    assert leq[idx[:, None], J].all()
    assert (leq == (J == idx[None, :])).all()
    # divisor lattices are distributive
    assert L.is_distributive()


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=9))
def test_chain_join_is_max(k):
    L = chain_lattice(k)
    a = np.arange(k)
    assert (L.join_table == np.maximum(a[:, None], a[None, :])).all()
