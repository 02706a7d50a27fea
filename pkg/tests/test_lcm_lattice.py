"""The lcm lattice of a monomial ideal: elements, covers, degree map."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from posetres import CapExceeded, Monomial, MonomialIdeal, build_lattice, lcm
from posetres.lcm_lattice import build
from posetres.rand import random_ideal

from conftest import load_ideal


def test_small_scarf_lattice_shape():
    L = build_lattice(load_ideal("scarf_small"))
    p = L.poset
    assert p.n == 7
    assert len(p.covers) == 9
    assert len(p.atoms()) == 3
    assert max(p.ranks) == 3
    assert L.monomial(p.bottom).is_one()
    assert L.render(p.bottom) == "1"
    # the top is the lcm of all generators
    top = max(p.elements(), key=lambda i: sum(p.labels[i]))
    assert L.render(top) == "x^2*y^3"


def test_koszul_lattice_is_boolean():
    L = build_lattice(load_ideal("koszul3"))
    p = L.poset
    assert p.n == 8
    assert len(p.covers) == 12
    assert sorted(p.ranks) == [0, 1, 1, 1, 2, 2, 2, 3]
    assert p.is_lattice() and p.is_ranked()


def test_characteristic_witness_lattice_shape():
    L = build_lattice(load_ideal("rp2"))
    p = L.poset
    assert p.n == 33
    assert len(p.covers) == 76
    assert len(p.atoms()) == 10
    assert max(p.ranks) == 4
    assert p.is_lattice()


def test_nonll_small_lattice_is_not_ranked():
    L = build_lattice(load_ideal("nonll_small"))
    assert L.poset.is_lattice()
    assert not L.poset.is_ranked()


def test_build_minimizes_first():
    # x divides xy, so only x survives; the lattice is a single cover
    ideal = MonomialIdeal.from_exponents(("x", "y"), [(1, 0), (1, 1)])
    L = build_lattice(ideal)
    assert L.poset.n == 2
    assert L.render(1) == "x"


def test_atom_generators_map():
    ideal = load_ideal("triangle")
    L = build_lattice(ideal)
    for a, g in L.atom_generators.items():
        assert L.monomial(a) == ideal.generators[g]
    assert sorted(L.atom_generators.values()) == [0, 1, 2]


def test_degree_map_matches_labels_and_is_monotone():
    L = build_lattice(load_ideal("ci3"))
    p = L.poset
    for i in p.elements():
        assert tuple(L.degree.image(i)) == tuple(p.labels[i])
    for a, b in p.covers:
        ea, eb = L.degree.image(a), L.degree.image(b)
        assert all(x <= y for x, y in zip(ea, eb)) and ea != eb


def test_cap_refuses_large_enumerations():
    ideal = MonomialIdeal.from_exponents(
        ("a", "b", "c", "d"), [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0),
                               (0, 0, 0, 1)])
    with pytest.raises(CapExceeded):
        build(ideal, cap=3)


def test_closure_and_subset_methods_agree():
    for name in ("scarf_small", "triangle", "rp2", "nonll_ranked"):
        ideal = load_ideal(name)
        a = build(ideal, method="closure")
        b = build(ideal, method="subsets")
        assert a.poset.labels == b.poset.labels
        assert a.poset.covers == b.poset.covers
    with pytest.raises(ValueError):
        build(load_ideal("triangle"), method="bogus")


def test_joins_are_lcms():
    L = build_lattice(load_ideal("scarf_small"))
    p = L.poset
    for i in p.elements():
        for j in p.elements():
            k = p.join((i, j))
            assert k is not None
            assert L.monomial(k) == lcm(L.monomial(i), L.monomial(j))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 100_000))
def test_random_lattices_are_lattices(seed):
    rng = random.Random(seed)
    ideal = random_ideal(rng, max_vars=4, max_gens=5, max_exp=3)
    L = build_lattice(ideal)
    p = L.poset
    assert p.is_lattice()
    # every element is a join of the atoms below it
    for i in p.elements():
        if i == p.bottom:
            continue
        below = [a for a in p.atoms() if p.leq(a, i)]
        m = Monomial.one(ideal.nvars)
        for a in below:
            m = lcm(m, L.monomial(a))
        assert m == L.monomial(i)
