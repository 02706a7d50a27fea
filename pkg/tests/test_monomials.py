"""Monomials, divisibility, lcm, and minimal generating sets."""

import pytest
from hypothesis import given, settings, strategies as st

from posetres import Monomial, MonomialIdeal, divides, lcm, minimize, quotient
from posetres.monomials import subset_lcm

exps = st.tuples(*[st.integers(0, 4)] * 3)


def test_monomial_basics():
    m = Monomial((2, 0, 1))
    assert m.nvars == 3
    assert m.total_degree == 3
    assert m.render(("x", "y", "z")) == "x^2*z"
    assert Monomial.one(3).is_one()
    assert Monomial.one(3).render(("x", "y", "z")) == "1"
    with pytest.raises(ValueError):
        Monomial((1, -1))
    with pytest.raises(ValueError):
        m.render(("x", "y"))


def test_divides_lcm_quotient():
    a, b = Monomial((1, 2)), Monomial((2, 1))
    assert lcm(a, b) == Monomial((2, 2))
    assert not divides(a, b)
    assert divides(a, lcm(a, b))
    assert quotient(lcm(a, b), a) == Monomial((1, 0))
    with pytest.raises(ValueError):
        quotient(a, b)  # does not divide
    with pytest.raises(ValueError):
        lcm(a, Monomial((1, 1, 1)))  # arity mismatch


def test_ideal_construction_and_contains():
    ideal = MonomialIdeal.from_exponents(("x", "y"), [(2, 0), (1, 1)])
    assert ideal.ngens == 2 and ideal.nvars == 2
    assert ideal.render() == "x^2, x*y"
    assert ideal.contains(Monomial((3, 1)))
    assert not ideal.contains(Monomial((1, 0)))
    assert ideal.is_minimal()
    with pytest.raises(ValueError):
        MonomialIdeal(("x",), (Monomial((1, 2)),))  # arity mismatch


def test_minimize_drops_duplicate_generators():
    ideal = MonomialIdeal.from_exponents(("x", "y"), [(1, 1), (1, 1)])
    reduced, removed = minimize(ideal)
    assert reduced.ngens == 1 and len(removed) == 1
    assert not ideal.is_minimal()


def test_minimize_removes_multiples():
    ideal = MonomialIdeal.from_exponents(("x", "y"), [(1, 0), (1, 1), (0, 2)])
    reduced, removed = minimize(ideal)
    assert reduced.render() == "x, y^2"
    assert [m.render(("x", "y")) for m in removed] == ["x*y"]
    again, removed2 = minimize(reduced)
    assert again == reduced and removed2 == []
    assert not ideal.is_minimal() and reduced.is_minimal()


def test_subset_lcm():
    ideal = MonomialIdeal.from_exponents(("x", "y"), [(2, 0), (1, 1), (0, 3)])
    assert subset_lcm(ideal, ()).is_one()
    assert subset_lcm(ideal, (0, 2)) == Monomial((2, 3))
    assert subset_lcm(ideal, (0, 1, 2)) == Monomial((2, 3))


@settings(max_examples=60, deadline=None)
@given(exps, exps, exps)
def test_lcm_laws(a, b, c):
    ma, mb, mc = Monomial(a), Monomial(b), Monomial(c)
    assert lcm(ma, mb) == lcm(mb, ma)
    assert lcm(ma, lcm(mb, mc)) == lcm(lcm(ma, mb), mc)
    assert lcm(ma, ma) == ma
    assert divides(ma, lcm(ma, mb))
    if divides(ma, mb):
        assert lcm(ma, mb) == mb


@settings(max_examples=60, deadline=None)
@given(exps, exps)
def test_divides_is_partial_order(a, b):
    ma, mb = Monomial(a), Monomial(b)
    if divides(ma, mb) and divides(mb, ma):
        assert ma == mb
    if divides(ma, mb):
        assert quotient(mb, ma).exponents == tuple(
            y - x for x, y in zip(a, b))
