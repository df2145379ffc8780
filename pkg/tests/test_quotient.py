import pytest
from hypothesis import given, settings

from poissonval.exactpoly import parse_poly
from poissonval.poisson import structure_from_potential
from poissonval.quotient import (
    MonomialOrder, OrderError, QuotientRing, basis_monomials, divide, fermat_potential, normal_form,
    potential_quotient, quotient_bracket,
)

from conftest import polys

P = parse_poly


@pytest.fixture
def cubic_fiber():
    return QuotientRing.of(P("x^3+y^3+z^3-1"), MonomialOrder.lex("z", "y", "x"))


def test_normal_form_examples(cubic_fiber):
    assert normal_form(cubic_fiber, P("z^3")) == P("1-x^3-y^3")
    assert normal_form(cubic_fiber, P("x^3+y^3+z^3")) == 1
    assert normal_form(cubic_fiber, P("x+y")) == P("x+y")


def test_default_order_is_z_first():
    q = potential_quotient(fermat_potential(3), 1)
    assert q.lead == (0, 0, 3)


def test_quotient_brackets():
    omega = fermat_potential(3)
    s = structure_from_potential(omega)
    x, y, z = s.gens()
    assert quotient_bracket(potential_quotient(omega), s, x, y) == P("3*z^2")
    assert quotient_bracket(potential_quotient(omega, 1), s, x, y) == P("3*z^2")


def test_basis_counts(cubic_fiber):
    assert len(basis_monomials(cubic_fiber, 2)) == 10
    assert len(basis_monomials(cubic_fiber, 3)) == 19
    assert len(basis_monomials(potential_quotient(fermat_potential(5), 1), 4)) == 35


def test_bad_orders():
    with pytest.raises(OrderError):
        QuotientRing.of(P("x-1"), MonomialOrder.weighted({"x": -1, "y": 1, "z": 1}, "x", "y", "z"))
    with pytest.raises(Exception):
        QuotientRing.of(P("3"))


@settings(max_examples=50, deadline=None)
@given(polys(max_deg=5), polys(max_deg=2))
def test_normal_form_properties(f, g):
    q = potential_quotient(P("x^4+y^4+z^4+x*y*z^2"), 1)
    nf = normal_form(q, f)
    # canonical, idempotent, and f - nf lies in the ideal
    assert normal_form(q, nf) == nf
    assert not any(m[2] >= 4 for m in nf.terms)
    quo, rem = divide(f - nf, [q.modulus], q.order)
    assert not rem
    assert normal_form(q, f * g) == normal_form(q, nf * normal_form(q, g))


@settings(max_examples=40, deadline=None)
@given(polys(max_deg=3))
def test_orders_are_total(f):
    for order in (MonomialOrder.lex("x", "y", "z"), MonomialOrder.grlex("z", "x", "y"),
                  MonomialOrder.grevlex("x", "y", "z"), MonomialOrder.weighted({"x": 1, "y": 2, "z": 3}, "x", "y", "z")):
        ms = order.sorted_monomials(f)
        key = order.key(f.vars)
        assert len({key(m) for m in ms}) == len(ms)
