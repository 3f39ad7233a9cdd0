from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from yfock.errors import DomainError, PoleError
from yfock.ratfield import (
    IntPoly,
    RatFun,
    USeries,
    e1,
    e2,
    expand_linear_quotient,
    form_ratio,
    hbar,
    poly_gcd,
    substitute_hbar_zero,
)

E1, E2 = e1(), e2()


def test_inverse_pair():
    assert (E1 / E2) * (E2 / E1) == 1


def test_additive_inverse():
    assert (E1 + E2) + (-E1 - E2) == 0
    assert not ((E1 + E2) + (-E1 - E2))


def test_difference_of_squares_reduces():
    r = (E1 ** 2 - E2 ** 2) / (E1 + E2)
    assert r == E1 - E2
    assert r.den.is_one()
    assert str(r) == "e1 - e2"


def test_canonical_sign_lives_on_denominator():
    a = (E1 + E2) / (E2 - E1)
    assert str(a) == "-(e1 + e2)/(e1 - e2)"
    assert str(2 * E1 / (E1 - E2)) == "2*e1/(e1 - e2)"
    assert str((E1 + 2 * E2) / (E1 - E2)) == "(e1 + 2*e2)/(e1 - e2)"


def test_integer_content_is_removed():
    r = (2 * E1 + 4 * E2) / (6 * E1)
    assert str(r) == "(e1 + 2*e2)/(3*e1)"


def test_division_by_zero_is_an_error():
    with pytest.raises(ZeroDivisionError):
        E1 / RatFun.const(0)
    with pytest.raises(PoleError):
        form_ratio([(1, 0)], [(0, 0)])


def test_parse_round_trip():
    for text in ["-2*e2/(e1 - e2)", "(e1 - e2)/(2*e1)", "e1^2 + 3*e1*e2", "7", "-1/(e1 - e2)"]:
        assert str(RatFun.parse(text)) == text


def test_parse_rejects_garbage():
    with pytest.raises(DomainError):
        RatFun.parse("e1 +* e3")
    with pytest.raises(DomainError):
        RatFun.parse("foo(e1)")


def test_hbar_zero_substitution():
    assert substitute_hbar_zero((E1 + 2 * E2) / (E1 - E2)) == Fraction(-1, 2)
    assert substitute_hbar_zero(RatFun.const(1)) == 1
    with pytest.raises(PoleError, match="e1 \\+ e2"):
        substitute_hbar_zero(1 / (E1 + E2))


def test_expand_linear_quotient_examples():
    assert expand_linear_quotient([], 3) == USeries.one(3)
    s = expand_linear_quotient([(-(E1 + E2), 0)], 2)
    assert s.coeffs == (1, E1 + E2, 0)
    assert expand_linear_quotient([(E1, E1)], 5) == USeries.one(5)


def test_four_variable_field():
    u, c = RatFun.var(2, 4), RatFun.var(3, 4)
    assert str((u - c) ** 2 / (u - c)) == "u - c"


def test_poly_gcd_simple():
    f = IntPoly({(1, 0): 1, (0, 1): 1})
    g = IntPoly({(1, 0): 1, (0, 1): -1})
    assert poly_gcd(f * g, f * f) == f


# -- properties -----------------------------------------------------------------

small = st.integers(-3, 3)
monomials = st.tuples(st.integers(0, 2), st.integers(0, 2))
polys = st.dictionaries(monomials, small, max_size=4).map(lambda t: IntPoly(t, 2))
nonzero = polys.filter(lambda p: not p.is_zero())


def rat(p, q):
    return RatFun(p, q)


@given(polys, nonzero, nonzero)
def test_round_trip_cancellation(p, q, r):
    assert rat(p, q) * rat(q, r) == rat(p, r)


@given(polys, nonzero, polys, nonzero)
def test_equal_values_have_identical_representation(p, q, s, t):
    a = rat(p, q) + rat(s, t)
    b = rat(p * t + s * q, q * t)
    assert a == b and str(a) == str(b) and hash(a) == hash(b)


@given(polys, nonzero, polys, nonzero, polys, nonzero)
def test_field_axioms(p, q, s, t, v, w):
    a, b, c = rat(p, q), rat(s, t), rat(v, w)
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a
    if b:
        assert (a / b) * b == a


@given(polys, nonzero)
def test_string_form_parses_back(p, q):
    a = rat(p, q)
    assert RatFun.parse(str(a)) == a


pairs = st.lists(st.tuples(st.tuples(small, small), st.tuples(small, small)), max_size=3)


@given(pairs, st.integers(0, 4))
def test_series_inverse(fs, order):
    fwd = [(RatFun.linear(*a), RatFun.linear(*b)) for a, b in fs]
    back = [(b, a) for a, b in fwd]
    prod = expand_linear_quotient(fwd, order) * expand_linear_quotient(back, order)
    assert prod == USeries.one(order)


@given(polys, nonzero, polys, nonzero)
def test_hbar_zero_is_a_ring_homomorphism(p, q, s, t):
    if q.evaluate((1, -1)) == 0 or t.evaluate((1, -1)) == 0:
        return
    a, b = rat(p, q), rat(s, t)
    f = substitute_hbar_zero
    assert f(a + b) == f(a) + f(b)
    assert f(a * b) == f(a) * f(b)


def test_hbar_is_e1_plus_e2():
    assert hbar() == E1 + E2
