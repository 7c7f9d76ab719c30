from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from subpacket.closed_form import (
    leading_term,
    normalized_L_closed_form,
    polynomial_coefficients,
    subpacketization_level,
)
from subpacket.params import make_parameters
from subpacket.recursion_oracle import normalized_L_via_recursion


@pytest.mark.parametrize(
    "triple, expected",
    [((2, 3, 2), Fraction(3)), ((2, 4, 3), Fraction(8, 3)), ((3, 3, 2), Fraction(6))],
)
def test_closed_form_examples(triple, expected):
    p = make_parameters(*triple)
    assert normalized_L_closed_form(p) == expected
    assert normalized_L_via_recursion(p) == expected


@pytest.mark.parametrize(
    "triple, expected",
    [((2, 3, 2), (2, Fraction(1, 2))), ((5, 10, 3), (8, Fraction(1, 3))), ((2, 4, 3), (2, Fraction(1, 3)))],
)
def test_leading_term(triple, expected):
    assert leading_term(make_parameters(*triple)) == expected


@pytest.mark.parametrize(
    "triple, sub, mult",
    [((2, 3, 2), 3, 1), ((2, 4, 3), 8, 3), ((3, 3, 2), 6, 1)],
)
def test_subpacketization_examples(triple, sub, mult):
    res = subpacketization_level(make_parameters(*triple))
    assert (res.subpacketization, res.multiplier) == (sub, mult)
    assert res.L == Fraction(res.polynomial_value, triple[2])


triples = st.tuples(st.integers(2, 30), st.integers(2, 9), st.integers(1, 20)).map(
    lambda x: make_parameters(x[0], x[1] + x[2], x[1])
)


@settings(max_examples=150, deadline=None)
@given(p=triples)
def test_matches_recursion(p):
    assert normalized_L_closed_form(p) == normalized_L_via_recursion(p)


@settings(max_examples=150, deadline=None)
@given(p=triples)
def test_subpacketization_semantics(p):
    res = subpacketization_level(p)
    assert res.multiplier * res.L == res.subpacketization
    assert p.D % res.multiplier == 0
    assert all((m * res.L).denominator != 1 for m in range(1, res.multiplier))
    assert res.subpacketization > 0


@settings(max_examples=100, deadline=None)
@given(N1=st.integers(2, 50), dN=st.integers(1, 50), D=st.integers(2, 8), extra=st.integers(1, 12))
def test_monotone_in_N(N1, dN, D, extra):
    K = D + extra
    lo = normalized_L_closed_form(make_parameters(N1, K, D))
    hi = normalized_L_closed_form(make_parameters(N1 + dN, K, D))
    assert lo < hi


@settings(max_examples=50, deadline=None)
@given(p=triples)
def test_nonnegative_integer_coefficients(p):
    coeffs = polynomial_coefficients(p)
    assert all(isinstance(a, int) and a >= 0 for a in coeffs)
    assert (p.D * normalized_L_closed_form(p)).denominator == 1
