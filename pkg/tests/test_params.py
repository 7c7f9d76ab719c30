import pytest
from hypothesis import given, strategies as st

from subpacket.params import ParameterError, Parameters, derive_shape, make_parameters


def test_smallest_triple():
    p = make_parameters(2, 3, 2)
    assert (p.N, p.K, p.D) == (2, 3, 2)


@pytest.mark.parametrize(
    "triple, message",
    [
        ((2, 3, 3), "requires K > D"),
        ((1, 5, 2), "requires N > 1"),
        ((2, 5, 1), "requires D > 1"),
        ((2, 2, 3), "requires K > D"),
        ((2.0, 5, 2), "requires integer N"),
        ((True, 5, 2), "requires integer N"),
    ],
)
def test_rejections(triple, message):
    with pytest.raises(ParameterError, match=message):
        make_parameters(*triple)


def test_parameter_error_is_value_error():
    with pytest.raises(ValueError):
        Parameters(0, 0, 0)


@pytest.mark.parametrize(
    "triple, T, S",
    [((2, 3, 2), 2, 1), ((2, 4, 3), 2, 1), ((2, 10, 3), 8, 5)],
)
def test_derive_shape(triple, T, S):
    shape = derive_shape(make_parameters(*triple))
    assert (shape.T, shape.S) == (T, S)


def test_frozen():
    p = make_parameters(2, 3, 2)
    with pytest.raises(AttributeError):
        p.N = 5


@given(N=st.integers(2, 10**6), D=st.integers(2, 500), extra=st.integers(1, 500))
def test_shape_invariants(N, D, extra):
    p = Parameters(N, D + extra, D)
    shape = derive_shape(p)
    assert shape.T - 1 == p.K - p.D >= 1
    assert shape.S * p.D <= shape.T * (p.D - 1)
    assert 0 <= shape.S < shape.T
    assert derive_shape(p) == shape
