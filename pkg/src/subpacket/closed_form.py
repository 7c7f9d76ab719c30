"""Polynomial formula for L and the integer subpacketization level.

    L = (1/D) * sum_{k=0}^{S} a_{kD} * N^(T-k)

The subpacketization level is the smallest positive integer of the form m*L
with m a positive integer.  Writing L = P/D in lowest terms p'/q', that integer
is p' and it is reached at m = q'.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from subpacket.genfunc import expand_coefficients, filtered_coefficients
from subpacket.params import Parameters, derive_shape


@dataclass(frozen=True)
class ClosedFormResult:
    params: Parameters
    L: Fraction
    subpacketization: int
    multiplier: int
    polynomial_value: int


def polynomial_coefficients(p: Parameters) -> list[int]:
    """[a_0, a_D, ..., a_{SD}]; entry k multiplies N^(T-k)."""
    T = derive_shape(p).T
    return filtered_coefficients(expand_coefficients(p.D, T))


def polynomial_value(p: Parameters) -> int:
    T = derive_shape(p).T
    return sum(a * pow(p.N, T - k) for k, a in enumerate(polynomial_coefficients(p)))


def normalized_L_closed_form(p: Parameters) -> Fraction:
    return Fraction(polynomial_value(p), p.D)


def leading_term(p: Parameters) -> tuple[int, Fraction]:
    """(degree, coefficient) of the highest power of N in L."""
    T = derive_shape(p).T
    coeffs = polynomial_coefficients(p)
    # Highest nonzero entry in ascending-k order is the highest power of N.
    k = next(k for k, a in enumerate(coeffs) if a != 0)
    return T - k, Fraction(coeffs[k], p.D)


def subpacketization_level(p: Parameters) -> ClosedFormResult:
    P = polynomial_value(p)
    g = gcd(P, p.D)
    return ClosedFormResult(
        params=p,
        L=Fraction(P, p.D),
        subpacketization=P // g,
        multiplier=p.D // g,
        polynomial_value=P,
    )
