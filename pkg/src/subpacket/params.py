"""Validated (N, K, D) parameter triples and the shape quantities derived from them.

N is the number of servers, K the total number of messages and D the number of
demand messages.  Every other module assumes a :class:`Parameters` instance that
already passed validation here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

# Exact rational carrier; Fraction is always normalised to lowest terms with a
# positive denominator.
RationalValue = Fraction


class ParameterError(ValueError):
    """Raised when an (N, K, D) triple lies outside the admissible domain."""


def _check_int(name: str, value: object) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParameterError(f"requires integer {name}, got {value!r}")
    return value


@dataclass(frozen=True)
class Parameters:
    N: int
    K: int
    D: int

    def __post_init__(self) -> None:
        N = _check_int("N", self.N)
        K = _check_int("K", self.K)
        D = _check_int("D", self.D)
        if N <= 1:
            raise ParameterError(f"requires N > 1 (got N={N})")
        if D <= 1:
            raise ParameterError(f"requires D > 1 (got D={D})")
        if K <= D:
            raise ParameterError(f"requires K > D (got K={K}, D={D})")

    @property
    def shape(self) -> "DerivedShape":
        return derive_shape(self)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.N, self.K, self.D)


@dataclass(frozen=True)
class DerivedShape:
    T: int
    S: int


def make_parameters(N: int, K: int, D: int) -> Parameters:
    """Build a validated triple; raises :class:`ParameterError` naming the failed constraint."""
    return Parameters(N, K, D)


def derive_shape(p: Parameters) -> DerivedShape:
    """T = K - D + 1 and S = floor(T(D-1)/D)."""
    T = p.K - p.D + 1
    return DerivedShape(T=T, S=(T * (p.D - 1)) // p.D)


def is_valid(N: int, K: int, D: int) -> bool:
    try:
        Parameters(N, K, D)
    except ParameterError:
        return False
    return True
