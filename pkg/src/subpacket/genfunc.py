"""Coefficients a_n of the generating polynomial (1 + x + ... + x^(D-1))^T."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from subpacket import kernels

DEFAULT_ENUMERATION_BUDGET = 10**6


@dataclass(frozen=True)
class CoefficientVector:
    D: int
    T: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return self.T * (self.D - 1)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)


def expand_coefficients(D: int, T: int) -> CoefficientVector:
    if D < 2:
        raise ValueError(f"expand_coefficients requires D >= 2 (got {D})")
    if T < 1:
        raise ValueError(f"expand_coefficients requires T >= 1 (got {T})")
    return CoefficientVector(D, T, tuple(kernels.window_power(D, T)))


def coefficient_count_oracle(
    D: int, T: int, n: int, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> int:
    """Count T-tuples over [0:D-1] summing to n by enumerating all D**T of them."""
    if D < 2 or T < 1:
        raise ValueError(f"requires D >= 2 and T >= 1 (got D={D}, T={T})")
    if not 0 <= n <= T * (D - 1):
        raise ValueError(f"n must lie in [0:{T * (D - 1)}], got {n}")
    if D**T > budget:
        raise ValueError(f"D**T = {D**T} tuples exceeds enumeration budget {budget}")
    return sum(1 for tup in product(range(D), repeat=T) if sum(tup) == n)


def tuple_count_distribution(
    D: int, T: int, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> list[int]:
    """Brute-force counts for every n at once, in a single pass over the tuples."""
    if D < 2 or T < 1:
        raise ValueError(f"requires D >= 2 and T >= 1 (got D={D}, T={T})")
    if D**T > budget:
        raise ValueError(f"D**T = {D**T} tuples exceeds enumeration budget {budget}")
    counts = [0] * (T * (D - 1) + 1)
    for tup in product(range(D), repeat=T):
        counts[sum(tup)] += 1
    return counts


def filtered_coefficients(v: CoefficientVector) -> list[int]:
    """[a_0, a_D, ..., a_{SD}]: the coefficients whose index is a multiple of D."""
    S = v.degree // v.D
    return [v.coeffs[k * v.D] for k in range(S + 1)]
