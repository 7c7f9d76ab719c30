"""Exact solution of the backward recursion and the defining sum for L.

This is the ground-truth path: every other way of computing L is checked
against :func:`normalized_L_via_recursion`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from subpacket import kernels
from subpacket.params import Parameters


@dataclass(frozen=True)
class SequenceTable:
    """L_1..L_K for one parameter triple.  Indexing is 1-based: ``table[j]`` is L_j."""

    params: Parameters
    values: tuple[Fraction, ...]

    def __getitem__(self, j: int) -> Fraction:
        if not 1 <= j <= self.params.K:
            raise IndexError(f"L_j defined for j in [1:{self.params.K}], got {j}")
        return self.values[j - 1]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class ReversedView:
    """M_t = L_{K-t} for t in [0:K-1]; ``view[t]`` is M_t."""

    table: SequenceTable

    def __getitem__(self, t: int) -> Fraction:
        K = self.table.params.K
        if not 0 <= t <= K - 1:
            raise IndexError(f"M_t defined for t in [0:{K - 1}], got {t}")
        return self.table[K - t]

    def __len__(self) -> int:
        return len(self.table)

    def as_list(self) -> list[Fraction]:
        return [self[t] for t in range(len(self))]


def solve_recursion(p: Parameters) -> SequenceTable:
    """Seed L_K and the zero block, then run j = K-D down to 1."""
    q = p.N - 1
    scaled = kernels.backward_recursion(q, p.K, p.D)
    denom = q ** (p.K - p.D)
    return SequenceTable(p, tuple(Fraction(x, denom) for x in scaled))


def reversed_view(table: SequenceTable) -> ReversedView:
    return ReversedView(table)


def normalized_L_from_table(table: SequenceTable) -> Fraction:
    p = table.params
    N, K, D = p.N, p.K, p.D
    full = sum(comb(K, t) * table[t] for t in range(1, K + 1))
    head = sum(comb(K - D, t) * table[t] for t in range(1, K - D + 1))
    return Fraction(N, D) * full - Fraction(N, D) * head


def normalized_L_via_recursion(p: Parameters) -> Fraction:
    """L = (N/D) sum_{t=1}^{K} C(K,t) L_t - (N/D) sum_{t=1}^{K-D} C(K-D,t) L_t, exactly."""
    return normalized_L_from_table(solve_recursion(p))


def recursion_residuals(table: SequenceTable) -> list[Fraction]:
    """(N-1) L_j - sum_i C(D,i) L_{i+j} for j in [1:K-D]; all zero for a correct table."""
    p = table.params
    return [
        (p.N - 1) * table[j] - sum(comb(p.D, i) * table[i + j] for i in range(1, p.D + 1))
        for j in range(1, p.K - p.D + 1)
    ]
