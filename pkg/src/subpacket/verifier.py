"""Machine checks for the intermediate identities behind the closed form.

Identities that live in the rationals are checked exactly (residual must be 0).
Identities involving the D-th roots of unity and s = N**(1/D) are evaluated in
complex double precision; their residual is

    |computed - exact| / max(1, |exact|, sum of |summands|)

i.e. absolute error for quantities of magnitude at most 1 and relative error
otherwise.  The summand magnitude matters for targets that are exactly zero
(M_1 .. M_{D-1}) but are assembled from terms as large as (N-1)**(K-D).
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterable, Iterator, Optional, Sequence, Union

from subpacket.closed_form import normalized_L_closed_form
from subpacket.genfunc import (
    DEFAULT_ENUMERATION_BUDGET,
    expand_coefficients,
    filtered_coefficients,
    tuple_count_distribution,
)
from subpacket.params import Parameters, derive_shape, is_valid
from subpacket.recursion_oracle import (
    normalized_L_from_table,
    reversed_view,
    solve_recursion,
)

FLOAT_TOLERANCE = 1e-9
ROOT_OF_UNITY_TOLERANCE = 1e-12
BINOMIAL_SAMPLE_POINTS = (
    Fraction(0),
    Fraction(1),
    Fraction(-1),
    Fraction(2, 3),
    Fraction(-5, 7),
)

Number = Union[int, float, Fraction]


@dataclass(frozen=True)
class VerificationReport:
    identity_name: str
    params: dict
    mode: str  # "exact" | "floating"
    residual: Number
    tolerance: float
    passed: bool
    relative: bool = False
    values: tuple = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.mode == "floating" and not math.isfinite(self.residual):
            raise ValueError(f"non-finite residual for {self.identity_name}: {self.residual}")


def _exact(name: str, params: dict, residual: Fraction, values: tuple = ()) -> VerificationReport:
    return VerificationReport(name, params, "exact", residual, 0.0, residual == 0, values=values)


def _floating(
    name: str, params: dict, residual: float, tolerance: float, relative: bool = True, values: tuple = ()
) -> VerificationReport:
    return VerificationReport(
        name, params, "floating", residual, tolerance, residual <= tolerance, relative, values
    )


def _scaled_error(computed: complex, exact: Number, magnitude: float = 0.0) -> float:
    exact_f = float(exact)
    return abs(computed - exact_f) / max(1.0, abs(exact_f), magnitude)


def _pdict(p: Parameters) -> dict:
    return {"N": p.N, "K": p.K, "D": p.D}


# -- roots -------------------------------------------------------------------


def positive_root(N: int, D: int) -> float:
    """s > 0 with s**D = N."""
    return math.exp(math.log(N) / D)


def unit_root(m: int, D: int) -> complex:
    """omega_m = exp(2*pi*i*m/D)."""
    angle = 2.0 * math.pi * m / D
    return complex(math.cos(angle), math.sin(angle))


def characteristic_roots(N: int, D: int) -> list[complex]:
    """r_m = 1/(u_m - 1) with u_m = omega_m * s, m in [0:D-1]."""
    s = positive_root(N, D)
    return [1.0 / (unit_root(m, D) * s - 1.0) for m in range(D)]


def solution_coefficients(p: Parameters) -> list[complex]:
    """c_m = ((N-1)^(K-D) / D) * (u_m - 1)^(D-1) / u_m^(D-1)."""
    s = positive_root(p.N, p.D)
    scale = float((p.N - 1) ** (p.K - p.D)) / p.D
    out = []
    for m in range(p.D):
        u = unit_root(m, p.D) * s
        out.append(scale * ((u - 1.0) / u) ** (p.D - 1))
    return out


# -- individual identities ----------------------------------------------------


def verify_reversed_recursion(p: Parameters) -> VerificationReport:
    """N*M_t = sum_{i=0}^{D} C(D,i) M_{t-i} for t in [D:K-1], on the exact table."""
    M = reversed_view(solve_recursion(p))
    worst = Fraction(0)
    for t in range(p.D, p.K):
        diff = p.N * M[t] - sum(comb(p.D, i) * M[t - i] for i in range(p.D + 1))
        worst = max(worst, abs(diff))
    return _exact("reversed_recursion", _pdict(p), worst, tuple(M.as_list()))


def verify_root_of_unity_sum(D: int, P: int, tolerance: float = ROOT_OF_UNITY_TOLERANCE) -> VerificationReport:
    total = sum(unit_root(m, D) ** P for m in range(D))
    target = D if P % D == 0 else 0
    return _floating(
        "root_of_unity_sum", {"D": D, "P": P}, abs(total - target), tolerance, relative=False, values=(total,)
    )


def verify_characteristic_roots(p: Parameters, tolerance: float = FLOAT_TOLERANCE) -> VerificationReport:
    roots = characteristic_roots(p.N, p.D)
    worst = max(_scaled_error((1.0 + 1.0 / r) ** p.D, p.N) for r in roots)
    return _floating("characteristic_roots", _pdict(p), worst, tolerance, values=tuple(roots))


def verify_initial_conditions(p: Parameters, tolerance: float = FLOAT_TOLERANCE) -> VerificationReport:
    """M_t = sum_m c_m r_m^t reproduces the seeds and the whole exact reversed table."""
    roots = characteristic_roots(p.N, p.D)
    coeffs = solution_coefficients(p)
    M = reversed_view(solve_recursion(p))
    seed = (p.N - 1) ** (p.K - p.D)
    computed = []
    worst = 0.0
    for t in range(p.K):
        terms = [c * r**t for c, r in zip(coeffs, roots)]
        value = sum(terms)
        computed.append(value)
        magnitude = sum(abs(z) for z in terms)
        worst = max(worst, _scaled_error(value, M[t], magnitude))
        if t == 0:
            worst = max(worst, _scaled_error(value, seed, magnitude))
        elif t < p.D:
            worst = max(worst, _scaled_error(value, 0, magnitude))
    return _floating("initial_conditions", _pdict(p), worst, tolerance, values=tuple(computed))


def verify_binomial_identities(r: Fraction, K: int, D: int) -> VerificationReport:
    r = Fraction(r)
    lhs1 = sum(comb(K, t) * r**t for t in range(K))
    rhs1 = (1 + r) ** K - r**K
    lhs2 = sum(comb(K - D, t - D) * r**t for t in range(D, K))
    rhs2 = r**D * ((1 + r) ** (K - D) - r ** (K - D))
    residual = max(abs(lhs1 - rhs1), abs(lhs2 - rhs2))
    return _exact("binomial_identities", {"r": str(r), "K": K, "D": D}, residual, (lhs1, rhs1, lhs2, rhs2))


def verify_intermediate_L(p: Parameters, exact_L: Optional[Fraction] = None,
                          tolerance: float = FLOAT_TOLERANCE) -> VerificationReport:
    """L = (N/D) sum_m c_m (N-1) r_m^D (1+r_m)^(K-D)."""
    if exact_L is None:
        exact_L = normalized_L_from_table(solve_recursion(p))
    roots = characteristic_roots(p.N, p.D)
    coeffs = solution_coefficients(p)
    factor = p.N / p.D
    terms = [factor * c * (p.N - 1) * r**p.D * (1.0 + r) ** (p.K - p.D) for c, r in zip(coeffs, roots)]
    value = sum(terms)
    residual = _scaled_error(value, exact_L, sum(abs(z) for z in terms))
    return _floating("intermediate_L", _pdict(p), residual, tolerance, values=(value,))


def verify_root_unity_forms(p: Parameters, exact_L: Optional[Fraction] = None,
                            tolerance: float = FLOAT_TOLERANCE) -> VerificationReport:
    """Both root-of-unity sum forms of L, against the exact value."""
    if exact_L is None:
        exact_L = normalized_L_from_table(solve_recursion(p))
    N, D = p.N, p.D
    T = derive_shape(p).T
    s = positive_root(N, D)
    prefactor = (N - 1) ** T / D**2

    terms_u = []
    terms_avg = []
    for m in range(D):
        w = unit_root(m, D)
        u = w * s
        terms_u.append(N * prefactor * u ** (T - D) / (u - 1.0) ** T)
        terms_avg.append(prefactor * (1.0 - w / s) ** (-T))
    form_u = sum(terms_u)
    form_avg = sum(terms_avg)
    residual = max(
        _scaled_error(form_u, exact_L, sum(abs(z) for z in terms_u)),
        _scaled_error(form_avg, exact_L, sum(abs(z) for z in terms_avg)),
    )
    return _floating("root_unity_forms", _pdict(p), residual, tolerance, values=(form_u, form_avg))


def verify_ratio_identity(D: int, N: int, m: int, tolerance: float = FLOAT_TOLERANCE) -> VerificationReport:
    """(1 - 1/N) / (1 - omega_m/s) = sum_{t=0}^{D-1} omega_m^t s^-t."""
    s = positive_root(N, D)
    w = unit_root(m, D)
    lhs = (1.0 - 1.0 / N) / (1.0 - w / s)
    terms = [w**t * s ** (-t) for t in range(D)]
    rhs = sum(terms)
    residual = abs(lhs - rhs) / max(1.0, abs(rhs), sum(abs(z) for z in terms))
    return _floating("ratio_identity", {"D": D, "N": N, "m": m}, residual, tolerance, values=(lhs, rhs))


def verify_filter_average(D: int, T: int, N: int, tolerance: float = FLOAT_TOLERANCE) -> VerificationReport:
    """(1/D) sum_m (1-1/N)^T / (1 - omega_m/s)^T = sum_k a_{kD} N^-k."""
    s = positive_root(N, D)
    base = (1.0 - 1.0 / N) ** T
    terms = [base / (1.0 - unit_root(m, D) / s) ** T / D for m in range(D)]
    lhs = sum(terms)
    filtered = filtered_coefficients(expand_coefficients(D, T))
    rhs = float(sum(Fraction(a, N**k) for k, a in enumerate(filtered)))
    residual = _scaled_error(lhs, rhs, sum(abs(z) for z in terms))
    return _floating("filter_average", {"D": D, "T": T, "N": N}, residual, tolerance, values=(lhs, rhs))


def verify_tuple_counts(D: int, T: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> VerificationReport:
    """a_n equals the number of T-tuples over [0:D-1] summing to n, for every n."""
    coeffs = expand_coefficients(D, T).coeffs
    counts = tuple_count_distribution(D, T, budget)
    residual = max(abs(a - c) for a, c in zip(coeffs, counts))
    if len(coeffs) != len(counts):
        residual = max(residual, 1)
    return _exact("tuple_counts", {"D": D, "T": T}, Fraction(residual))


def verify_closed_form_equivalence(p: Parameters) -> VerificationReport:
    via_recursion = normalized_L_from_table(solve_recursion(p))
    via_closed = normalized_L_closed_form(p)
    return _exact(
        "closed_form_equivalence", _pdict(p), abs(via_recursion - via_closed), (via_recursion, via_closed)
    )


def verify_exact_filter(D: int, T: int) -> VerificationReport:
    """Exact root-of-unity filter on the integer coefficients.

    Averaging sum_n a_n omega^(n*m) over m keeps exactly the a_n with D | n;
    over the integers that is index selection, checked here against a
    residue-class partition of the coefficients.
    """
    v = expand_coefficients(D, T)
    by_class = [sum(v.coeffs[n] for n in range(len(v)) if n % D == j) for j in range(D)]
    filtered = filtered_coefficients(v)
    residual = abs(sum(filtered) - by_class[0]) + abs(sum(by_class) - D**T)
    return _exact("exact_filter", {"D": D, "T": T}, Fraction(residual))


# -- suite --------------------------------------------------------------------


@dataclass(frozen=True)
class Grid:
    N: range
    K: range
    D: range

    def triples(self) -> Iterator[Parameters]:
        """Valid triples in lexicographic (N, K, D) order."""
        for N, K, D in product(self.N, self.K, self.D):
            if is_valid(N, K, D):
                yield Parameters(N, K, D)


DEFAULT_GRID = Grid(N=range(2, 17), K=range(3, 21), D=range(2, 20))


@dataclass
class IdentitySummary:
    identity_name: str
    mode: str
    tolerance: float
    instances: int = 0
    failures: int = 0
    worst_residual: Number = 0
    worst_params: Optional[dict] = None
    first_failure: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.instances > 0 and self.failures == 0

    def add(self, report: VerificationReport) -> None:
        self.instances += 1
        if self.worst_params is None or report.residual > self.worst_residual:
            self.worst_residual = report.residual
            self.worst_params = report.params
        if not report.passed:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = report.params


def _summarize(reports: Iterable[VerificationReport], name: str, mode: str, tolerance: float) -> IdentitySummary:
    summary = IdentitySummary(name, mode, tolerance)
    for report in reports:
        summary.add(report)
    return summary


def run_suite(
    grid: Grid = DEFAULT_GRID,
    tolerance: Optional[float] = None,
    samples: int = 100,
    seed: int = 0,
    max_unit_root_D: int = 12,
    max_abs_P: int = 100,
    enumeration_budget: int = 10**5,
) -> list[IdentitySummary]:
    """Run every identity over the grid and return one summary per identity.

    ``tolerance`` overrides every floating tolerance when given.
    """
    tol = FLOAT_TOLERANCE if tolerance is None else tolerance
    tol_rou = ROOT_OF_UNITY_TOLERANCE if tolerance is None else tolerance
    rng = random.Random(seed)

    triples = list(grid.triples())
    exact_L = {p: normalized_L_from_table(solve_recursion(p)) for p in triples}
    kd_pairs = sorted({(p.K, p.D) for p in triples})
    dt_pairs = sorted({(p.D, derive_shape(p).T) for p in triples})
    nd_pairs = sorted({(p.N, p.D) for p in triples})

    def binomial_reports() -> Iterator[VerificationReport]:
        for K, D in kd_pairs:
            points: Sequence[Fraction] = list(BINOMIAL_SAMPLE_POINTS) + [
                Fraction(rng.randint(-50, 50), rng.randint(1, 50)) for _ in range(samples)
            ]
            for r in points:
                yield verify_binomial_identities(r, K, D)

    unit_D = [D for D in sorted({D for _, D in kd_pairs}) if D <= max_unit_root_D]

    summaries = [
        _summarize((verify_closed_form_equivalence(p) for p in triples), "closed_form_equivalence", "exact", 0.0),
        _summarize((verify_reversed_recursion(p) for p in triples), "reversed_recursion", "exact", 0.0),
        _summarize(binomial_reports(), "binomial_identities", "exact", 0.0),
        _summarize((verify_exact_filter(D, T) for D, T in dt_pairs), "exact_filter", "exact", 0.0),
        _summarize(
            (verify_tuple_counts(D, T, enumeration_budget) for D, T in dt_pairs if D**T <= enumeration_budget),
            "tuple_counts", "exact", 0.0,
        ),
        _summarize(
            (verify_root_of_unity_sum(D, P, tol_rou) for D in unit_D for P in range(-max_abs_P, max_abs_P + 1)),
            "root_of_unity_sum", "floating", tol_rou,
        ),
        _summarize((verify_characteristic_roots(p, tol) for p in triples), "characteristic_roots", "floating", tol),
        _summarize((verify_initial_conditions(p, tol) for p in triples), "initial_conditions", "floating", tol),
        _summarize((verify_intermediate_L(p, exact_L[p], tol) for p in triples), "intermediate_L", "floating", tol),
        _summarize((verify_root_unity_forms(p, exact_L[p], tol) for p in triples), "root_unity_forms", "floating", tol),
        _summarize(
            (verify_ratio_identity(D, N, m, tol) for N, D in nd_pairs for m in range(D)),
            "ratio_identity", "floating", tol,
        ),
        _summarize(
            (verify_filter_average(p.D, derive_shape(p).T, p.N, tol) for p in triples),
            "filter_average", "floating", tol,
        ),
    ]
    return summaries
