import cmath
from fractions import Fraction

import pytest

from subpacket.params import make_parameters
from subpacket.verifier import (
    Grid,
    VerificationReport,
    characteristic_roots,
    run_suite,
    verify_binomial_identities,
    verify_characteristic_roots,
    verify_closed_form_equivalence,
    verify_exact_filter,
    verify_filter_average,
    verify_initial_conditions,
    verify_intermediate_L,
    verify_ratio_identity,
    verify_reversed_recursion,
    verify_root_of_unity_sum,
    verify_root_unity_forms,
    verify_tuple_counts,
)


@pytest.mark.parametrize("triple", [(2, 4, 2), (3, 3, 2), (2, 3, 2)])
def test_reversed_recursion(triple):
    rep = verify_reversed_recursion(make_parameters(*triple))
    assert rep.mode == "exact" and rep.passed and rep.residual == 0


@pytest.mark.parametrize("D, P, target", [(4, 8, 4), (4, 6, 0), (3, 0, 3), (5, -10, 5), (12, 97, 0)])
def test_root_of_unity_sum(D, P, target):
    rep = verify_root_of_unity_sum(D, P)
    assert rep.passed and not rep.relative
    assert abs(rep.values[0] - target) <= 1e-12


def test_characteristic_roots_real_case():
    roots = characteristic_roots(4, 2)
    assert roots[0] == pytest.approx(1.0)
    assert roots[1] == pytest.approx(-1 / 3)
    for r in roots:
        assert (1 + 1 / r) ** 2 == pytest.approx(4)


@pytest.mark.parametrize("triple", [(4, 3, 2), (2, 4, 3), (16, 20, 19)])
def test_characteristic_roots(triple):
    rep = verify_characteristic_roots(make_parameters(*triple))
    assert rep.passed and rep.residual <= 1e-9
    assert len(rep.values) == triple[2]


@pytest.mark.parametrize(
    "triple, expected",
    [((2, 3, 2), [1, 0, 1]), ((3, 3, 2), [2, 0, 1]), ((2, 5, 3), [1, 0, 0, 1, 3])],
)
def test_initial_conditions(triple, expected):
    rep = verify_initial_conditions(make_parameters(*triple))
    assert rep.passed
    assert [z.real for z in rep.values] == pytest.approx(expected, abs=1e-9)
    assert all(abs(z.imag) <= 1e-9 for z in rep.values)


def test_binomial_identity_examples():
    rep = verify_binomial_identities(Fraction(1), 4, 2)
    lhs1, rhs1, lhs2, rhs2 = rep.values
    assert (lhs1, rhs1, lhs2, rhs2) == (15, 15, 3, 3)
    rep0 = verify_binomial_identities(Fraction(0), 7, 3)
    assert rep0.values[0] == rep0.values[1] == 1
    assert rep.passed and rep0.passed


@pytest.mark.parametrize("r", [Fraction(-1), Fraction(2, 3), Fraction(-5, 7), Fraction(123, 11)])
def test_binomial_identity_rationals(r):
    rep = verify_binomial_identities(r, 9, 4)
    assert rep.passed and rep.residual == 0


@pytest.mark.parametrize(
    "triple, L", [((2, 3, 2), 3.0), ((2, 4, 3), 8 / 3), ((3, 3, 2), 6.0)]
)
def test_intermediate_and_root_unity_forms(triple, L):
    p = make_parameters(*triple)
    inter = verify_intermediate_L(p)
    forms = verify_root_unity_forms(p)
    assert inter.passed and forms.passed
    assert inter.values[0].real == pytest.approx(L, rel=1e-9)
    for z in forms.values:
        assert z.real == pytest.approx(L, rel=1e-9)


def test_root_unity_forms_larger():
    assert verify_root_unity_forms(make_parameters(4, 5, 2)).residual <= 1e-9


@pytest.mark.parametrize(
    "D, N, m, expected", [(2, 4, 0, 1.5), (2, 4, 1, 0.5), (3, 8, 0, 1.75)]
)
def test_ratio_identity(D, N, m, expected):
    rep = verify_ratio_identity(D, N, m)
    lhs, rhs = rep.values
    assert rep.passed
    assert lhs == pytest.approx(expected) and rhs == pytest.approx(expected)


@pytest.mark.parametrize("D, T, N, expected", [(2, 2, 2, 1.5), (3, 2, 2, 2.0), (2, 3, 4, 1.75)])
def test_filter_average(D, T, N, expected):
    rep = verify_filter_average(D, T, N)
    lhs, rhs = rep.values
    assert rep.passed
    assert rhs == pytest.approx(expected)
    assert lhs.real == pytest.approx(expected)


def test_exact_checks():
    assert verify_tuple_counts(4, 5).passed
    assert verify_exact_filter(5, 7).passed
    assert verify_closed_form_equivalence(make_parameters(7, 13, 4)).passed


def test_report_pass_rule():
    rep = verify_root_of_unity_sum(4, 6, tolerance=0.0)
    assert rep.passed == (rep.residual <= 0.0)
    with pytest.raises(ValueError):
        VerificationReport("x", {}, "floating", float("nan"), 1e-9, False)


def test_suite_small_grid():
    grid = Grid(N=range(2, 5), K=range(3, 9), D=range(2, 5))
    summaries = run_suite(grid, samples=5)
    assert all(s.passed for s in summaries), [(s.identity_name, s.worst_residual) for s in summaries]
    assert {s.identity_name for s in summaries} >= {
        "closed_form_equivalence", "reversed_recursion", "binomial_identities", "root_of_unity_sum",
        "characteristic_roots", "initial_conditions", "intermediate_L", "root_unity_forms",
        "ratio_identity", "filter_average", "tuple_counts", "exact_filter",
    }


def test_suite_unattainable_tolerance_fails_floating_only():
    grid = Grid(N=range(2, 5), K=range(3, 9), D=range(2, 5))
    summaries = {s.identity_name: s for s in run_suite(grid, tolerance=1e-30, samples=2)}
    assert summaries["closed_form_equivalence"].passed
    assert not summaries["initial_conditions"].passed
    assert summaries["initial_conditions"].first_failure is not None
