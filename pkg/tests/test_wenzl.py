"""
Tests for Wenzl trace values and the projection recursion.
"""

from fractions import Fraction

import numpy as np
import pytest

from hecke import SizeCapExceededError, WenzlRangeError, alpha, eta_wenzl, frs_sequence, wenzl_table


@pytest.mark.parametrize("ell, k, eta", [
    (4, 2, Fraction(1, 2)),
    (6, 2, Fraction(1, 3)),
    (6, 3, Fraction(1, 2)),
    (6, 4, Fraction(2, 3)),
])
def test_rational_wenzl_values(ell, k, eta):
    params = eta_wenzl(ell, k)
    assert params.eta_exact == eta
    assert params.eta_lk == pytest.approx(float(eta))
    assert params.closed_form_gap < 1e-12


@pytest.mark.parametrize("ell", range(4, 13))
def test_endpoints_and_monotonicity(ell):
    table = wenzl_table(ell)
    assert len(table) == ell - 1
    assert table[0].eta_lk == pytest.approx(0, abs=1e-14)
    assert table[-1].eta_lk == pytest.approx(1)
    values = [p.eta_lk for p in table]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert all(p.closed_form_gap < 1e-12 for p in table)


def test_irrational_value_has_no_exact_form():
    assert eta_wenzl(5, 2).eta_exact is None


@pytest.mark.parametrize("ell", range(4, 13))
def test_alpha_values(ell):
    assert alpha(ell, 1) == pytest.approx(1)
    c2 = np.cos(np.pi / ell) ** 2
    assert 1 / alpha(ell, 2) == pytest.approx(1 - 1 / (4 * c2))
    assert len(eta_wenzl(ell, 2).alphas) == ell - 2


@pytest.mark.parametrize("ell, k", [(3, 1), (4, 0), (4, 4), (6, 7)])
def test_eta_range_errors(ell, k):
    with pytest.raises(WenzlRangeError):
        eta_wenzl(ell, k)


def test_alpha_range_errors():
    with pytest.raises(WenzlRangeError):
        alpha(6, 0)
    with pytest.raises(WenzlRangeError):
        alpha(6, 5)


def _traces(steps):
    return [s.trace_recursion for s in steps]


def test_frs_for_qi(qi):
    steps = frs_sequence(qi, 4, 3)
    assert [s.n for s in steps] == [0, 1, 2, 3]
    assert [s.strands for s in steps] == [1, 2, 3, 4]
    assert _traces(steps) == pytest.approx([1, 0.5, 0, 0], abs=1e-10)


def test_frs_for_qpi3(qpi3):
    steps = frs_sequence(qpi3, 6, 2)
    assert _traces(steps) == pytest.approx([1, 1 / 3, 0], abs=1e-10)


def test_frs_for_flip(qpi3_flip):
    steps = frs_sequence(qpi3_flip, 6, 3)
    assert _traces(steps) == pytest.approx([1, 2 / 3, 1 / 3, 1 / 9], abs=1e-10)
    for step in steps:
        assert step.projection_defect < 1e-6
        assert step.trace_wedge == pytest.approx(step.trace_recursion, abs=1e-8)
        assert step.trace_scalar == pytest.approx(step.trace_recursion, abs=1e-10)
        assert step.integer_defect < 1e-8
    # 3⁴/9 = 9
    assert steps[-1].trace_recursion * 81 == pytest.approx(9)


def test_frs_range_errors(qi):
    with pytest.raises(WenzlRangeError):
        frs_sequence(qi, 4, 0)
    with pytest.raises(WenzlRangeError):
        frs_sequence(qi, 4, 4)
    with pytest.raises(WenzlRangeError):
        frs_sequence(qi, 3, 1)


def test_frs_size_cap(qpi3):
    with pytest.raises(SizeCapExceededError) as excinfo:
        frs_sequence(qpi3, 6, 5, size_cap=100)
    assert excinfo.value.size == 729
    assert excinfo.value.cap == 100
