"""
Tests for Gaussian R-matrices and their Hecke normalizations.
"""

from fractions import Fraction

import numpy as np
import pytest

from gaussian import (
    GaussianDimensionError,
    HeckeFamily,
    U,
    gauss_sum,
    gaussian,
    gaussian_eigenvalue,
    hecke_gaussian,
    root_of_unity,
    u_spectral_projection,
    xi,
)
from hecke import ClassLabel, classify_hecke
from tensorlinalg import amplify, frobenius, partial_trace_first

DIMS = range(2, 9)


def _closest(values, z):
    return min(abs(v - z) for v in values)


def test_root_of_unity_is_exact_on_quarter_turns():
    assert root_of_unity(Fraction(1, 2)) == 1j
    assert root_of_unity(Fraction(-3, 1)) == -1
    assert root_of_unity(Fraction(7, 2)) == -1j


def test_xi():
    assert xi(3) == pytest.approx(np.exp(2j * np.pi / 3))
    assert xi(4) == pytest.approx(np.exp(1j * np.pi / 4))
    with pytest.raises(GaussianDimensionError):
        xi(1)


@pytest.mark.parametrize("d", DIMS)
def test_u_power_and_exchange_relation(d):
    u = U(d)
    assert frobenius(np.linalg.matrix_power(u, d) - np.eye(d * d)) < 1e-10
    U1, U2 = amplify(u, 1, 3, d), amplify(u, 2, 3, d)
    assert frobenius(U1 @ U2 - xi(d) ** 2 * U2 @ U1) < 1e-10


@pytest.mark.parametrize("d", DIMS)
def test_closed_form_eigenvalues(d):
    data = gaussian(d)
    spectrum = data.G.spectrum()
    assert len(spectrum) <= d
    for l, mu in enumerate(data.mu):
        assert abs(mu ** (4 * d) - 1) < 1e-10
        assert abs(mu - gauss_sum(d, l)) < 1e-10
        assert _closest(spectrum.eigenvalues, mu) < 1e-10
    for value in spectrum.eigenvalues:
        assert _closest(data.mu, value) < 1e-10


def test_spectrum_of_g2():
    spectrum = gaussian(2).G.spectrum()
    assert _closest(spectrum.eigenvalues, np.exp(1j * np.pi / 4)) < 1e-12
    assert _closest(spectrum.eigenvalues, np.exp(-1j * np.pi / 4)) < 1e-12
    assert len(spectrum) == 2


def test_spectrum_of_g3():
    spectrum = gaussian(3).G.spectrum()
    by_value = {round(np.angle(v), 9): m for v, m in zip(spectrum.eigenvalues, spectrum.multiplicities)}
    assert by_value == {round(np.pi / 2, 9): 3, round(-np.pi / 6, 9): 6}


@pytest.mark.parametrize("d", DIMS)
def test_partial_trace_is_scalar(d):
    data = gaussian(d)
    assert frobenius(partial_trace_first(data.G.M, d) - np.eye(d) / np.sqrt(d)) < 1e-12
    for k in range(1, d):
        assert frobenius(partial_trace_first(np.linalg.matrix_power(data.U, k), d)) < 1e-12


def test_u_spectral_projections_are_orthogonal():
    d = 3
    projections = [u_spectral_projection(d, l) for l in range(d)]
    for l, P in enumerate(projections):
        for m, Q in enumerate(projections):
            expected = P if l == m else np.zeros_like(P)
            assert frobenius(P @ Q - expected) < 1e-10


def test_u_spectral_projections_resolve_identity_and_u():
    d = 4
    projections = [u_spectral_projection(d, l) for l in range(d)]
    assert frobenius(sum(projections) - np.eye(d * d)) < 1e-10
    weighted = sum(np.exp(2j * np.pi * l / d) * P for l, P in enumerate(projections))
    assert frobenius(weighted - U(d)) < 1e-10


@pytest.mark.parametrize("d", range(2, 7))
def test_u_spectral_projection_rank(d):
    for l in range(d):
        assert np.trace(u_spectral_projection(d, l)).real == pytest.approx(d)


def test_u_spectral_projection_range():
    with pytest.raises(GaussianDimensionError):
        u_spectral_projection(3, 3)


def test_gaussian_rejects_small_dimension():
    with pytest.raises(GaussianDimensionError):
        gaussian(1)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_qi_family_labels(m):
    label = classify_hecke(hecke_gaussian(HeckeFamily.QI, m))
    assert label == ClassLabel(1j, Fraction(1, 2), 2 * m)


@pytest.mark.parametrize("m", [1, 2])
def test_qpi3_family_labels(m):
    label = classify_hecke(hecke_gaussian(HeckeFamily.QPI3, m))
    assert label == ClassLabel(np.exp(1j * np.pi / 3), Fraction(1, 3), 3 * m)


@pytest.mark.parametrize("m", [1, 2])
def test_hecke_representatives_have_scalar_partial_trace(m):
    R = hecke_gaussian(HeckeFamily.QI, m)
    phi = R.partial_trace()
    assert frobenius(phi - phi[0, 0] * np.eye(R.d)) < 1e-10
    assert abs(phi[0, 0]) == pytest.approx(1 / np.sqrt(2))


def test_hecke_gaussian_rejects_zero_multiplicity():
    with pytest.raises(GaussianDimensionError):
        hecke_gaussian(HeckeFamily.QI, 0)
