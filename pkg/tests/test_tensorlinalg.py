"""
Tests for tensor-power linear algebra and unitary spectra.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tensorlinalg import (
    NotProjectionError,
    NotUnitaryError,
    ShapeError,
    ToleranceContext,
    amplify,
    eig_unitary,
    frobenius,
    is_projection,
    kron,
    normalized_trace,
    partial_trace_first,
    partial_trace_last,
    random_hermitian,
    random_unitary,
    shift,
    tensor_power_order,
    unitarity_residual,
    wedge,
)

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


def test_kron_uses_row_major_ordering():
    e0, e1 = np.array([[1], [0]]), np.array([[0], [1]])
    v = kron(e0, e1)
    assert v.shape == (4, 1)
    assert v[1, 0] == 1 and np.count_nonzero(v) == 1


def test_tensor_power_order():
    assert tensor_power_order(8, 2) == 3
    assert tensor_power_order(9, 3) == 2
    with pytest.raises(ShapeError):
        tensor_power_order(6, 2)


def test_normalized_trace_of_identity_is_one():
    assert normalized_trace(np.eye(27), 3, 3) == pytest.approx(1)


@settings(max_examples=25, deadline=None)
@given(seed=seeds, d=st.integers(min_value=1, max_value=3))
def test_partial_traces_of_products(seed, d):
    rng = np.random.default_rng(seed)
    A = random_unitary(d, rng)
    B = random_unitary(d * d, rng) if d > 1 else random_unitary(1, rng)
    AB = np.kron(A, B)
    assert frobenius(partial_trace_first(AB, d) - np.trace(A) / d * B) < 1e-12
    BA = np.kron(B, A)
    assert frobenius(partial_trace_last(BA, d) - np.trace(A) / d * B) < 1e-12


def test_partial_trace_of_single_factor_is_normalized_trace(rng):
    A = random_unitary(3, rng)
    phi = partial_trace_first(A, 3)
    assert phi.shape == (1, 1)
    assert phi[0, 0] == pytest.approx(np.trace(A) / 3)


@settings(max_examples=25, deadline=None)
@given(seed=seeds, d=st.integers(min_value=2, max_value=3))
def test_partial_trace_is_a_bimodule_map(seed, d):
    rng = np.random.default_rng(seed)
    X = random_hermitian(d, rng) + 1j * random_hermitian(d, rng)
    Z = random_unitary(d, rng)
    Y = random_hermitian(d * d, rng) + 1j * random_hermitian(d * d, rng)
    lhs = partial_trace_first(shift(X, d) @ Y @ shift(Z, d), d)
    rhs = X @ partial_trace_first(Y, d) @ Z
    assert frobenius(lhs - rhs) < 1e-10


def test_shift_and_amplify_agree():
    X = np.arange(16).reshape(4, 4)
    assert np.array_equal(shift(X, 2), amplify(X, 2, 3, 2))
    assert amplify(X, 1, 3, 2).shape == (8, 8)
    with pytest.raises(ShapeError):
        amplify(X, 3, 3, 2)


def test_amplified_generators_far_apart_commute(rng):
    R = random_unitary(4, rng)
    R1, R3 = amplify(R, 1, 4, 2), amplify(R, 3, 4, 2)
    assert frobenius(R1 @ R3 - R3 @ R1) < 1e-12


def test_eig_unitary_clusters_degenerate_eigenvalues(rng):
    u = random_unitary(4, rng)
    M = u @ np.diag([1, 1, 1j, -1]) @ u.conj().T
    spectrum = eig_unitary(M)
    assert len(spectrum) == 3
    assert sorted(spectrum.multiplicities) == [1, 1, 2]
    assert frobenius(spectrum.reconstruct() - M) < 1e-10
    ones = spectrum.find(1, 1e-8)
    assert ones is not None and ones.multiplicity == 2
    assert is_projection(ones.projector)


def test_eig_unitary_orders_by_angle():
    spectrum = eig_unitary(np.diag([-1, 1j, -1j, 1]))
    angles = [np.angle(v) for v in spectrum.eigenvalues]
    assert angles == sorted(angles)


def test_eig_unitary_rejects_non_unitary():
    with pytest.raises(NotUnitaryError):
        eig_unitary(np.diag([1.0, 2.0]))


def test_wedge_of_coordinate_projections():
    P = np.diag([1, 1, 0]).astype(complex)
    Q = np.diag([0, 1, 1]).astype(complex)
    assert frobenius(wedge(P, Q) - np.diag([0, 1, 0])) < 1e-12


def test_wedge_of_transversal_projections_is_zero(rng):
    u = random_unitary(4, rng)
    P = np.diag([1, 1, 0, 0]).astype(complex)
    Q = u @ P @ u.conj().T
    assert frobenius(wedge(P, Q)) < 1e-12


def _column_projection(u, columns):
    V = u[:, columns]
    return V @ V.conj().T


@settings(max_examples=25, deadline=None)
@given(seed=seeds, shared=st.integers(min_value=0, max_value=2))
def test_wedge_lies_below_both_projections(seed, shared):
    rng = np.random.default_rng(seed)
    u = random_unitary(6, rng)
    P = _column_projection(u, list(range(3)))
    Q = _column_projection(u, list(range(shared)) + [3, 4])
    W = wedge(P, Q)
    assert frobenius(P @ W - W) < 1e-8
    assert frobenius(Q @ W - W) < 1e-8
    assert np.real(np.trace(W)) == pytest.approx(shared, abs=1e-8)


def test_wedge_rejects_non_projection():
    with pytest.raises(NotProjectionError):
        wedge(np.eye(2) * 2, np.eye(2))


@settings(max_examples=20, deadline=None)
@given(seed=seeds, n=st.integers(min_value=1, max_value=9))
def test_random_unitary_is_unitary(seed, n):
    U = random_unitary(n, np.random.default_rng(seed))
    assert unitarity_residual(U) < 1e-12


def test_random_hermitian_is_hermitian(rng):
    H = random_hermitian(5, rng)
    assert frobenius(H - H.conj().T) == 0


def test_tolerance_context_rejects_non_positive():
    with pytest.raises(ValueError):
        ToleranceContext(eps_eig=0)
