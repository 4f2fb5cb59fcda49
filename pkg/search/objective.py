"""
YBE residual over the manifold of R-matrices with a fixed two-point spectrum.

R = −P + q(1−P) = q·1 − (1+q)P with P = W·D_r·W*, where D_r projects onto the
first r basis vectors and W is unitary. Any zero of the objective is a
unitary R-matrix with spectrum {−1, q} and τ(P) = r/d².
"""

import logging
from typing import Tuple

import numpy as np
import scipy.linalg

from config import ToleranceContext, config
from tensorlinalg import amplify, hermiticity_residual, as_matrix

logger = logging.getLogger(__name__)

FD_STEP = 1e-6


class NotHermitianError(ValueError):
    """Raised when a search parameter is not Hermitian."""

    def __init__(self, residual: float):
        self.residual = residual
        super().__init__(f"parameter is not Hermitian: ‖H − H*‖_F = {residual:.3e}")


def diagonal_projection(size: int, r: int) -> np.ndarray:
    D = np.zeros((size, size), dtype=np.complex128)
    D[np.arange(r), np.arange(r)] = 1
    return D


def expi(H: np.ndarray) -> np.ndarray:
    """exp(iH) for Hermitian H through its spectral decomposition."""
    w, V = scipy.linalg.eigh((H + H.conj().T) / 2)
    return (V * np.exp(1j * w)) @ V.conj().T


def rmatrix_from_frame(W: np.ndarray, q: complex, r: int) -> np.ndarray:
    """q·1 − (1+q)·W D_r W*."""
    size = W.shape[0]
    Wr = W[:, :r]
    P = Wr @ Wr.conj().T
    return q * np.eye(size) - (1 + q) * P


def ybe_defect(R: np.ndarray, d: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(E, R₁, R₂) with E = R₁R₂R₁ − R₂R₁R₂ on V^{⊗3}."""
    R1 = amplify(R, 1, 3, d)
    R2 = amplify(R, 2, 3, d)
    return R1 @ R2 @ R1 - R2 @ R1 @ R2, R1, R2


def frame_value(W: np.ndarray, q: complex, r: int, d: int) -> float:
    """‖E‖²_F at the frame W."""
    E, _, _ = ybe_defect(rmatrix_from_frame(W, q, r), d)
    return float(np.real(np.vdot(E, E)))


def objective(H, q: complex, r: int, d: int, tol: ToleranceContext = None) -> float:
    """
    ybe_residual(R)² for R = −P + q(1−P), P = exp(iH) D_r exp(−iH).

    Raises:
        NotHermitianError: if ‖H − H*‖_F ≥ eps_eq
    """
    tol = tol or config.tolerances()
    H = as_matrix(H)
    if H.shape != (d * d, d * d):
        raise ValueError(f"expected a {d * d}x{d * d} parameter, got {H.shape}")
    residual = hermiticity_residual(H)
    if residual >= tol.eps_eq:
        raise NotHermitianError(residual)
    return frame_value(expi(H), q, r, d)


def _trace_out_last(A: np.ndarray, d: int) -> np.ndarray:
    """Unnormalized partial trace of an operator on V^{⊗3} over the third factor."""
    n = d * d
    return np.einsum("ikjk->ij", A.reshape(n, d, n, d))


def _trace_out_first(A: np.ndarray, d: int) -> np.ndarray:
    n = d * d
    return np.einsum("kikj->ij", A.reshape(d, n, d, n))


def analytic_gradient(W: np.ndarray, q: complex, r: int, d: int) -> Tuple[float, np.ndarray]:
    """
    Value and gradient of K ↦ ‖E‖² at K = 0 for the chart W·exp(iK).

    The gradient G is Hermitian and satisfies df = Re Tr(G* dK).
    """
    R = rmatrix_from_frame(W, q, r)
    E, R1, R2 = ybe_defect(R, d)
    value = float(np.real(np.vdot(E, E)))

    R12 = R1 @ R2
    R21 = R2 @ R1
    g1 = E @ R21.conj().T + R12.conj().T @ E - R2.conj().T @ E @ R2.conj().T
    g2 = R1.conj().T @ E @ R1.conj().T - E @ R12.conj().T - R21.conj().T @ E
    gamma = _trace_out_last(g1, d) + _trace_out_first(g2, d)

    M = W.conj().T @ gamma.conj().T @ W
    D = diagonal_projection(W.shape[0], r)
    C = D @ M - M @ D
    N = -1j * (1 + q) * C
    return value, N + N.conj().T


def hermitian_basis(n: int):
    """Orthonormal basis of n×n Hermitian matrices for Re Tr(X*Y)."""
    for j in range(n):
        B = np.zeros((n, n), dtype=np.complex128)
        B[j, j] = 1
        yield B
    s = 1 / np.sqrt(2)
    for j in range(n):
        for k in range(j + 1, n):
            B = np.zeros((n, n), dtype=np.complex128)
            B[j, k] = B[k, j] = s
            yield B
            B = np.zeros((n, n), dtype=np.complex128)
            B[j, k], B[k, j] = 1j * s, -1j * s
            yield B


def finite_difference_gradient(W: np.ndarray, q: complex, r: int, d: int, h: float = FD_STEP) -> Tuple[float, np.ndarray]:
    """Central differences of K ↦ ‖E(W·exp(iK))‖² along a Hermitian basis."""
    value = frame_value(W, q, r, d)
    G = np.zeros_like(W)
    for B in hermitian_basis(W.shape[0]):
        plus = frame_value(W @ expi(h * B), q, r, d)
        minus = frame_value(W @ expi(-h * B), q, r, d)
        G += (plus - minus) / (2 * h) * B
    return value, G


GRADIENTS = {
    "analytic": analytic_gradient,
    "finite-difference": finite_difference_gradient,
}
