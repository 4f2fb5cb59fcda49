"""
The R-matrix value type.

An RMatrix is a unitary solution of the Yang-Baxter equation on V⊗V with
base dimension d = dim V. Values are immutable; every transform validates
and returns a new RMatrix.
"""

import logging
from dataclasses import dataclass

import numpy as np

from config import ToleranceContext, config
from tensorlinalg import (
    ShapeError,
    NotUnitaryError,
    as_matrix,
    amplify,
    frobenius,
    unitarity_residual,
    partial_trace_first,
    partial_trace_last,
    normalized_trace,
    eig_unitary,
    SpectrumData,
)

logger = logging.getLogger(__name__)


class BadShapeError(ShapeError):
    """Raised when a matrix is not d²×d²."""


class NotYangBaxterError(ValueError):
    """Raised when a matrix fails the Yang-Baxter equation."""

    def __init__(self, residual: float, unitarity: float):
        self.residual = residual
        self.unitarity_residual = unitarity
        super().__init__(
            f"matrix does not solve the Yang-Baxter equation: residual {residual:.3e} "
            f"(unitarity residual {unitarity:.3e})"
        )


class NotUnimodularError(ValueError):
    """Raised when a rescaling factor is not on the unit circle."""


@dataclass(frozen=True, eq=False)
class RMatrix:
    """Validated unitary R-matrix of base dimension d."""
    d: int
    M: np.ndarray
    tol: ToleranceContext

    @property
    def size(self) -> int:
        return self.d * self.d

    @property
    def dim(self) -> int:
        return self.d

    def spectrum(self) -> SpectrumData:
        return eig_unitary(self.M, self.tol)

    def trace(self) -> complex:
        """Normalized trace τ(R)."""
        return normalized_trace(self.M, self.d, 2)

    def partial_trace(self) -> np.ndarray:
        """φ(R), the normalized partial trace over the first factor."""
        return partial_trace_first(self.M, self.d)

    def right_partial_trace(self) -> np.ndarray:
        return partial_trace_last(self.M, self.d)

    def __repr__(self):
        return f"RMatrix(d={self.d})"


def ybe_residual(M, d: int) -> float:
    """‖(M⊗1)(1⊗M)(M⊗1) − (1⊗M)(M⊗1)(1⊗M)‖_F on V^{⊗3}."""
    M = as_matrix(M)
    if M.shape != (d * d, d * d):
        raise BadShapeError(f"expected a {d * d}x{d * d} matrix for d={d}, got {M.shape[0]}x{M.shape[1]}")
    R1 = amplify(M, 1, 3, d)
    R2 = amplify(M, 2, 3, d)
    return frobenius(R1 @ R2 @ R1 - R2 @ R1 @ R2)


def validate(M, d: int, tol: ToleranceContext = None) -> RMatrix:
    """
    Validate a matrix as a unitary R-matrix.

    Raises:
        BadShapeError: if M is not d²×d²
        NotUnitaryError: if ‖M*M − I‖_F ≥ eps_unitary
        NotYangBaxterError: if the YBE residual is ≥ eps_ybe
    """
    tol = tol or config.tolerances()
    if d < 1:
        raise BadShapeError(f"base dimension must be positive, got {d}")
    try:
        M = as_matrix(M)
    except ShapeError as e:
        raise BadShapeError(str(e)) from e
    if M.shape != (d * d, d * d):
        raise BadShapeError(f"expected a {d * d}x{d * d} matrix for d={d}, got {M.shape[0]}x{M.shape[1]}")

    unitarity = unitarity_residual(M)
    residual = ybe_residual(M, d)
    if residual >= tol.eps_ybe:
        raise NotYangBaxterError(residual, unitarity)
    if unitarity >= tol.eps_unitary:
        raise NotUnitaryError(
            unitarity,
            f"matrix is not unitary: residual {unitarity:.3e} (YBE residual {residual:.3e})",
        )

    frozen = M.copy()
    frozen.setflags(write=False)
    return RMatrix(d=d, M=frozen, tol=tol)


def identity_rmatrix(m: int, tol: ToleranceContext = None) -> RMatrix:
    """1_m, the identity of C^m⊗C^m."""
    return validate(np.eye(m * m, dtype=np.complex128), m, tol)


def rescale(R: RMatrix, c: complex) -> RMatrix:
    """
    c·R for unimodular c.

    Raises:
        NotUnimodularError: if ||c| − 1| ≥ eps_eq
    """
    if abs(abs(c) - 1) >= R.tol.eps_eq:
        raise NotUnimodularError(f"rescaling factor {c!r} is not unimodular")
    return validate(c * R.M, R.d, R.tol)


def _require_unitary(u: np.ndarray, size: int, tol: ToleranceContext):
    if u.shape != (size, size):
        raise BadShapeError(f"expected a {size}x{size} unitary, got {u.shape}")
    residual = unitarity_residual(u)
    if residual >= tol.eps_unitary:
        raise NotUnitaryError(residual)


def conjugate_uu(R: RMatrix, u) -> RMatrix:
    """(u⊗u)·R·(u⊗u)*, equivalent to R."""
    u = as_matrix(u)
    _require_unitary(u, R.d, R.tol)
    uu = np.kron(u, u)
    return validate(uu @ R.M @ uu.conj().T, R.d, R.tol)


def conjugate_one_u(R: RMatrix, u) -> RMatrix:
    """
    (1⊗u)·R·(1⊗u)*, equivalent to R when u⊗u commutes with R.

    Raises:
        ValueError: if ‖[u⊗u, R]‖_F ≥ eps_eq
    """
    u = as_matrix(u)
    _require_unitary(u, R.d, R.tol)
    uu = np.kron(u, u)
    commutator = frobenius(uu @ R.M - R.M @ uu)
    if commutator >= R.tol.eps_eq:
        raise ValueError(f"u⊗u does not commute with R (‖[u⊗u, R]‖ = {commutator:.3e})")
    ou = np.kron(np.eye(R.d), u)
    return validate(ou @ R.M @ ou.conj().T, R.d, R.tol)


def boxtimes(R: RMatrix, S: RMatrix) -> RMatrix:
    """
    R ⊠ S acting on (V⊗W)⊗(V⊗W).

    M_R⊗M_S lives on V⊗V⊗W⊗W; the factors are reshuffled to V⊗W⊗V⊗W by
    an axis permutation of the reshaped array.
    """
    dr, ds = R.d, S.d
    K = np.kron(R.M, S.M).reshape((dr, dr, ds, ds) * 2)
    # rows (v1, v2, w1, w2) -> (v1, w1, v2, w2), same for columns
    K = K.transpose(0, 2, 1, 3, 4, 6, 5, 7)
    d = dr * ds
    return validate(K.reshape(d * d, d * d), d, R.tol)


def adjoint(R: RMatrix) -> RMatrix:
    """R*, again an R-matrix."""
    return validate(R.M.conj().T, R.d, R.tol)


def inverse(R: RMatrix) -> np.ndarray:
    """R⁻¹ = R*, the image of an inverse braid generator."""
    return R.M.conj().T
