"""
Spectral decompositions of unitary matrices and meets of projections.
"""

import logging
from dataclasses import dataclass
from typing import Tuple, Optional

import numpy as np
import scipy.linalg
from scipy.cluster.hierarchy import linkage, fcluster
from scipy.stats import unitary_group

from config import ToleranceContext
from .ops import as_matrix, frobenius, unitarity_residual, hermiticity_residual, ShapeError

logger = logging.getLogger(__name__)


class NotUnitaryError(ValueError):
    """Raised when a matrix expected to be unitary is not."""

    def __init__(self, residual: float, message: Optional[str] = None):
        self.residual = residual
        super().__init__(message or f"matrix is not unitary: ‖M*M − I‖_F = {residual:.3e}")


class NotProjectionError(ValueError):
    """Raised when a matrix expected to be an orthogonal projection is not."""

    def __init__(self, residual: float):
        self.residual = residual
        super().__init__(f"matrix is not an orthogonal projection (residual {residual:.3e})")


class EigenDecompositionError(RuntimeError):
    """Raised when a spectral decomposition fails its reconstruction contract."""

    def __init__(self, residual: float):
        self.residual = residual
        super().__init__(f"spectral decomposition did not reconstruct the input (residual {residual:.3e})")


@dataclass(frozen=True, eq=False)
class Cluster:
    """One eigenvalue of a unitary matrix with its multiplicity and spectral projector."""
    eigenvalue: complex
    multiplicity: int
    projector: np.ndarray


@dataclass(frozen=True, eq=False)
class SpectrumData:
    """Clustered spectrum, ordered by eigenvalue angle in (−π, π]."""
    clusters: Tuple[Cluster, ...]

    @property
    def eigenvalues(self) -> Tuple[complex, ...]:
        return tuple(c.eigenvalue for c in self.clusters)

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        return tuple(c.multiplicity for c in self.clusters)

    def __len__(self):
        return len(self.clusters)

    def find(self, value: complex, tol: float) -> Optional[Cluster]:
        """Cluster whose eigenvalue is within tol of value, if any."""
        for c in self.clusters:
            if abs(c.eigenvalue - value) < tol:
                return c
        return None

    def reconstruct(self) -> np.ndarray:
        return sum(c.eigenvalue * c.projector for c in self.clusters)


def _cluster_labels(values: np.ndarray, threshold: float) -> np.ndarray:
    """Single-link clustering of points on the unit circle by chordal distance."""
    if len(values) == 1:
        return np.array([1])
    points = np.column_stack([values.real, values.imag])
    tree = linkage(points, method="single")
    return fcluster(tree, t=threshold, criterion="distance")


def eig_unitary(M, tol: ToleranceContext = None) -> SpectrumData:
    """
    Clustered eigendecomposition of a unitary matrix.

    A unitary matrix is normal, so its complex Schur form is diagonal up to
    rounding and the Schur vectors are orthonormal eigenvectors.

    Raises:
        NotUnitaryError: if ‖M*M − I‖_F ≥ eps_unitary
        EigenDecompositionError: if Σ λ_i Π_i misses M by eps_eig or more
    """
    tol = tol or ToleranceContext()
    M = as_matrix(M)
    if M.shape[0] != M.shape[1]:
        raise ShapeError(f"eigendecomposition needs a square matrix, got {M.shape}")
    residual = unitarity_residual(M)
    if residual >= tol.eps_unitary:
        raise NotUnitaryError(residual)

    T, Z = scipy.linalg.schur(M, output="complex")
    values = np.diag(T).copy()
    labels = _cluster_labels(values, tol.eps_eig)

    clusters = []
    for label in np.unique(labels):
        idx = np.flatnonzero(labels == label)
        vecs = Z[:, idx]
        center = values[idx].mean()
        center /= abs(center)
        clusters.append(Cluster(
            eigenvalue=complex(center),
            multiplicity=len(idx),
            projector=vecs @ vecs.conj().T,
        ))
    clusters.sort(key=lambda c: np.angle(c.eigenvalue))
    spectrum = SpectrumData(tuple(clusters))

    error = frobenius(spectrum.reconstruct() - M)
    if error >= tol.eps_eig:
        raise EigenDecompositionError(error)
    logger.debug("eig_unitary: %d clusters, reconstruction residual %.2e", len(clusters), error)
    return spectrum


def projection_residual(P) -> float:
    """‖P − P*‖_F + ‖P² − P‖_F."""
    P = as_matrix(P)
    return hermiticity_residual(P) + frobenius(P @ P - P)


def is_projection(P, tol: ToleranceContext = None) -> bool:
    tol = tol or ToleranceContext()
    return projection_residual(P) < tol.eps_eig


def wedge(P, Q, tol: ToleranceContext = None) -> np.ndarray:
    """
    Orthogonal projection onto range(P) ∩ range(Q).

    Computed as the eigenvalue-1 eigenspace of the positive contraction PQP.

    Raises:
        NotProjectionError: if P or Q is not a Hermitian idempotent within eps_eig
    """
    tol = tol or ToleranceContext()
    P, Q = as_matrix(P), as_matrix(Q)
    if P.shape != Q.shape:
        raise ShapeError(f"projections of different sizes: {P.shape} vs {Q.shape}")
    for X in (P, Q):
        residual = projection_residual(X)
        if residual >= tol.eps_eig:
            raise NotProjectionError(residual)

    PQP = P @ Q @ P
    w, V = scipy.linalg.eigh((PQP + PQP.conj().T) / 2)
    top = V[:, w > 1 - tol.eps_eig]
    return top @ top.conj().T


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random n×n unitary drawn from the given generator."""
    if n == 1:
        return np.exp(2j * np.pi * rng.random()) * np.ones((1, 1), dtype=np.complex128)
    return unitary_group.rvs(n, random_state=rng)


def random_hermitian(n: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """Hermitian matrix with independent Gaussian entries."""
    X = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return scale * (X + X.conj().T) / 2
