"""
Tensor-power linear algebra for R-matrices.

Matrices on V^{⊗n} are dense complex128 numpy arrays in the row-major basis
e_{i_1}⊗…⊗e_{i_n} ↦ ((i_1·d + i_2)·d + …)·d + i_n, matching numpy.kron.
"""

import numpy as np


class ShapeError(ValueError):
    """Raised when a matrix does not have the size a tensor power requires."""


def as_matrix(A) -> np.ndarray:
    """Coerce to a finite complex128 2-d array."""
    M = np.asarray(A, dtype=np.complex128)
    if M.ndim != 2:
        raise ShapeError(f"expected a 2-d matrix, got an array of shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    return M


def tensor_power_order(size: int, d: int) -> int:
    """
    Return n with d**n == size.

    Raises:
        ShapeError: if size is not a power of d
    """
    if d < 1:
        raise ShapeError(f"base dimension must be positive, got {d}")
    if d == 1:
        if size != 1:
            raise ShapeError(f"size {size} is not a power of d=1")
        return 1
    n, power = 0, 1
    while power < size:
        power *= d
        n += 1
    if power != size or n == 0:
        raise ShapeError(f"size {size} is not a positive power of d={d}")
    return n


def _require_square(A: np.ndarray, size: int):
    if A.shape != (size, size):
        raise ShapeError(f"expected a {size}x{size} matrix, got {A.shape[0]}x{A.shape[1]}")


def kron(A, B) -> np.ndarray:
    """Kronecker product, (A⊗B)[i·rB + k, j·cB + l] = A[i, j]·B[k, l]."""
    return np.kron(as_matrix(A), as_matrix(B))


def normalized_trace(A, d: int, n: int) -> complex:
    """Tr(A)/d^n for A on V^{⊗n}."""
    A = as_matrix(A)
    _require_square(A, d ** n)
    return complex(np.trace(A) / d ** n)


def partial_trace_first(A, d: int) -> np.ndarray:
    """
    Normalized partial trace over the first tensor factor.

    φ(A)[J, L] = (1/d)·Σ_i A[(i,J), (i,L)]. On a single factor the result is
    the 1x1 matrix τ(A).
    """
    A = as_matrix(A)
    if A.shape[0] != A.shape[1]:
        raise ShapeError(f"partial trace needs a square matrix, got {A.shape}")
    tensor_power_order(A.shape[0], d)
    rest = A.shape[0] // d
    blocks = A.reshape(d, rest, d, rest)
    return np.einsum("ijik->jk", blocks) / d


def partial_trace_last(A, d: int) -> np.ndarray:
    """Normalized partial trace over the last tensor factor."""
    A = as_matrix(A)
    if A.shape[0] != A.shape[1]:
        raise ShapeError(f"partial trace needs a square matrix, got {A.shape}")
    tensor_power_order(A.shape[0], d)
    rest = A.shape[0] // d
    blocks = A.reshape(rest, d, rest, d)
    return np.einsum("jiki->jk", blocks) / d


def shift(X, d: int) -> np.ndarray:
    """The canonical shift X ↦ 1_d ⊗ X."""
    return np.kron(np.eye(d, dtype=np.complex128), as_matrix(X))


def amplify(R, k: int, n: int, d: int) -> np.ndarray:
    """
    R_k = 1^{⊗(k-1)} ⊗ R ⊗ 1^{⊗(n-k-1)} acting on factors k, k+1 of V^{⊗n}.

    Raises:
        ShapeError: if R is not d²×d² or k is outside 1..n-1
    """
    R = as_matrix(R)
    _require_square(R, d * d)
    if not 1 <= k <= n - 1:
        raise ShapeError(f"factor index k={k} out of range 1..{n - 1}")
    left = np.eye(d ** (k - 1), dtype=np.complex128)
    right = np.eye(d ** (n - k - 1), dtype=np.complex128)
    return np.kron(np.kron(left, R), right)


def frobenius(A) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(A, "fro"))


def unitarity_residual(M) -> float:
    """‖M*M − I‖_F."""
    M = as_matrix(M)
    if M.shape[0] != M.shape[1]:
        return float("inf")
    return frobenius(M.conj().T @ M - np.eye(M.shape[0]))


def hermiticity_residual(H) -> float:
    """‖H − H*‖_F."""
    H = as_matrix(H)
    return frobenius(H - H.conj().T)
