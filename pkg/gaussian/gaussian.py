"""
Gaussian R-matrices.

For d ≥ 2 let ξ = e^{2πi/d} (d odd) or e^{iπ/d} (d even) and define U on
C^d⊗C^d by U(e_k⊗e_l) = ξ^{l−k} e_{k+1}⊗e_{l+1}, indices mod d. The Gaussian
R-matrix is G_d = (1/√d)·Σ_k ξ^{k²} U^k. Roots of unity are evaluated from
exact rational multiples of π.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

import numpy as np

from config import ToleranceContext, config
from rmatrix import RMatrix, validate, rescale, boxtimes, identity_rmatrix

logger = logging.getLogger(__name__)


class GaussianDimensionError(ValueError):
    """Raised for a Gaussian dimension d < 2 or an index outside 0..d−1."""


def root_of_unity(turns: Fraction) -> complex:
    """e^{iπ·turns}, with turns reduced mod 2 before evaluation."""
    t = Fraction(turns) % 2
    if t == 0:
        return 1 + 0j
    if t == 1:
        return -1 + 0j
    if t == Fraction(1, 2):
        return 1j
    if t == Fraction(3, 2):
        return -1j
    angle = np.pi * t.numerator / t.denominator
    return complex(np.cos(angle), np.sin(angle))


def _xi_angle(d: int) -> Fraction:
    return Fraction(2, d) if d % 2 else Fraction(1, d)


def _require_dimension(d: int):
    if d < 2:
        raise GaussianDimensionError(f"Gaussian R-matrices need d >= 2, got d={d}")


def xi(d: int) -> complex:
    _require_dimension(d)
    return root_of_unity(_xi_angle(d))


def U(d: int) -> np.ndarray:
    """The shift-and-phase unitary U on C^d⊗C^d."""
    _require_dimension(d)
    a = _xi_angle(d)
    M = np.zeros((d * d, d * d), dtype=np.complex128)
    for k in range(d):
        for l in range(d):
            M[((k + 1) % d) * d + (l + 1) % d, k * d + l] = root_of_unity(a * (l - k))
    return M


def gaussian_eigenvalue(d: int, l: int) -> complex:
    """Closed form of the eigenvalue μ_l of G_d on the l-th spectral subspace of U."""
    _require_dimension(d)
    if d % 2 == 0:
        return root_of_unity(Fraction(1, 4) - Fraction(l * l, d))
    phase = root_of_unity(Fraction(1, 4) - Fraction(l * l, 2 * d))
    return phase * (1 + root_of_unity(-Fraction(d + 2 * l, 2))) / np.sqrt(2)


def gauss_sum(d: int, l: int) -> complex:
    """(1/√d)·Σ_k ξ^{k²} e^{2πilk/d}."""
    _require_dimension(d)
    a = _xi_angle(d)
    total = sum(root_of_unity(a * k * k + Fraction(2 * l * k, d)) for k in range(d))
    return complex(total / np.sqrt(d))


def u_spectral_projection(d: int, l: int) -> np.ndarray:
    """
    P_l = (1/d)·Σ_k e^{−2πikl/d} U^k, the projection onto U = e^{2πil/d}.

    Raises:
        GaussianDimensionError: if l is outside 0..d−1
    """
    _require_dimension(d)
    if not 0 <= l < d:
        raise GaussianDimensionError(f"projection index l={l} outside 0..{d - 1}")
    u = U(d)
    P = np.zeros_like(u)
    power = np.eye(d * d, dtype=np.complex128)
    for k in range(d):
        P += root_of_unity(-Fraction(2 * k * l, d)) * power
        power = power @ u
    return P / d


def gaussian_matrix(d: int) -> np.ndarray:
    """The unvalidated matrix G_d."""
    _require_dimension(d)
    a = _xi_angle(d)
    u = U(d)
    G = np.zeros_like(u)
    power = np.eye(d * d, dtype=np.complex128)
    for k in range(d):
        G += root_of_unity(a * k * k) * power
        power = power @ u
    return G / np.sqrt(d)


@dataclass(frozen=True, eq=False)
class GaussianData:
    d: int
    xi: complex
    U: np.ndarray
    G: RMatrix
    mu: Tuple[complex, ...]


def gaussian(d: int, tol: ToleranceContext = None) -> GaussianData:
    """
    Build G_d with its ingredients and the closed-form eigenvalues μ_0..μ_{d−1}.

    Raises:
        GaussianDimensionError: if d < 2
    """
    _require_dimension(d)
    tol = tol or config.tolerances()
    G = validate(gaussian_matrix(d), d, tol)
    mu = tuple(gaussian_eigenvalue(d, l) for l in range(d))
    logger.debug("built G_%d with %d distinct eigenvalues", d, len(G.spectrum()))
    return GaussianData(d=d, xi=xi(d), U=U(d), G=G, mu=mu)


class HeckeFamily(str, Enum):
    """Normalized Gaussian representatives of the two unconditional Hecke classes."""
    QI = "QI"
    QPI3 = "QPI3"


# (base dimension, unimodular normalization) per family
_FAMILY_BASE = {
    HeckeFamily.QI: (2, root_of_unity(Fraction(3, 4))),   # −e^{−iπ/4}
    HeckeFamily.QPI3: (3, 1j),
}


def hecke_gaussian(family: HeckeFamily, m: int, tol: ToleranceContext = None) -> RMatrix:
    """
    c·G_k ⊠ 1_m with spectrum {−1, q}.

    QI gives the class [i, 1/2, 2m], QPI3 the class [e^{iπ/3}, 1/3, 3m].
    """
    if m < 1:
        raise GaussianDimensionError(f"multiplicity m must be at least 1, got {m}")
    family = HeckeFamily(family)
    k, c = _FAMILY_BASE[family]
    R = rescale(gaussian(k, tol).G, c)
    if m == 1:
        return R
    return boxtimes(R, identity_rmatrix(m, R.tol))
