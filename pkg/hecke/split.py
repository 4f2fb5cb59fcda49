"""
Spectral data of two-eigenvalue R-matrices.

An R-matrix with spectrum {−1, q} decomposes as R = −P + q(1−P), where P is
the spectral projection of −1. The Hecke generators are e_k = P_k, and the
Hecke and Temperley-Lieb structure is read off from P.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np
from scipy.optimize import least_squares

from rmatrix import RMatrix, validate, rescale
from tensorlinalg import amplify, frobenius, wedge, partial_trace_first

logger = logging.getLogger(__name__)


class WrongSpectrumCountError(ValueError):
    """Raised when an R-matrix does not have exactly two eigenvalues."""

    def __init__(self, count: int):
        self.count = count
        super().__init__(f"expected exactly two distinct eigenvalues, found {count}")


class NoMinusOneEigenvalueError(ValueError):
    """Raised when −1 is not an eigenvalue of a supposedly normalized R-matrix."""


@dataclass(frozen=True, eq=False)
class HeckeData:
    """Spectral split R = −P + q(1−P)."""
    q: complex
    P: np.ndarray
    eta: Fraction
    x: complex
    r: int
    d: int

    @property
    def complement(self) -> np.ndarray:
        return np.eye(self.P.shape[0]) - self.P

    def reconstruct(self) -> np.ndarray:
        return -self.P + self.q * self.complement


def _two_clusters(R: RMatrix):
    spectrum = R.spectrum()
    if len(spectrum) != 2:
        raise WrongSpectrumCountError(len(spectrum))
    return spectrum


def spectral_split(R: RMatrix) -> HeckeData:
    """
    Split an R-matrix with spectrum {−1, q}.

    Raises:
        WrongSpectrumCountError: unless there are exactly two eigenvalue clusters
        NoMinusOneEigenvalueError: if neither cluster is −1 within eps_eig
    """
    spectrum = _two_clusters(R)
    minus = spectrum.find(-1, R.tol.eps_eig)
    if minus is None:
        raise NoMinusOneEigenvalueError(
            f"spectrum {[complex(np.round(v, 12)) for v in spectrum.eigenvalues]} does not contain -1"
        )
    other = next(c for c in spectrum.clusters if c is not minus)
    q = complex(other.eigenvalue)
    r = minus.multiplicity
    return HeckeData(
        q=q,
        P=minus.projector,
        eta=Fraction(r, R.d ** 2),
        x=q / (1 + q) ** 2,
        r=r,
        d=R.d,
    )


def normalize_to_hecke(R: RMatrix) -> Tuple[complex, RMatrix, HeckeData]:
    """
    Rescale R to spectrum {−1, q} with Im(q) ≥ 0.

    Of the two scalings sending one eigenvalue to −1, the one leaving the
    other eigenvalue in the closed upper half plane is returned.

    Raises:
        WrongSpectrumCountError: unless R has exactly two eigenvalue clusters
    """
    spectrum = _two_clusters(R)
    l1, l2 = spectrum.eigenvalues
    candidates = []
    for send, keep in ((l1, l2), (l2, l1)):
        c = -np.conj(send) / abs(send)
        candidates.append((c, c * keep))
    # prefer Im q >= 0; on a tie take the first
    c, q = max(candidates, key=lambda pair: pair[1].imag > -R.tol.eps_eig)
    if abs(c - 1) < R.tol.eps_eq:
        c = 1 + 0j
    scaled = R if c == 1 else rescale(R, c)
    data = spectral_split(scaled)
    logger.debug("normalized with scale %s: q=%s, eta=%s", c, data.q, data.eta)
    return complex(c), scaled, data


def flip(R: RMatrix) -> RMatrix:
    """R' = −(1−P) + qP, the R-matrix with swapped spectral projections."""
    data = spectral_split(R)
    return validate(-data.complement + data.q * data.P, R.d, R.tol)


def _p12(data: HeckeData) -> Tuple[np.ndarray, np.ndarray]:
    return amplify(data.P, 1, 3, data.d), amplify(data.P, 2, 3, data.d)


def hecke_residual(data: HeckeData, d: int = None) -> float:
    """‖P₁P₂P₁ − xP₁ − (P₂P₁P₂ − xP₂)‖_F on V^{⊗3}."""
    if d is not None and d != data.d:
        raise ValueError(f"HeckeData has d={data.d}, got d={d}")
    P1, P2 = _p12(data)
    x = data.x
    return frobenius(P1 @ P2 @ P1 - x * P1 - (P2 @ P1 @ P2 - x * P2))


@dataclass(frozen=True)
class TLReport:
    """The four Temperley-Lieb characterizations evaluated on one HeckeData."""
    x: complex
    tl_residual: float
    trace_gap: float
    wedge_norm: float
    sequence: Tuple[float, ...]
    geometric_fit_residual: float
    closed_form_defect: float

    def is_temperley_lieb(self, tol: float) -> bool:
        return max(self.tl_residual, self.trace_gap, self.wedge_norm, self.geometric_fit_residual) < tol


def closed_form_trace(eta: float, x: float, n: int) -> float:
    """τ((P₁P₂)ⁿ) = η(x(1−x^{n−1})/(1−x)·(η−1) + η)."""
    return eta * (x * (1 - x ** (n - 1)) / (1 - x) * (eta - 1) + eta)


def _geometric_fit(values: np.ndarray) -> float:
    """Residual norm of the least-squares fit values[n−1] ≈ a·bⁿ."""
    n = np.arange(1, len(values) + 1)
    b0 = values[1] / values[0] if abs(values[0]) > 1e-14 else 0.0
    a0 = values[0] / b0 if abs(b0) > 1e-14 else values[0]
    fit = least_squares(lambda p: p[0] * p[1] ** n - values, x0=[a0, b0], xtol=1e-15, ftol=1e-15, gtol=1e-15)
    return float(np.linalg.norm(fit.fun))


def tl_report(data: HeckeData, d: int = None, n_max: int = 4) -> TLReport:
    """
    Evaluate the Temperley-Lieb criteria: P₁P₂P₁ = xP₁, τ(P) = x, P₁∧P₂ = 0,
    and geometric growth of τ((P₁P₂)ⁿ), n = 1..n_max.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2, got {n_max}")
    if d is not None and d != data.d:
        raise ValueError(f"HeckeData has d={data.d}, got d={d}")
    P1, P2 = _p12(data)
    x = data.x
    eta = float(data.eta)
    size = P1.shape[0]

    power = np.eye(size, dtype=np.complex128)
    P1P2 = P1 @ P2
    sequence = []
    for _ in range(n_max):
        power = power @ P1P2
        sequence.append(float(np.real(np.trace(power))) / size)
    values = np.asarray(sequence)

    x_real = float(np.real(x))
    closed = np.array([closed_form_trace(eta, x_real, n) for n in range(1, n_max + 1)])

    return TLReport(
        x=x,
        tl_residual=frobenius(P1 @ P2 @ P1 - x * P1),
        trace_gap=abs(eta - x),
        wedge_norm=frobenius(wedge(P1, P2)),
        sequence=tuple(sequence),
        geometric_fit_residual=_geometric_fit(values),
        closed_form_defect=float(np.max(np.abs(values - closed))),
    )


def markov_partial_trace_defect(R: RMatrix) -> float:
    """‖φ(R) − τ(R)·1‖_F; zero exactly for Markov characters."""
    phi = partial_trace_first(R.M, R.d)
    return frobenius(phi - R.trace() * np.eye(R.d))


def opposite_eigenvalues(R: RMatrix) -> bool:
    """Whether σ(R) contains a pair λ, −λ."""
    values = R.spectrum().eigenvalues
    return any(abs(a + b) < R.tol.eps_eig for i, a in enumerate(values) for b in values[i + 1:])
