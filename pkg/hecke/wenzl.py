"""
Wenzl trace values and the projection recursion for Hecke R-matrices.

For q = e^{2πi/ℓ} the admissible values of τ(e_1) are
η_{ℓ,k} = sin(π(k−1)/ℓ) / (2cos(π/ℓ) sin(πk/ℓ)), k = 1..ℓ−1. The projections
P_{n+1} = e_1 ∧ … ∧ e_n obey

    P_{n+1} = S(P_n) − α_n·S(P_n)(e_1^⊥)S(P_n),   S(X) = 1⊗X,

with α_n = 2cos(π/ℓ) sin(nπ/ℓ) / sin((n+1)π/ℓ), and P_ℓ = S(P_{ℓ−1}).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from config import config
from rmatrix import RMatrix
from tensorlinalg import amplify, frobenius, shift, wedge
from .split import spectral_split

logger = logging.getLogger(__name__)


class WenzlRangeError(ValueError):
    """Raised for (ℓ, k) or recursion depths outside the admissible range."""


class SizeCapExceededError(ValueError):
    """Raised when a tensor power would exceed the configured matrix size cap."""

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"matrix size {size} exceeds the cap {cap} (YBE_FRS_SIZE_CAP)")


@dataclass(frozen=True)
class WenzlParams:
    ell: int
    k: int
    eta_lk: float
    eta_exact: Optional[Fraction]
    alphas: Tuple[float, ...]
    closed_form_gap: float


def alpha(ell: int, n: int) -> float:
    """α_n = 2cos(π/ℓ) sin(nπ/ℓ) / sin((n+1)π/ℓ), defined for 1 ≤ n ≤ ℓ−2."""
    if not 1 <= n <= ell - 2:
        raise WenzlRangeError(f"alpha_n is defined for 1 <= n <= {ell - 2}, got n={n}")
    return 2 * np.cos(np.pi / ell) * np.sin(n * np.pi / ell) / np.sin((n + 1) * np.pi / ell)


def _eta_root_form(ell: int, k: int) -> complex:
    q = np.exp(2j * np.pi / ell)
    return (1 - q ** (1 - k)) / ((1 + q) * (1 - q ** (-k)))


def _eta_sine_form(ell: int, k: int) -> float:
    return np.sin(np.pi * (k - 1) / ell) / (2 * np.cos(np.pi / ell) * np.sin(np.pi * k / ell))


def eta_wenzl(ell: int, k: int) -> WenzlParams:
    """
    η_{ℓ,k} from both closed forms, with the α_n table for ℓ.

    Raises:
        WenzlRangeError: unless ℓ ≥ 4 and 1 ≤ k ≤ ℓ−1
    """
    if ell < 4:
        raise WenzlRangeError(f"ell must be at least 4, got {ell}")
    if not 1 <= k <= ell - 1:
        raise WenzlRangeError(f"k must lie in 1..{ell - 1}, got {k}")

    root_form = _eta_root_form(ell, k)
    sine_form = _eta_sine_form(ell, k)
    gap = abs(root_form - sine_form)
    if gap > 1e-12:
        logger.warning("closed forms of eta_(%d,%d) disagree by %.3e", ell, k, gap)

    exact = Fraction(sine_form).limit_denominator(ell * ell)
    if abs(float(exact) - sine_form) > 1e-12:
        exact = None
    return WenzlParams(
        ell=ell,
        k=k,
        eta_lk=float(sine_form),
        eta_exact=exact,
        alphas=tuple(alpha(ell, n) for n in range(1, ell - 1)),
        closed_form_gap=float(gap),
    )


def wenzl_table(ell: int) -> List[WenzlParams]:
    return [eta_wenzl(ell, k) for k in range(1, ell)]


@dataclass(frozen=True)
class FRSStep:
    """P_{n+1} on V^{⊗(n+1)}: recursion against direct wedge."""
    n: int
    strands: int
    trace_recursion: float
    trace_wedge: float
    projection_defect: float
    trace_scalar: float
    integer_defect: float


def _integer_defect(value: float) -> float:
    return abs(value - max(0, round(value)))


def frs_sequence(R: RMatrix, ell: int, n_max: int, size_cap: int = None) -> List[FRSStep]:
    """
    Build P_1, …, P_{n_max+1} by the recursion and as wedges of e_1, …, e_n.

    Raises:
        WenzlRangeError: unless ℓ ≥ 4 and 1 ≤ n_max ≤ ℓ−1
        SizeCapExceededError: if d^{n_max+1} exceeds the size cap
    """
    if ell < 4:
        raise WenzlRangeError(f"ell must be at least 4, got {ell}")
    if not 1 <= n_max <= ell - 1:
        raise WenzlRangeError(f"n_max must lie in 1..{ell - 1}, got {n_max}")
    cap = size_cap or config.frs_size_cap
    d = R.d
    if d ** (n_max + 1) > cap:
        raise SizeCapExceededError(d ** (n_max + 1), cap)

    data = spectral_split(R)
    tau_perp = 1 - float(data.eta)
    P = data.P
    Pperp = np.eye(d * d) - P

    steps = []
    current = np.eye(d, dtype=np.complex128)
    scalar = 1.0
    for n in range(0, n_max + 1):
        strands = n + 1
        if n >= 1:
            S = shift(current, d)
            if n <= ell - 2:
                a = alpha(ell, n)
                perp = amplify(Pperp, 1, strands, d)
                current = S - a * S @ perp @ S
                scalar *= 1 - a * tau_perp
            else:
                current = S

        direct = np.eye(d ** strands, dtype=np.complex128)
        for k in range(1, n + 1):
            direct = wedge(direct, amplify(P, k, strands, d), R.tol)

        size = d ** strands
        trace_recursion = float(np.real(np.trace(current))) / size
        trace_wedge = float(np.real(np.trace(direct))) / size
        steps.append(FRSStep(
            n=n,
            strands=strands,
            trace_recursion=trace_recursion,
            trace_wedge=trace_wedge,
            projection_defect=frobenius(current - direct),
            trace_scalar=scalar,
            integer_defect=_integer_defect(trace_recursion * size),
        ))
        logger.debug("FRS n=%d: tau=%.6f (wedge %.6f)", n, trace_recursion, trace_wedge)
    return steps
