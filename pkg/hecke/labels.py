"""
Class labels [q, η, d] of Hecke R-matrices and the admissibility gate.

Two R-matrices with spectrum {−1, q} are equivalent iff they have the same
label; only eight families of labels are realized by unitary solutions.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from rmatrix import RMatrix
from .split import normalize_to_hecke

logger = logging.getLogger(__name__)

Q_TOL = 1e-9

# exact τ(e_1) values of the Wenzl table that survive the rationality gate
ALLOWED_ETAS = {
    4: (Fraction(1, 2),),
    6: (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)),
}


class InvolutiveError(ValueError):
    """Raised for q = ±1, which has no class label."""


class InconsistentTraceError(ValueError):
    """Raised when the rank-based and trace-based values of η disagree."""

    def __init__(self, rank_eta: Fraction, trace_eta: complex):
        self.rank_eta = rank_eta
        self.trace_eta = trace_eta
        super().__init__(f"projector rank gives eta={rank_eta}, trace formula gives {trace_eta:.12g}")


def _as_fraction(eta: Union[Fraction, int, str]) -> Fraction:
    if isinstance(eta, float):
        raise TypeError(f"eta must be an exact rational, got float {eta!r}")
    return Fraction(eta)


@dataclass(frozen=True, eq=False)
class ClassLabel:
    """Label [q, η, d]; q is compared to within 1e-9, η and d exactly."""
    q: complex
    eta: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "q", complex(self.q))
        object.__setattr__(self, "eta", _as_fraction(self.eta))
        if abs(abs(self.q) - 1) >= Q_TOL:
            raise ValueError(f"q must be unimodular, got {self.q!r}")
        if self.d < 1:
            raise ValueError(f"d must be positive, got {self.d}")

    def __eq__(self, other):
        if not isinstance(other, ClassLabel):
            return NotImplemented
        return self.d == other.d and self.eta == other.eta and abs(self.q - other.q) < Q_TOL

    def __hash__(self):
        return hash((self.eta, self.d))

    def canonical(self) -> "ClassLabel":
        """Representative with Im q ≥ 0; (q, η) and (q̄, 1−η) label the same R up to scale."""
        if self.q.imag < -Q_TOL:
            return ClassLabel(self.q.conjugate(), 1 - self.eta, self.d)
        return self

    def same_class(self, other: "ClassLabel") -> bool:
        return self.canonical() == other.canonical()

    def flipped(self) -> "ClassLabel":
        """[q, η, d]' = [q, 1−η, d]."""
        return ClassLabel(self.q, 1 - self.eta, self.d)

    def adjoint(self) -> "ClassLabel":
        """[q, η, d]* = [q̄, η, d]."""
        return ClassLabel(self.q.conjugate(), self.eta, self.d)

    def __str__(self):
        return format_label(self)


def label_flip(label: ClassLabel) -> ClassLabel:
    return label.flipped()


def label_adjoint(label: ClassLabel) -> ClassLabel:
    return label.adjoint()


def _angle_fraction(q: complex, max_denominator: int = 48) -> Optional[Fraction]:
    """arg(q)/π as a small fraction in (−1, 1], if q is such a root of unity."""
    turns = Fraction(float(np.angle(q) / np.pi)).limit_denominator(max_denominator)
    if abs(q - np.exp(1j * np.pi * float(turns))) < Q_TOL:
        return turns
    return None


def format_q(q: complex) -> str:
    turns = _angle_fraction(q)
    if turns is None:
        return f"exp(i*{np.angle(q):.12g})"
    if turns == 0:
        return "1"
    sign = "-" if turns < 0 else ""
    num, den = abs(turns.numerator), turns.denominator
    head = "i*pi" if num == 1 else f"{num}*i*pi"
    tail = "" if den == 1 else f"/{den}"
    return f"exp({sign}{head}{tail})"


def format_label(label: ClassLabel) -> str:
    """e.g. "[q=exp(i*pi/3), eta=1/3, d=3]"."""
    return f"[q={format_q(label.q)}, eta={label.eta}, d={label.d}]"


def root_order(q: complex) -> Optional[int]:
    """ℓ ≥ 4 with q = e^{±2πi/ℓ} to within 1e-9, else None."""
    theta = abs(np.angle(q))
    if theta < Q_TOL:
        return None
    ell = int(round(2 * np.pi / theta))
    if ell < 4:
        return None
    if abs(q - np.exp(2j * np.pi / ell)) < Q_TOL or abs(q - np.exp(-2j * np.pi / ell)) < Q_TOL:
        return ell
    return None


@dataclass(frozen=True)
class Admissibility:
    """Outcome of the admissibility gate; gate names the first failing check."""
    ok: bool
    gate: str
    reason: str

    def __bool__(self):
        return self.ok


def admissible(label: ClassLabel) -> Admissibility:
    """
    Whether [q, η, d] is one of the eight realizable families

        [±i, 1/2, 2m], [e^{±iπ/3}, 1/3, 3m], [e^{±iπ/3}, 2/3, 3m], [e^{±iπ/3}, 1/2, 2m].
    """
    q, eta, d = label.q, label.eta, label.d
    if abs(q - 1) < Q_TOL or abs(q + 1) < Q_TOL:
        return Admissibility(False, "involutive", "q = ±1 has no two-eigenvalue Hecke class")
    if not 0 < eta < 1:
        return Admissibility(False, "eta-range", f"eta={eta} is outside (0, 1)")

    ell = root_order(q)
    if ell is None:
        return Admissibility(False, "root-of-unity", "q is not exp(±2πi/ℓ) for an integer ℓ ≥ 4")
    if ell not in ALLOWED_ETAS:
        return Admissibility(
            False, "root-of-unity",
            f"q = exp(±2πi/{ell}) but cos²(π/{ell}) is irrational (rationality), only ℓ = 4, 6 survive",
        )
    if eta not in ALLOWED_ETAS[ell]:
        allowed = ", ".join(str(e) for e in ALLOWED_ETAS[ell])
        return Admissibility(False, "wenzl", f"eta={eta} is not a Wenzl value for ℓ={ell} (allowed: {allowed})")

    if eta == Fraction(1, 2) and d % 2:
        return Admissibility(False, "divisibility", f"eta=1/2 needs even dimension, got d={d}")
    if eta.denominator == 3 and d % 3:
        return Admissibility(False, "divisibility", f"eta={eta} needs a dimension divisible by 3, got d={d}")
    return Admissibility(True, "ok", f"ℓ={ell}, eta={eta}, d={d}")


def classify_hecke(R: RMatrix) -> ClassLabel:
    """
    Canonical label of a two-eigenvalue R-matrix.

    η is the exact rank ratio r/d², cross-checked against
    η = (q − τ(R'))/(1 + q) for the normalized R'.

    Raises:
        WrongSpectrumCountError: unless R has exactly two eigenvalues
        InvolutiveError: if the normalized q is ±1
        InconsistentTraceError: if the two values of η disagree beyond eps_eq
    """
    _, scaled, data = normalize_to_hecke(R)
    q = data.q
    if abs(q - 1) < R.tol.eps_eig:
        raise InvolutiveError("normalized spectrum is {-1, 1}: involutive R-matrices carry no (q, eta) label")

    trace_eta = (q - scaled.trace()) / (1 + q)
    if abs(trace_eta - float(data.eta)) >= R.tol.eps_eq:
        raise InconsistentTraceError(data.eta, trace_eta)

    label = ClassLabel(q, data.eta, R.d).canonical()
    logger.info("classified as %s", format_label(label))
    return label
