"""
Classification of unitary R-matrices of dimension 2.

Every such R-matrix is equivalent to exactly one of

    R1 = q·1
    R2 = [[p,0,0,0],[0,0,q,0],[0,q,0,0],[0,0,0,s]],  p ≠ s
    R3 = [[0,0,0,q],[0,p,0,0],[0,0,p,0],[q,0,0,0]]
    R4 = q/√2·[[1,1,0,0],[−1,1,0,0],[0,0,1,−1],[0,0,1,1]]

In R2 and R3 the parameter q is determined only up to sign, so it is stored
with arg q ∈ [0, π). Candidates are proposed from the spectrum and confirmed
by comparing truncated character fingerprints.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np

from braid import CharacterFingerprint, character_fingerprint, fingerprint_distance
from config import ToleranceContext, config
from hecke import opposite_eigenvalues
from rmatrix import RMatrix, validate

logger = logging.getLogger(__name__)

PARAM_TOL = 1e-9
_EIGHTH = np.exp(1j * np.pi / 4)


class CanonicalFormError(ValueError):
    """Raised when canonical-form parameters violate their constraints."""


class NoCandidateMatchedError(ValueError):
    """Raised when no canonical form reproduces the character of the input."""

    def __init__(self, fingerprint: CharacterFingerprint, tried: List["CanonicalForm2D"]):
        self.fingerprint = fingerprint
        self.tried = tried
        head = ", ".join(f"{w}: {v:.6g}" for w, v in list(fingerprint.as_dict().items())[:8])
        super().__init__(
            f"no canonical form matched ({len(tried)} candidates tried); "
            f"{fingerprint.label} begins {head}"
        )


class Family(str, Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"


def _unimodular(z: complex, name: str) -> complex:
    z = complex(z)
    if abs(abs(z) - 1) >= PARAM_TOL:
        raise CanonicalFormError(f"parameter {name}={z!r} is not unimodular")
    return z


def _sign_normalized(q: complex) -> complex:
    """q or −q, whichever has argument in [0, π)."""
    angle = np.angle(q)
    if angle < -PARAM_TOL or abs(angle - np.pi) < PARAM_TOL:
        return -q
    return q


def _close(a: complex, b: complex) -> bool:
    return abs(a - b) < PARAM_TOL


@dataclass(frozen=True, eq=False)
class CanonicalForm2D:
    """A family with its canonical parameters; p and s are used by R2 and R3 only."""
    family: Family
    q: complex
    p: Optional[complex] = None
    s: Optional[complex] = None

    def __post_init__(self):
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        q = _unimodular(self.q, "q")
        p, s = self.p, self.s
        if family in (Family.R2, Family.R3):
            q = _sign_normalized(q)
            if p is None:
                raise CanonicalFormError(f"{family.value} needs the parameter p")
            p = _unimodular(p, "p")
        if family == Family.R2:
            if s is None:
                raise CanonicalFormError("R2 needs the parameter s")
            s = _unimodular(s, "s")
            if _close(p, s):
                raise CanonicalFormError("R2 requires p != s; for p = s the matrix is equivalent to R3")
            # {p, s} is unordered: store sorted by angle
            if np.angle(s) < np.angle(p):
                p, s = s, p
        elif s is not None:
            raise CanonicalFormError(f"{family.value} takes no parameter s")
        if family in (Family.R1, Family.R4) and p is not None:
            raise CanonicalFormError(f"{family.value} takes no parameter p")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "s", s)

    def __eq__(self, other):
        if not isinstance(other, CanonicalForm2D):
            return NotImplemented
        if self.family != other.family or not _close(self.q, other.q):
            return False
        for a, b in ((self.p, other.p), (self.s, other.s)):
            if (a is None) != (b is None) or (a is not None and not _close(a, b)):
                return False
        return True

    def __hash__(self):
        return hash(self.family)

    def params(self) -> dict:
        out = {"q": self.q}
        if self.p is not None:
            out["p"] = self.p
        if self.s is not None:
            out["s"] = self.s
        return out

    def __str__(self):
        parts = ", ".join(f"{k}={v.real:+.6f}{v.imag:+.6f}i" for k, v in self.params().items())
        return f"{self.family.value}({parts})"


def canonical_matrix(form: CanonicalForm2D) -> np.ndarray:
    q, p, s = form.q, form.p, form.s
    if form.family == Family.R1:
        return q * np.eye(4, dtype=np.complex128)
    M = np.zeros((4, 4), dtype=np.complex128)
    if form.family == Family.R2:
        M[0, 0], M[1, 2], M[2, 1], M[3, 3] = p, q, q, s
    elif form.family == Family.R3:
        M[0, 3], M[1, 1], M[2, 2], M[3, 0] = q, p, p, q
    else:
        block = np.array([[1, 1], [-1, 1]], dtype=np.complex128)
        M[:2, :2] = block
        M[2:, 2:] = block.T
        M *= q / np.sqrt(2)
    return M


def build_canonical(form: CanonicalForm2D, tol: ToleranceContext = None) -> RMatrix:
    """The validated 4×4 R-matrix of a canonical form."""
    return validate(canonical_matrix(form), 2, tol)


def canonical_spectrum(form: CanonicalForm2D) -> Tuple[complex, ...]:
    """The four eigenvalues of the canonical matrix, with multiplicity."""
    q = form.q
    if form.family == Family.R1:
        return (q,) * 4
    if form.family == Family.R2:
        return (form.p, form.s, q, -q)
    if form.family == Family.R3:
        return (form.p, form.p, q, -q)
    return (q * _EIGHTH, q * _EIGHTH, q / _EIGHTH, q / _EIGHTH)


def _unit(rng: np.random.Generator) -> complex:
    return complex(np.exp(2j * np.pi * rng.random()))


def random_canonical_form(rng: np.random.Generator, family: Family) -> CanonicalForm2D:
    """Uniform parameters on the circle; R2 redraws s until it differs from p."""
    family = Family(family)
    q = _unit(rng)
    if family == Family.R2:
        p = _unit(rng)
        s = _unit(rng)
        while abs(p - s) < 1e-3:
            s = _unit(rng)
        return CanonicalForm2D(family, q, p, s)
    if family == Family.R3:
        return CanonicalForm2D(family, q, _unit(rng))
    return CanonicalForm2D(family, q)


def _candidates(R: RMatrix) -> List[CanonicalForm2D]:
    spectrum = R.spectrum()
    eps = R.tol.eps_eig
    if len(spectrum) == 1:
        return [CanonicalForm2D(Family.R1, spectrum.eigenvalues[0])]

    found: List[CanonicalForm2D] = []
    if spectrum.multiplicities == (2, 2):
        a, b = spectrum.eigenvalues
        for hi, lo in ((a, b), (b, a)):
            if abs(hi / lo - 1j) < eps:
                found.append(CanonicalForm2D(Family.R4, hi / _EIGHTH))

    values = [c.eigenvalue for c in spectrum.clusters for _ in range(c.multiplicity)]
    for i, lam in enumerate(values):
        for j in range(len(values)):
            if j == i or abs(values[j] + lam) >= eps:
                continue
            rest = [v for k, v in enumerate(values) if k not in (i, j)]
            try:
                if abs(rest[0] - rest[1]) < eps:
                    form = CanonicalForm2D(Family.R3, lam, (rest[0] + rest[1]) / 2)
                else:
                    form = CanonicalForm2D(Family.R2, lam, rest[0], rest[1])
            except CanonicalFormError:
                continue
            if form not in found:
                found.append(form)
    return found


def classify_dim2(R: RMatrix, max_length: int = None, strands: int = None) -> CanonicalForm2D:
    """
    The canonical form equivalent to a dimension-2 R-matrix.

    Spectral shape proposes candidates; a candidate is accepted when its
    character agrees with that of R on all freely reduced words of length
    ≤ max_length over B_strands.

    Raises:
        CanonicalFormError: if R does not have dimension 2
        NoCandidateMatchedError: if no candidate reproduces the character
    """
    if R.d != 2:
        raise CanonicalFormError(f"classify_dim2 needs dimension 2, got d={R.d}")
    max_length = config.fingerprint_length if max_length is None else max_length
    strands = strands or config.fingerprint_strands

    target = character_fingerprint(R, max_length, strands)
    candidates = _candidates(R)
    for form in candidates:
        try:
            S = build_canonical(form, R.tol)
        except ValueError:
            continue
        distance = fingerprint_distance(target, character_fingerprint(S, max_length, strands))
        logger.debug("candidate %s: fingerprint distance %.3e", form, distance)
        if distance < R.tol.eps_eq:
            logger.info("dimension-2 R-matrix classified as %s", form)
            return form
    raise NoCandidateMatchedError(target, candidates)


@dataclass(frozen=True)
class CertificateCheck:
    family: Optional[Family]
    claim: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class Dim2Certificate:
    """Machine-checked argument that no dimension-2 R-matrix has class [e^{iπ/3}, 1/2, 2]."""
    checks: Tuple[CertificateCheck, ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> str:
        return "empty" if all(c.passed for c in self.checks) else "inconclusive"


_PI3 = np.exp(1j * np.pi / 3)


def _reaches_pi3(R: RMatrix) -> bool:
    """Whether some unimodular rescale of R has spectrum {−1, e^{±iπ/3}}."""
    spectrum = R.spectrum()
    if len(spectrum) != 2:
        return False
    a, b = spectrum.eigenvalues
    return any(
        abs(-x / y - target) < R.tol.eps_eig
        for x, y in ((a, b), (b, a))
        for target in (_PI3, _PI3.conjugate())
    )


def no_hecke_pi3_dim2(rng: np.random.Generator = None, draws: int = 20) -> Dim2Certificate:
    """
    Check family by family that spectrum {−1, e^{iπ/3}} is out of reach in dimension 2.

    R1 has one eigenvalue, R2 and R3 contain an opposite pair (so a
    two-point spectrum has eigenvalue ratio −1), and the eigenvalue ratio of
    R4 is ±i rather than −e^{±iπ/3}.
    """
    rng = rng or np.random.default_rng(config.search_seed)
    checks = []

    forms = {family: [random_canonical_form(rng, family) for _ in range(draws)] for family in Family}

    single = all(len(build_canonical(f).spectrum()) == 1 for f in forms[Family.R1])
    checks.append(CertificateCheck(Family.R1, "single eigenvalue", single, f"{draws} draws"))

    for family in (Family.R2, Family.R3):
        opposite = all(opposite_eigenvalues(build_canonical(f)) for f in forms[family])
        checks.append(CertificateCheck(family, "contains an opposite pair ±λ", opposite, f"{draws} draws"))

    ratios = []
    for f in forms[Family.R4]:
        a, b = build_canonical(f).spectrum().eigenvalues
        ratios.append(a / b)
    ratio_ok = all(min(abs(r - 1j), abs(r + 1j)) < 1e-9 for r in ratios)
    checks.append(CertificateCheck(Family.R4, "eigenvalue ratio is ±i, not −e^{±iπ/3}", ratio_ok, f"{draws} draws"))

    reachable = [str(f) for fs in forms.values() for f in fs if _reaches_pi3(build_canonical(f))]
    checks.append(CertificateCheck(
        None, "no sampled canonical form rescales to spectrum {-1, e^{iπ/3}}",
        not reachable, ", ".join(reachable) or f"{draws * len(Family)} forms checked",
    ))
    return Dim2Certificate(tuple(checks))

