"""
Necessary-condition certification of candidate Hecke R-matrices.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from braid import character_fingerprint, fingerprint_distance
from config import ToleranceContext, config
from gaussian import HeckeFamily, hecke_gaussian
from hecke import (
    ClassLabel,
    FRSStep,
    TLReport,
    admissible,
    classify_hecke,
    flip,
    frs_sequence,
    hecke_residual,
    markov_partial_trace_defect,
    normalize_to_hecke,
    root_order,
    tl_report,
)
from rmatrix import RMatrix, adjoint, validate, ybe_residual
from tensorlinalg import ShapeError, as_matrix, unitarity_residual

logger = logging.getLogger(__name__)

FRS_TOL = 1e-6
PROVENANCE_LENGTH = 4
PROVENANCE_STRANDS = 3


@dataclass(frozen=True, eq=False)
class CertificationReport:
    d: int
    unitarity_residual: float
    ybe_residual: float
    eigenvalues: Tuple[complex, ...] = ()
    ranks: Tuple[int, ...] = ()
    label: Optional[ClassLabel] = None
    markov_defect: Optional[float] = None
    hecke_residual: Optional[float] = None
    tl: Optional[TLReport] = None
    frs: Tuple[FRSStep, ...] = ()
    failures: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def passes(self) -> bool:
        """Whether every necessary condition holds; Temperley-Lieb type is not required."""
        return not self.failures


def certify(M, d: int, tol: ToleranceContext = None) -> CertificationReport:
    """
    Evaluate the necessary conditions for a unitary R-matrix in some class [q, η, d].

    Never raises for a square input of the right size; failed checks are listed
    in the report instead.
    """
    tol = tol or config.tolerances()
    M = as_matrix(M)
    if M.shape != (d * d, d * d):
        raise ShapeError(f"expected a {d * d}x{d * d} matrix for d={d}, got {M.shape}")

    unit = unitarity_residual(M)
    ybe = ybe_residual(M, d)
    failures: List[str] = []
    if unit >= tol.eps_unitary:
        failures.append(f"unitarity residual {unit:.3e}")
    if ybe >= tol.eps_ybe:
        failures.append(f"YBE residual {ybe:.3e}")
    if failures:
        return CertificationReport(d=d, unitarity_residual=unit, ybe_residual=ybe, failures=tuple(failures))

    R = validate(M, d, tol)
    spectrum = R.spectrum()
    partial = dict(
        d=d,
        unitarity_residual=unit,
        ybe_residual=ybe,
        eigenvalues=spectrum.eigenvalues,
        ranks=spectrum.multiplicities,
        markov_defect=markov_partial_trace_defect(R),
    )
    if partial["markov_defect"] >= tol.eps_eq:
        failures.append(f"partial trace is not scalar: {partial['markov_defect']:.3e}")

    try:
        label = classify_hecke(R)
        _, scaled, data = normalize_to_hecke(R)
    except ValueError as e:
        failures.append(f"no class label: {e}")
        return CertificationReport(**partial, failures=tuple(failures))

    verdict = admissible(label)
    if not verdict:
        failures.append(f"label {label} fails the {verdict.gate} gate: {verdict.reason}")

    hecke = hecke_residual(data)
    if hecke >= tol.eps_ybe:
        failures.append(f"Hecke residual {hecke:.3e}")
    tl = tl_report(data)

    steps: Tuple[FRSStep, ...] = ()
    ell = root_order(data.q)
    if ell is not None:
        n_max = min(ell - 1, config.frs_depth)
        while n_max >= 1 and d ** (n_max + 1) > config.frs_size_cap:
            n_max -= 1
        if n_max >= 1:
            steps = tuple(frs_sequence(scaled, ell, n_max))
            for step in steps:
                if step.projection_defect >= FRS_TOL:
                    failures.append(f"FRS step {step.n}: recursion and wedge differ by {step.projection_defect:.3e}")
                if step.integer_defect >= FRS_TOL:
                    failures.append(f"FRS step {step.n}: d^n-scaled trace is not an integer ({step.integer_defect:.3e})")

    logger.info("certified %s: %s", label, "pass" if not failures else "; ".join(failures))
    return CertificationReport(
        **partial,
        label=label,
        hecke_residual=hecke,
        tl=tl,
        frs=steps,
        failures=tuple(failures),
    )


def known_representatives(d: int, tol: ToleranceContext = None) -> Dict[str, RMatrix]:
    """Gaussian Hecke matrices of dimension d, with their flips and adjoints."""
    reps: Dict[str, RMatrix] = {}
    for family, base in ((HeckeFamily.QI, 2), (HeckeFamily.QPI3, 3)):
        if d % base:
            continue
        R = hecke_gaussian(family, d // base, tol)
        name = f"{family.value}x1_{d // base}"
        reps[name] = R
        reps[f"flip({name})"] = flip(R)
        reps[f"adjoint({name})"] = adjoint(R)
    return reps


def provenance(M, d: int, tol: ToleranceContext = None,
               max_length: int = PROVENANCE_LENGTH, strands: int = PROVENANCE_STRANDS) -> Dict[str, float]:
    """Fingerprint distances from M to every known representative of dimension d."""
    R = validate(M, d, tol)
    target = character_fingerprint(R, max_length, strands)
    return {
        name: fingerprint_distance(target, character_fingerprint(S, max_length, strands))
        for name, S in known_representatives(d, R.tol).items()
    }
