"""
Canonical forms of dimension-2 unitary R-matrices and a truncated-character
decision procedure.
"""

from .canonical import (
    CanonicalFormError,
    NoCandidateMatchedError,
    Family,
    CanonicalForm2D,
    CertificateCheck,
    Dim2Certificate,
    canonical_matrix,
    build_canonical,
    canonical_spectrum,
    random_canonical_form,
    classify_dim2,
    no_hecke_pi3_dim2,
)
