"""
Hecke structure of two-eigenvalue R-matrices: spectral split, Temperley-Lieb
criteria, Wenzl values, the projection recursion and class labels.
"""

from .split import (
    WrongSpectrumCountError,
    NoMinusOneEigenvalueError,
    HeckeData,
    TLReport,
    spectral_split,
    normalize_to_hecke,
    flip,
    hecke_residual,
    closed_form_trace,
    tl_report,
    markov_partial_trace_defect,
    opposite_eigenvalues,
)
from .wenzl import (
    WenzlRangeError,
    SizeCapExceededError,
    WenzlParams,
    FRSStep,
    alpha,
    eta_wenzl,
    wenzl_table,
    frs_sequence,
)
from .labels import (
    ALLOWED_ETAS,
    InvolutiveError,
    InconsistentTraceError,
    ClassLabel,
    Admissibility,
    label_flip,
    label_adjoint,
    format_q,
    format_label,
    root_order,
    admissible,
    classify_hecke,
)
