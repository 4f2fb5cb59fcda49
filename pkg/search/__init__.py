"""
Numerical search for R-matrices in a prescribed class [q, η, d], with
certification of candidates against the known necessary conditions.
"""

from .objective import (
    NotHermitianError,
    FD_STEP,
    diagonal_projection,
    expi,
    rmatrix_from_frame,
    frame_value,
    objective,
    analytic_gradient,
    finite_difference_gradient,
    hermitian_basis,
)
from .minimize import (
    InadmissibleTargetError,
    SearchConfig,
    RestartRecord,
    SearchResult,
    run_restart,
    minimize,
)
from .certify import (
    CertificationReport,
    certify,
    known_representatives,
    provenance,
)
