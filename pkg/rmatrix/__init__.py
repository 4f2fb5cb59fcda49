"""
R-matrix value type: YBE validation, rescaling, equivalences, ⊠ products and adjoints.
"""

from tensorlinalg import NotUnitaryError
from .rmatrix import (
    RMatrix,
    BadShapeError,
    NotYangBaxterError,
    NotUnimodularError,
    ybe_residual,
    validate,
    identity_rmatrix,
    rescale,
    conjugate_uu,
    conjugate_one_u,
    boxtimes,
    adjoint,
    inverse,
)
