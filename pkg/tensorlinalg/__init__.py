"""
Dense complex linear algebra on tensor powers of small spaces.

Exports Kronecker products, normalized (partial) traces, amplification,
unitary eigendecomposition and projection meets.
"""

from config import ToleranceContext
from .ops import (
    ShapeError,
    as_matrix,
    tensor_power_order,
    kron,
    normalized_trace,
    partial_trace_first,
    partial_trace_last,
    shift,
    amplify,
    frobenius,
    unitarity_residual,
    hermiticity_residual,
)
from .spectrum import (
    NotUnitaryError,
    NotProjectionError,
    EigenDecompositionError,
    Cluster,
    SpectrumData,
    eig_unitary,
    projection_residual,
    is_projection,
    wedge,
    random_unitary,
    random_hermitian,
)
