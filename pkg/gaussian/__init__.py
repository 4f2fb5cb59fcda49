"""
Gaussian R-matrices G_d and the normalized Hecke representatives built from them.
"""

from .gaussian import (
    GaussianDimensionError,
    GaussianData,
    HeckeFamily,
    root_of_unity,
    xi,
    U,
    gaussian_eigenvalue,
    gauss_sum,
    u_spectral_projection,
    gaussian_matrix,
    gaussian,
    hecke_gaussian,
)
