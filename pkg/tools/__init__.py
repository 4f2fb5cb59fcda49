"""
Shared I/O utilities for the Yang-Baxter toolkit.
"""

from .matrix_io import MatrixFile, MatrixFileError, read_matrix_file, write_matrix_file
