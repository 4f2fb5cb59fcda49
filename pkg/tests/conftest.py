"""
Shared fixtures for the test suite.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

from gaussian import HeckeFamily, gaussian, hecke_gaussian
from hecke import flip


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(scope="session")
def g2():
    return gaussian(2).G


@pytest.fixture(scope="session")
def g3():
    return gaussian(3).G


@pytest.fixture(scope="session")
def qi():
    """−e^{−iπ/4}·G₂, class [i, 1/2, 2]."""
    return hecke_gaussian(HeckeFamily.QI, 1)


@pytest.fixture(scope="session")
def qpi3():
    """i·G₃, class [e^{iπ/3}, 1/3, 3]."""
    return hecke_gaussian(HeckeFamily.QPI3, 1)


@pytest.fixture(scope="session")
def qpi3_flip(qpi3):
    """flip(i·G₃), class [e^{iπ/3}, 2/3, 3]."""
    return flip(qpi3)
