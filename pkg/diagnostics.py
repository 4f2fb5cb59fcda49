#!/usr/bin/env python3
"""
Diagnostic script for the Yang-Baxter toolkit.

This script checks the environment, the configuration and a handful of fast
numerical self-checks.
"""

import sys
import importlib
from fractions import Fraction
from pathlib import Path

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent))

from config import config


def check_package(import_name: str) -> bool:
    """Check if a Python package can be imported."""
    try:
        importlib.import_module(import_name)
        return True
    except ImportError:
        return False


def self_checks():
    """Fast numerical checks; yields (name, passed, detail)."""
    import numpy as np
    from gaussian import gaussian
    from hecke import eta_wenzl
    from tensorlinalg import partial_trace_first, frobenius

    for d in (2, 3):
        try:
            data = gaussian(d)
            yield f"G_{d} is a unitary R-matrix", True, ""
            phi = partial_trace_first(data.G.M, d)
            defect = frobenius(phi - np.eye(d) / np.sqrt(d))
            yield f"φ(G_{d}) = 1/√{d}", defect < 1e-12, f"defect {defect:.2e}"
        except ValueError as e:
            yield f"G_{d} is a unitary R-matrix", False, str(e)

    params = eta_wenzl(6, 2)
    yield "η_(6,2) = 1/3", params.eta_exact == Fraction(1, 3), f"{params.eta_lk:.15f}"


def main():
    """Run system diagnostics."""

    print("=" * 60)
    print("YANG-BAXTER TOOLKIT DIAGNOSTICS")
    print("=" * 60)

    # 1. Check Python version
    print("\n1. Python Environment")
    print("-" * 40)
    python_version = sys.version_info
    python_ok = python_version >= (3, 9)
    print(f"Python Version: {python_version.major}.{python_version.minor}.{python_version.micro} "
          f"{'✓' if python_ok else '✗ (requires 3.9+)'}")

    # 2. Check Python packages
    print("\n2. Python Dependencies")
    print("-" * 40)
    required_packages = [
        ("numpy", "numpy"),
        ("scipy", "scipy"),
        ("dotenv", "python-dotenv"),
        ("tqdm", "tqdm"),
        ("pytest", "pytest"),
        ("hypothesis", "hypothesis"),
    ]
    missing = []
    for import_name, package_name in required_packages:
        ok = check_package(import_name)
        if not ok:
            missing.append(package_name)
        print(f"{package_name}: {'✓' if ok else '✗'}")

    # 3. Check configuration
    print("\n3. Configuration")
    print("-" * 40)
    validation = config.validate()

    if validation["issues"]:
        print("Critical Issues:")
        for issue in validation["issues"]:
            print(f"  ✗ {issue}")
    else:
        print("✓ No critical issues")

    if validation["warnings"]:
        print("\nWarnings:")
        for warning in validation["warnings"]:
            print(f"  ⚠ {warning}")

    # 4. Numerical self-checks
    print("\n4. Self-checks")
    print("-" * 40)
    checks_ok = not [p for p in ("numpy", "scipy") if p in missing]
    if checks_ok:
        for name, passed, detail in self_checks():
            checks_ok = checks_ok and passed
            print(f"{name}: {'✓' if passed else '✗'} {detail}".rstrip())
    else:
        print("⚠ Skipped (numpy and scipy are required)")

    # 5. Summary
    print("\n" + "=" * 60)
    print("SUMMARY")
    print("=" * 60)

    print("\n" + config.summary())

    if missing:
        print("\nRun 'pip install -r requirements.txt' to install missing Python packages.")

    return validation["valid"] and checks_ok and not missing


if __name__ == "__main__":
    valid = main()
    sys.exit(0 if valid else 1)
