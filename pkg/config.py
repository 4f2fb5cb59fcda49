"""
Configuration management for the Yang-Baxter toolkit.

This module centralizes tolerances, search defaults and size caps, reads
optional overrides from the environment and provides validation.
"""

import os
import logging
from typing import Dict, Any, List
from dataclasses import dataclass, asdict
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


@dataclass(frozen=True)
class ToleranceContext:
    """Numerical tolerances shared by every validated computation."""
    eps_unitary: float = 1e-10
    eps_ybe: float = 1e-10
    eps_eig: float = 1e-8
    eps_eq: float = 1e-10

    def __post_init__(self):
        for name, value in asdict(self).items():
            if not value > 0:
                raise ValueError(f"tolerance {name} must be strictly positive, got {value!r}")


@dataclass(frozen=True)
class SearchDefaults:
    """Defaults for the numerical R-matrix search."""
    restarts: int = 20
    max_iters: int = 3000
    step_init: float = 1.0
    tol_found: float = 1e-10
    seed: int = 42
    workers: int = 1


class Config:
    """Central configuration management."""

    def __init__(self):
        """Initialize configuration from environment variables."""
        self.issues: List[str] = []

        # Tolerances
        defaults = ToleranceContext()
        self.eps_unitary = self._env_float("YBE_EPS_UNITARY", defaults.eps_unitary)
        self.eps_ybe = self._env_float("YBE_EPS_YBE", defaults.eps_ybe)
        self.eps_eig = self._env_float("YBE_EPS_EIG", defaults.eps_eig)
        self.eps_eq = self._env_float("YBE_EPS_EQ", defaults.eps_eq)

        # Hecke projections
        self.frs_size_cap = self._env_int("YBE_FRS_SIZE_CAP", 10_000)
        self.frs_depth = self._env_int("YBE_FRS_DEPTH", 3)

        # Character fingerprints
        self.fingerprint_length = self._env_int("YBE_FINGERPRINT_LENGTH", 6)
        self.fingerprint_strands = self._env_int("YBE_FINGERPRINT_STRANDS", 4)

        # Search
        search = SearchDefaults()
        self.search_restarts = self._env_int("YBE_SEARCH_RESTARTS", search.restarts)
        self.search_max_iters = self._env_int("YBE_SEARCH_MAX_ITERS", search.max_iters)
        self.search_step = self._env_float("YBE_SEARCH_STEP", search.step_init)
        self.search_seed = self._env_int("YBE_SEARCH_SEED", search.seed)
        self.search_workers = self._env_int("YBE_SEARCH_WORKERS", search.workers)

        # Logging
        self.log_level = os.environ.get("YBE_LOG_LEVEL", "WARNING").upper()

    def _env_float(self, name: str, default: float) -> float:
        raw = os.environ.get(name)
        if raw is None or raw == "":
            return default
        try:
            return float(raw)
        except ValueError:
            self.issues.append(f"{name} is not a number: {raw!r} (using {default})")
            return default

    def _env_int(self, name: str, default: int) -> int:
        raw = os.environ.get(name)
        if raw is None or raw == "":
            return default
        try:
            return int(raw)
        except ValueError:
            self.issues.append(f"{name} is not an integer: {raw!r} (using {default})")
            return default

    def tolerances(self) -> ToleranceContext:
        """Build the tolerance context, falling back to defaults on invalid values."""
        try:
            return ToleranceContext(
                eps_unitary=self.eps_unitary,
                eps_ybe=self.eps_ybe,
                eps_eig=self.eps_eig,
                eps_eq=self.eps_eq,
            )
        except ValueError:
            return ToleranceContext()

    def search_defaults(self) -> SearchDefaults:
        """Search defaults after environment overrides."""
        return SearchDefaults(
            restarts=max(1, self.search_restarts),
            max_iters=max(1, self.search_max_iters),
            step_init=self.search_step if self.search_step > 0 else SearchDefaults.step_init,
            seed=self.search_seed,
            workers=max(1, self.search_workers),
        )

    def validate(self) -> Dict[str, Any]:
        """
        Validate the configuration and return issues.

        Returns:
            Dictionary of validation results
        """
        issues = list(self.issues)
        warnings = []

        try:
            ToleranceContext(self.eps_unitary, self.eps_ybe, self.eps_eig, self.eps_eq)
        except ValueError as e:
            issues.append(str(e))

        if self.eps_eig < self.eps_ybe:
            warnings.append("YBE_EPS_EIG is tighter than YBE_EPS_YBE - eigenvalue clustering may split clusters")

        if self.frs_size_cap < 8:
            issues.append(f"YBE_FRS_SIZE_CAP too small: {self.frs_size_cap}")
        if self.frs_depth < 1:
            issues.append(f"YBE_FRS_DEPTH must be at least 1, got {self.frs_depth}")

        if self.fingerprint_strands < 2:
            issues.append(f"YBE_FINGERPRINT_STRANDS must be at least 2, got {self.fingerprint_strands}")
        if self.fingerprint_length < 6 or self.fingerprint_strands < 4:
            warnings.append("character fingerprint is shorter than words of length 6 over B4")

        if self.search_restarts < 1 or self.search_max_iters < 1:
            issues.append("YBE_SEARCH_RESTARTS and YBE_SEARCH_MAX_ITERS must be positive")
        if self.search_workers > (os.cpu_count() or 1):
            warnings.append(f"YBE_SEARCH_WORKERS={self.search_workers} exceeds the CPU count")

        if not isinstance(getattr(logging, self.log_level, None), int):
            warnings.append(f"YBE_LOG_LEVEL={self.log_level} is not a known level - using WARNING")

        return {
            "valid": len(issues) == 0,
            "issues": issues,
            "warnings": warnings
        }

    def configure_logging(self):
        """Configure root logging once for scripts."""
        level = getattr(logging, self.log_level, None)
        if not isinstance(level, int):
            level = logging.WARNING
        logging.basicConfig(
            level=level,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )

    def summary(self) -> str:
        """Generate a configuration summary."""
        tol = self.tolerances()
        search = self.search_defaults()
        lines = [
            "Configuration Summary",
            "=" * 40,
            f"eps_unitary: {tol.eps_unitary:g}",
            f"eps_ybe:     {tol.eps_ybe:g}",
            f"eps_eig:     {tol.eps_eig:g}",
            f"eps_eq:      {tol.eps_eq:g}",
            "",
            f"FRS size cap: {self.frs_size_cap}",
            f"FRS depth:    {self.frs_depth}",
            f"Fingerprint:  words of length <= {self.fingerprint_length} over B{self.fingerprint_strands}",
            "",
            "Search defaults:",
            f"  restarts={search.restarts} max_iters={search.max_iters} "
            f"step_init={search.step_init:g} seed={search.seed} workers={search.workers}",
            "",
            f"Log level: {self.log_level}",
        ]
        return "\n".join(lines)


# Singleton instance
config = Config()
