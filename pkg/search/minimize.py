"""
Multi-start descent for R-matrices in a target class [q, η, d].

Each restart starts from a Haar-random frame W and descends in the chart
K ↦ W·exp(iK): a gradient step in K is taken with a Barzilai-Borwein trial
length and Armijo backtracking, then absorbed into W. Restarts draw from
independent streams numpy.random.default_rng([seed, index]) and run on worker
threads; the result does not depend on the schedule.
"""

import asyncio
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from config import config
from hecke import ClassLabel, admissible, classify_hecke, format_label
from rmatrix import validate
from tensorlinalg import random_unitary
from .objective import GRADIENTS, expi, frame_value, rmatrix_from_frame

logger = logging.getLogger(__name__)

ARMIJO = 1e-4
MIN_STEP = 1e-8
MAX_HALVINGS = 40


class InadmissibleTargetError(ValueError):
    """Raised when a search target fails the admissibility gate."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"inadmissible target: {reason}")


@dataclass(frozen=True)
class SearchConfig:
    target: ClassLabel
    restarts: int = 20
    max_iters: int = 3000
    step_init: float = 1.0
    tol_found: float = 1e-10
    seed: int = 42
    size_cap: int = 10_000
    workers: int = 1
    gradient: str = "analytic"
    progress: bool = False

    def __post_init__(self):
        if self.restarts < 1 or self.max_iters < 1:
            raise ValueError("restarts and max_iters must be at least 1")
        if not self.tol_found > 0 or not self.step_init > 0:
            raise ValueError("tol_found and step_init must be positive")
        if self.gradient not in GRADIENTS:
            raise ValueError(f"unknown gradient {self.gradient!r}; choose from {sorted(GRADIENTS)}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")

    @classmethod
    def from_config(cls, target: ClassLabel, **overrides) -> "SearchConfig":
        """Defaults from the environment-backed configuration."""
        defaults = config.search_defaults()
        values = dict(
            restarts=defaults.restarts,
            max_iters=defaults.max_iters,
            step_init=defaults.step_init,
            tol_found=defaults.tol_found,
            seed=defaults.seed,
            workers=defaults.workers,
            size_cap=config.frs_size_cap,
        )
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(target=target, **values)


@dataclass(frozen=True)
class RestartRecord:
    seed_index: int
    final_residual: float
    iterations: int


@dataclass(frozen=True, eq=False)
class SearchResult:
    target: ClassLabel
    best_residual: float
    best_matrix: np.ndarray
    converged: bool
    restart_log: Tuple[RestartRecord, ...] = field(default_factory=tuple)
    best_index: Optional[int] = None
    label: Optional[ClassLabel] = None


def _descend(frame: np.ndarray, q: complex, r: int, d: int, cfg: SearchConfig) -> Tuple[np.ndarray, float, int]:
    """Run one restart from the given frame; returns (frame, residual, iterations)."""
    gradient = GRADIENTS[cfg.gradient]
    W = frame
    value, G = gradient(W, q, r, d)
    prev_step = prev_grad = None
    iteration = 0
    for iteration in range(1, cfg.max_iters + 1):
        if np.sqrt(value) < cfg.tol_found:
            break
        g2 = float(np.real(np.vdot(G, G)))
        if g2 == 0:
            break

        t = cfg.step_init
        if prev_step is not None:
            y = G - prev_grad
            sy = float(np.real(np.vdot(prev_step, y)))
            if sy > 0:
                t = float(np.clip(np.real(np.vdot(prev_step, prev_step)) / sy, MIN_STEP, cfg.step_init))

        for _ in range(MAX_HALVINGS):
            trial = W @ expi(-t * G)
            trial_value = frame_value(trial, q, r, d)
            if trial_value <= value - ARMIJO * t * g2:
                break
            t /= 2
        else:
            logger.debug("line search stalled at residual %.3e", np.sqrt(value))
            break

        prev_step, prev_grad = -t * G, G
        W = trial
        value, G = gradient(W, q, r, d)
    return W, float(np.sqrt(value)), iteration


def run_restart(index: int, q: complex, r: int, d: int, cfg: SearchConfig) -> Tuple[RestartRecord, np.ndarray]:
    rng = np.random.default_rng([cfg.seed, index])
    W0 = random_unitary(d * d, rng)
    W, residual, iterations = _descend(W0, q, r, d, cfg)
    logger.info("restart %d finished: residual %.3e after %d iterations", index, residual, iterations)
    return RestartRecord(index, residual, iterations), rmatrix_from_frame(W, q, r)


async def _run_all(q: complex, r: int, d: int, cfg: SearchConfig):
    limit = asyncio.Semaphore(cfg.workers)
    progress = tqdm(total=cfg.restarts, desc="restarts", unit="restart", disable=not cfg.progress)

    async def one(index: int):
        async with limit:
            outcome = await asyncio.to_thread(run_restart, index, q, r, d, cfg)
        progress.update(1)
        return outcome

    try:
        return await asyncio.gather(*(one(i) for i in range(cfg.restarts)))
    finally:
        progress.close()


def minimize(cfg: SearchConfig) -> SearchResult:
    """
    Search for an R-matrix in cfg.target.

    Raises:
        InadmissibleTargetError: if the target fails the admissibility gate
    """
    verdict = admissible(cfg.target)
    if not verdict:
        raise InadmissibleTargetError(f"{verdict.gate} gate: {verdict.reason}")

    target = cfg.target
    d = target.d
    if d ** 3 > cfg.size_cap:
        raise ValueError(f"V^(x)3 has size {d ** 3}, above the size cap {cfg.size_cap}")
    r = int(target.eta * d * d)
    logger.info("searching %s with %d restarts", format_label(target), cfg.restarts)

    outcomes = asyncio.run(_run_all(target.q, r, d, cfg))
    outcomes.sort(key=lambda o: o[0].seed_index)
    log = tuple(record for record, _ in outcomes)
    best_index = min(range(len(outcomes)), key=lambda i: (log[i].final_residual, log[i].seed_index))
    best_record, best_matrix = outcomes[best_index]

    converged = False
    label = None
    if best_record.final_residual < cfg.tol_found:
        try:
            R = validate(best_matrix, d)
            label = classify_hecke(R)
            converged = label.same_class(target)
        except ValueError as e:
            logger.warning("best candidate failed validation: %s", e)
    if not converged:
        logger.warning("search for %s did not converge; best residual %.3e",
                       format_label(target), best_record.final_residual)

    return SearchResult(
        target=target,
        best_residual=best_record.final_residual,
        best_matrix=best_matrix,
        converged=converged,
        restart_log=log,
        best_index=best_record.seed_index,
        label=label,
    )
