"""
Braid group representations of an R-matrix and the character they define.

b_k acts on V^{⊗n} as R_k, b_k⁻¹ as R_k*. The character τ_R is the normalized
trace of that representation; it does not depend on the number of strands
used to evaluate it.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np
import scipy.linalg

from rmatrix import RMatrix
from tensorlinalg import (
    NotProjectionError,
    ShapeError,
    amplify,
    as_matrix,
    normalized_trace,
    projection_residual,
)
from .words import BraidWord, StrandCountError, generator_letters, shift_word

logger = logging.getLogger(__name__)

FINGERPRINT_LABEL = "character fingerprint (truncated)"


@dataclass(frozen=True)
class CharacterReport:
    value: complex
    strands_used: int
    stabilization_defect: float


def _generators(R: RMatrix, n: int) -> Dict[int, np.ndarray]:
    """ρ(b_k^{±1}) on V^{⊗n} for every letter of B_n."""
    gens = {}
    Rinv = R.M.conj().T
    for k in range(1, n):
        gens[k] = amplify(R.M, k, n, R.d)
        gens[-k] = amplify(Rinv, k, n, R.d)
    return gens


def represent(R: RMatrix, w: BraidWord, n: int) -> np.ndarray:
    """
    ρ_R^{(n)}(w), the product of amplified generators in word order.

    Raises:
        StrandCountError: if n < strands(w)
    """
    if n < w.strands:
        raise StrandCountError(f"word {w} needs {w.strands} strands, got n={n}")
    result = np.eye(R.d ** n, dtype=np.complex128)
    if not w.letters:
        return result
    gens = _generators(R, n)
    for letter in w.letters:
        result = result @ gens[letter]
    return result


def _value(R: RMatrix, w: BraidWord, n: int) -> complex:
    return normalized_trace(represent(R, w, n), R.d, n)


def character(R: RMatrix, w: BraidWord) -> CharacterReport:
    """τ_R(w) at the minimal strand count, re-evaluated on one more strand."""
    n = w.strands
    value = _value(R, w, n)
    check = _value(R, w, n + 1)
    defect = abs(value - check)
    if defect >= R.tol.eps_eq:
        logger.warning("character of %s changes with the strand count by %.3e", w, defect)
    return CharacterReport(value=value, strands_used=n, stabilization_defect=defect)


def character_value(R: RMatrix, w: BraidWord, n: int = None) -> complex:
    """τ_R(w) evaluated on n strands (default strands(w)), without the stabilization check."""
    return _value(R, w, n or w.strands)


def markov_defect(R: RMatrix, words: Sequence[BraidWord]) -> float:
    """max over x of |τ_R(b_1·s(x)) − τ_R(b_1)·τ_R(x)|."""
    b1 = BraidWord((1,))
    t1 = character_value(R, b1)
    worst = 0.0
    for x in words:
        lhs = character_value(R, b1 + shift_word(x, 1))
        worst = max(worst, abs(lhs - t1 * character_value(R, x)))
    return worst


def trace_defect(R: RMatrix, pairs: Sequence[Tuple[BraidWord, BraidWord]]) -> float:
    """max |τ_R(xy) − τ_R(yx)| over the given pairs."""
    worst = 0.0
    for x, y in pairs:
        worst = max(worst, abs(character_value(R, x + y) - character_value(R, y + x)))
    return worst


def factorization_defect(R: RMatrix, triples: Sequence[Tuple[BraidWord, BraidWord, int]]) -> float:
    """
    max |τ_R(x·s^n(y)) − τ_R(x)τ_R(y)| over (x, y, n).

    Raises:
        StrandCountError: if some x lives on more than n+1 strands
    """
    worst = 0.0
    for x, y, n in triples:
        if x.strands > n + 1:
            raise StrandCountError(f"word {x} needs {x.strands} strands, shift n={n} requires at most {n + 1}")
        lhs = character_value(R, x + shift_word(y, n))
        worst = max(worst, abs(lhs - character_value(R, x) * character_value(R, y)))
    return worst


def gram_matrix(R: RMatrix, words: Sequence[BraidWord]) -> np.ndarray:
    """G_ij = τ_R(w_i* w_j), the Gram matrix of τ_R on span{w_i}."""
    if not words:
        return np.zeros((0, 0), dtype=np.complex128)
    n = max(max(w.strands for w in words), 2)
    images = [represent(R, w, n) for w in words]
    size = R.d ** n
    G = np.empty((len(words), len(words)), dtype=np.complex128)
    for i, A in enumerate(images):
        for j, B in enumerate(images):
            G[i, j] = np.vdot(A, B) / size
    return G


def positivity_defect(R: RMatrix, words: Sequence[BraidWord]) -> float:
    """max(0, −λ_min) of the Gram matrix; zero when τ_R(x*x) ≥ 0 on the span."""
    G = gram_matrix(R, words)
    if G.size == 0:
        return 0.0
    w = scipy.linalg.eigvalsh((G + G.conj().T) / 2)
    return max(0.0, -float(w[0]))


def rationality_check(R: RMatrix, P, n: int) -> Tuple[float, float]:
    """
    d^n·τ(P) for a projection P on V^{⊗n}, with its distance to ℕ₀.

    Raises:
        NotProjectionError: if P is not a Hermitian idempotent within eps_eig
    """
    P = as_matrix(P)
    if P.shape != (R.d ** n, R.d ** n):
        raise ShapeError(f"expected a {R.d ** n}x{R.d ** n} projection on V^{{⊗{n}}}, got {P.shape}")
    residual = projection_residual(P)
    if residual >= R.tol.eps_eig:
        raise NotProjectionError(residual)
    value = float(np.real(np.trace(P)))
    nearest = max(0, round(value))
    return value, abs(value - nearest)


@dataclass(frozen=True, eq=False)
class CharacterFingerprint:
    """τ_R on every freely reduced word up to a length, in a fixed order."""
    words: Tuple[BraidWord, ...]
    values: np.ndarray
    max_length: int
    strands: int
    label: str = FINGERPRINT_LABEL

    def __len__(self):
        return len(self.words)

    def as_dict(self) -> Dict[str, complex]:
        return {str(w): complex(v) for w, v in zip(self.words, self.values)}

    def distance(self, other: "CharacterFingerprint") -> float:
        return fingerprint_distance(self, other)


def character_fingerprint(R: RMatrix, max_length: int = 6, strands: int = 4) -> CharacterFingerprint:
    """
    Evaluate τ_R on all freely reduced words of length ≤ max_length over B_strands.

    Words are enumerated depth first with letters ordered 1, −1, 2, −2, …;
    only the current prefix chain is kept in memory and the last letter is
    traced against all generators at once.
    """
    if strands < 2:
        raise StrandCountError(f"a fingerprint needs at least 2 strands, got {strands}")
    if max_length < 0:
        raise ValueError(f"max_length must be non-negative, got {max_length}")

    letters = generator_letters(strands)
    gens = _generators(R, strands)
    stack = np.stack([gens[l] for l in letters])
    # transposed generators so that Tr(P·G) = Σ P ∘ Gᵀ
    stack_t = np.ascontiguousarray(stack.transpose(0, 2, 1))
    size = R.d ** strands

    words: List[BraidWord] = [BraidWord()]
    values: List[complex] = [1.0 + 0j]

    def descend(prefix: Tuple[int, ...], P: np.ndarray):
        allowed = [i for i, l in enumerate(letters) if not prefix or l != -prefix[-1]]
        if len(prefix) + 1 == max_length:
            traces = np.einsum("ij,nij->n", P, stack_t[allowed]) / size
            for i, t in zip(allowed, traces):
                words.append(BraidWord(prefix + (letters[i],)))
                values.append(complex(t))
            return
        for i in allowed:
            child = P @ stack[i]
            word = prefix + (letters[i],)
            words.append(BraidWord(word))
            values.append(complex(np.trace(child) / size))
            descend(word, child)

    if max_length > 0:
        descend((), np.eye(size, dtype=np.complex128))
    logger.debug("fingerprint: %d words of length <= %d over B%d", len(words), max_length, strands)
    return CharacterFingerprint(
        words=tuple(words),
        values=np.asarray(values, dtype=np.complex128),
        max_length=max_length,
        strands=strands,
    )


def fingerprint_distance(f: CharacterFingerprint, g: CharacterFingerprint) -> float:
    """
    max |f(w) − g(w)| over the common word list.

    Raises:
        ValueError: if the fingerprints were taken over different words
    """
    if f.words != g.words:
        raise ValueError(
            f"fingerprints differ in scope: length {f.max_length} over B{f.strands} "
            f"vs length {g.max_length} over B{g.strands}"
        )
    if not len(f):
        return 0.0
    return float(np.max(np.abs(f.values - g.values)))
