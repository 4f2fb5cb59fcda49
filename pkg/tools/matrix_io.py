"""
MatrixFile: the JSON interchange format for R-matrices.

    {"dim": d, "entries": [[re, im], ...]}

entries lists the d²×d² matrix row-major. Floats are written with Python's
shortest round-trip representation, so write-then-read is bit-exact.
"""

import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import List, Union

import numpy as np

logger = logging.getLogger(__name__)


class MatrixFileError(ValueError):
    """Raised for unreadable or malformed matrix files."""


@dataclass(frozen=True, eq=False)
class MatrixFile:
    dim: int
    entries: List[List[float]]

    @classmethod
    def from_matrix(cls, M: np.ndarray, d: int) -> "MatrixFile":
        M = np.asarray(M, dtype=np.complex128)
        if M.shape != (d * d, d * d):
            raise MatrixFileError(f"expected a {d * d}x{d * d} matrix for dim={d}, got {M.shape}")
        return cls(dim=d, entries=[[float(z.real), float(z.imag)] for z in M.ravel()])

    def to_matrix(self) -> np.ndarray:
        n = self.dim * self.dim
        flat = np.array([complex(re, im) for re, im in self.entries], dtype=np.complex128)
        return flat.reshape(n, n)

    def to_json(self) -> str:
        return json.dumps({"dim": self.dim, "entries": self.entries})

    @classmethod
    def from_json(cls, text: str) -> "MatrixFile":
        """
        Parse and check a MatrixFile document.

        Raises:
            MatrixFileError: on invalid JSON, wrong lengths or non-finite entries
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise MatrixFileError(f"invalid JSON: {e}") from e
        if not isinstance(data, dict) or "dim" not in data or "entries" not in data:
            raise MatrixFileError('matrix file must be an object with "dim" and "entries"')
        d = data["dim"]
        if not isinstance(d, int) or isinstance(d, bool) or d < 1:
            raise MatrixFileError(f"dim must be a positive integer, got {d!r}")
        entries = data["entries"]
        if not isinstance(entries, list) or len(entries) != d ** 4:
            count = len(entries) if isinstance(entries, list) else "no"
            raise MatrixFileError(f"dim={d} needs {d ** 4} entries, got {count}")
        parsed = []
        for k, pair in enumerate(entries):
            if not isinstance(pair, list) or len(pair) != 2:
                raise MatrixFileError(f"entry {k} is not a [re, im] pair: {pair!r}")
            try:
                re, im = float(pair[0]), float(pair[1])
            except (TypeError, ValueError) as e:
                raise MatrixFileError(f"entry {k} is not numeric: {pair!r}") from e
            if not (math.isfinite(re) and math.isfinite(im)):
                raise MatrixFileError(f"entry {k} is not finite: {pair!r}")
            parsed.append([re, im])
        return cls(dim=d, entries=parsed)


def read_matrix_file(path: Union[str, Path]) -> MatrixFile:
    """
    Raises:
        MatrixFileError: if the file cannot be read or is malformed
    """
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise MatrixFileError(f"cannot read {path}: {e}") from e
    mf = MatrixFile.from_json(text)
    logger.debug("read %s: dim=%d", path, mf.dim)
    return mf


def write_matrix_file(path: Union[str, Path], M: np.ndarray, d: int) -> MatrixFile:
    mf = MatrixFile.from_matrix(M, d)
    try:
        Path(path).write_text(mf.to_json() + "\n")
    except OSError as e:
        raise MatrixFileError(f"cannot write {path}: {e}") from e
    return mf
