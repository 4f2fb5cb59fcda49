"""
Tests for the matrix file format.
"""

import json

import numpy as np
import pytest

from tools import MatrixFile, MatrixFileError, read_matrix_file, write_matrix_file


def test_round_trip_is_bit_exact(tmp_path, qpi3):
    path = tmp_path / "r.json"
    write_matrix_file(path, qpi3.M, 3)
    M = read_matrix_file(path).to_matrix()
    assert np.array_equal(M, qpi3.M)


def test_layout_is_row_major():
    M = np.arange(16).reshape(4, 4) * (1 + 1j)
    mf = MatrixFile.from_matrix(M, 2)
    assert mf.entries[1] == [1.0, 1.0]
    assert mf.entries[4] == [4.0, 4.0]


@pytest.mark.parametrize("document", [
    "not json",
    "[]",
    json.dumps({"dim": 0, "entries": []}),
    json.dumps({"dim": True, "entries": [[0, 0]]}),
    json.dumps({"dim": 1, "entries": [[0, 0], [0, 0]]}),
    json.dumps({"dim": 1, "entries": [[0]]}),
    json.dumps({"dim": 1, "entries": [["a", 0]]}),
    '{"dim": 1, "entries": [[NaN, 0]]}',
])
def test_malformed_documents(document):
    with pytest.raises(MatrixFileError):
        MatrixFile.from_json(document)


def test_missing_file(tmp_path):
    with pytest.raises(MatrixFileError):
        read_matrix_file(tmp_path / "missing.json")


def test_wrong_shape():
    with pytest.raises(MatrixFileError):
        MatrixFile.from_matrix(np.eye(3), 2)
