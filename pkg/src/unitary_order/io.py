"""JSON forms of matrices: ``{"n": int, "re": [[...]], "im": [[...]]}``, row-major.

``im`` may be omitted for real matrices. Python's float repr round-trips
doubles exactly, so ``parse(emit(M)) == M``.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np


class MatrixFormatError(ValueError):
    pass


def matrix_to_json(M) -> dict:
    a = np.asarray(M)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise MatrixFormatError(f"expected a square matrix, got shape {a.shape}")
    obj = {"n": int(a.shape[0]), "re": np.real(a).astype(float).tolist()}
    if np.iscomplexobj(a) and np.any(np.imag(a) != 0):
        obj["im"] = np.imag(a).astype(float).tolist()
    return obj


def matrix_from_json(obj) -> np.ndarray:
    if not isinstance(obj, dict) or "n" not in obj or "re" not in obj:
        raise MatrixFormatError("matrix JSON needs keys 'n' and 're'")
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise MatrixFormatError(f"'n' must be a positive integer, got {n!r}")
    try:
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj["im"], dtype=float) if obj.get("im") is not None else np.zeros_like(re)
    except (TypeError, ValueError) as exc:
        raise MatrixFormatError(f"non-numeric matrix entries: {exc}") from exc
    if re.shape != (n, n) or im.shape != (n, n):
        raise MatrixFormatError(f"entries do not form a {n}x{n} matrix")
    return re + 1j * im


def dumps_matrix(M, **kw) -> str:
    return json.dumps(matrix_to_json(M), **kw)


def loads_matrix(text: str) -> np.ndarray:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"malformed JSON: {exc}") from exc
    return matrix_from_json(obj)


def read_matrix(path) -> np.ndarray:
    return loads_matrix(Path(path).read_text())


def write_matrix(path, M) -> None:
    Path(path).write_text(dumps_matrix(M) + "\n")
