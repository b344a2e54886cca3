"""Shared JSON encodings: matrices as 3x3 arrays of [re, im] pairs."""
from __future__ import annotations

import json

import numpy as np


def matrix_to_json(M) -> list:
    M = np.asarray(M, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in M]


def matrix_from_json(obj) -> np.ndarray:
    arr = np.asarray(obj, dtype=float)
    if arr.shape != (3, 3, 2):
        raise ValueError(f"matrix JSON must have shape 3x3x2, got {arr.shape}")
    return arr[..., 0] + 1j * arr[..., 1]


def vector_to_json(v) -> list:
    return [[float(z.real), float(z.imag)] for z in np.asarray(v, dtype=complex)]


def complex_to_json(z) -> list:
    return [float(z.real), float(z.imag)]


def dumps(obj) -> str:
    """Canonical serialization: sorted keys, two-space indent."""
    return json.dumps(obj, sort_keys=True, indent=2)


def load_matrix(path) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        return matrix_from_json(json.load(fh))
