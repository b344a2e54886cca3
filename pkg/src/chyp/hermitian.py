"""Linear algebra over C^{2,1} with the form <z, w> = w^* J z.

Vectors are complex arrays of shape (3,), matrices complex arrays of shape
(3, 3).  A "group element" is a matrix M with M^* J M = J and det M = 1; we
do not wrap it in a class, functions that need one validate on entry.
"""
from __future__ import annotations

import enum

import numpy as np

from .errors import NotJUnitary, SingularMatrix, ZeroVector

J = np.array([[0, 0, 1], [0, 1, 0], [1, 0, 0]], dtype=complex)
I3 = np.eye(3, dtype=complex)

EPS_UNITARY = 1e-9
EPS_SIG = 1e-9

CUBE_ROOTS = np.exp(2j * np.pi * np.arange(3) / 3)


class VectorType(enum.Enum):
    POSITIVE = "positive"
    NULL = "null"
    NEGATIVE = "negative"


def as_vector(z) -> np.ndarray:
    v = np.asarray(z, dtype=complex).reshape(3)
    if not np.all(np.isfinite(v)):
        raise ValueError("vector has non-finite components")
    return v


def as_matrix(M) -> np.ndarray:
    A = np.asarray(M, dtype=complex)
    if A.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    return A


def hermitian_product(z, w) -> complex:
    """<z, w> = w^* J z, linear in z and conjugate-linear in w."""
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    return complex(z[0] * np.conj(w[2]) + z[1] * np.conj(w[1]) + z[2] * np.conj(w[0]))


def hermitian_square(v) -> float:
    v = np.asarray(v, dtype=complex)
    return float(2.0 * (v[0] * np.conj(v[2])).real + abs(v[1]) ** 2)


def vector_type(v, eps: float = EPS_SIG) -> VectorType:
    v = as_vector(v)
    if np.max(np.abs(v)) < eps:
        raise ZeroVector("vector_type of the zero vector")
    s = hermitian_square(v)
    if s > eps:
        return VectorType.POSITIVE
    if s < -eps:
        return VectorType.NEGATIVE
    return VectorType.NULL


def unitarity_residual(M) -> float:
    """max |(M^* J M - J)_{ij}|"""
    M = as_matrix(M)
    return float(np.max(np.abs(M.conj().T @ J @ M - J)))


def is_j_unitary(M, eps: float = EPS_UNITARY) -> bool:
    return unitarity_residual(M) <= eps


def is_group_element(M, eps: float = EPS_UNITARY) -> bool:
    M = as_matrix(M)
    return is_j_unitary(M, eps) and abs(np.linalg.det(M) - 1) <= eps


def require_group_element(M, eps: float = EPS_UNITARY) -> np.ndarray:
    M = as_matrix(M)
    if not is_group_element(M, eps):
        raise NotJUnitary(
            f"not in SU(2,1): J-residual {unitarity_residual(M):.3g}, "
            f"|det - 1| = {abs(np.linalg.det(M) - 1):.3g}"
        )
    return M


def group_inverse(M) -> np.ndarray:
    """Inverse of an SU(2,1) element as J M^* J.

    Entrywise this reverses both indices and conjugates, so the top-left entry
    of the inverse is the conjugate of the bottom-right entry of M.
    """
    M = as_matrix(M)
    return J @ M.conj().T @ J


def normalize_det(M, eps: float = EPS_UNITARY) -> np.ndarray:
    """Rescale a J-unitary matrix to determinant 1 by the principal cube root of det."""
    M = as_matrix(M)
    d = np.linalg.det(M)
    if abs(d) < eps:
        raise SingularMatrix(f"|det| = {abs(d):.3g}")
    if not is_j_unitary(M, eps):
        raise NotJUnitary(f"J-residual {unitarity_residual(M):.3g}")
    return M / d ** (1.0 / 3.0)


def renormalize(M) -> np.ndarray:
    """Divide out determinant drift without the J-unitarity precondition."""
    return M / np.linalg.det(M) ** (1.0 / 3.0)


def identity_distance(M) -> float:
    """Distance (max-entry norm) from M to the nearest of I, wI, w^2 I with w^3 = 1."""
    M = as_matrix(M)
    return float(min(np.max(np.abs(M - lam * I3)) for lam in CUBE_ROOTS))


def projective_equal(M, N, eps: float = EPS_UNITARY) -> bool:
    M = as_matrix(M)
    N = as_matrix(N)
    return any(np.max(np.abs(M - lam * N)) <= eps for lam in CUBE_ROOTS)


def same_up_to_phase(u, v, eps: float = 1e-9) -> bool:
    """True when u = c v for some unimodular c."""
    u = as_vector(u)
    v = as_vector(v)
    k = int(np.argmax(np.abs(v)))
    if abs(v[k]) < eps:
        return bool(np.max(np.abs(u)) < eps)
    c = u[k] / v[k]
    return abs(abs(c) - 1) <= eps and bool(np.max(np.abs(u - c * v)) <= eps)
