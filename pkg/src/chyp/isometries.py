"""Eigenstructure classification of SU(2,1) elements, normal forms, orders, fixed loci."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

import numpy as np

from .errors import InfiniteOrder, NotElliptic, NumericallyAmbiguous, UnsupportedClass
from .hermitian import (
    I3,
    J,
    as_matrix,
    hermitian_square,
    projective_equal,
    renormalize,
)

EPS_CLS = 1e-8
# Eigenvalue gaps and modulus defects between EPS_CLS and this value cannot be
# told apart from the splitting of a perturbed Jordan block.
AMBIGUITY_BAND = 1e-4
RENORMALIZE_EVERY = 16


class IsometryClass(enum.Enum):
    LOXODROMIC = "loxodromic"
    PARABOLIC = "parabolic"
    BOUNDARY_ELLIPTIC = "boundary_elliptic"
    POINT_REFLECTION = "point_reflection"
    REGULAR_ELLIPTIC = "regular_elliptic"
    IDENTITY = "identity"

    @property
    def is_elliptic(self) -> bool:
        return self in ELLIPTIC_CLASSES


ELLIPTIC_CLASSES = frozenset(
    {
        IsometryClass.BOUNDARY_ELLIPTIC,
        IsometryClass.POINT_REFLECTION,
        IsometryClass.REGULAR_ELLIPTIC,
    }
)


class EllipticKind(enum.Enum):
    LINE = "line"
    POINT = "point"


@dataclass(frozen=True, eq=False)
class FixedLocus:
    """Polar vector of a fixed complex line (<p,p> = 1) or lift of a fixed point (<p,p> = -1)."""

    kind: EllipticKind
    vector: np.ndarray

    def to_json(self):
        return {"kind": self.kind.value, "vector": [[z.real, z.imag] for z in self.vector]}


def _smallest_singular_vector(A):
    return np.linalg.svd(A)[2][-1].conj()


def _null_space(A, tol):
    _, s, vh = np.linalg.svd(A)
    scale = max(1.0, s[0])
    return vh[s <= tol * scale].conj().T


def _check_band(values, eps):
    for x in np.ravel(values):
        if eps < x < AMBIGUITY_BAND:
            raise NumericallyAmbiguous(
                f"eigenvalue defect {x:.3g} lies between {eps:g} and {AMBIGUITY_BAND:g}"
            )


def _clusters(lam, eps):
    scale = float(np.max(np.abs(lam)))
    groups: list[list[int]] = []
    for i in range(3):
        for g in groups:
            if any(abs(lam[i] - lam[j]) < eps * scale for j in g):
                g.append(i)
                break
        else:
            groups.append([i])
    return groups


def _eigen_analysis(M, eps):
    """Return (class, simple eigenvalue or None)."""
    if projective_equal(M, I3, eps):
        return IsometryClass.IDENTITY, None
    lam = np.linalg.eigvals(M)
    defect = np.abs(np.abs(lam) - 1)
    _check_band(defect, eps)
    if defect.max() > eps:
        return IsometryClass.LOXODROMIC, None
    gaps = [abs(lam[i] - lam[j]) for i, j in itertools.combinations(range(3), 2)]
    _check_band(gaps, eps)
    groups = _clusters(lam, eps)
    if len(groups) == 1:
        return IsometryClass.PARABOLIC, None
    if len(groups) == 2:
        rep = next(g for g in groups if len(g) == 2)
        simple = next(g for g in groups if len(g) == 1)[0]
        mu = lam[rep].mean()
        V = _null_space(M - mu * I3, 1e-6)
        if V.shape[1] != 2:
            return IsometryClass.PARABOLIC, None
        gram = np.linalg.eigvalsh(V.conj().T @ J @ V)
        if gram.min() > eps:
            return IsometryClass.POINT_REFLECTION, lam[simple]
        if gram.min() < -eps and gram.max() > eps:
            return IsometryClass.BOUNDARY_ELLIPTIC, lam[simple]
        return IsometryClass.PARABOLIC, None
    for x in lam:
        if hermitian_square(_smallest_singular_vector(M - x * I3)) < -eps:
            return IsometryClass.REGULAR_ELLIPTIC, x
    return IsometryClass.PARABOLIC, None


def classify(M, eps: float = EPS_CLS) -> IsometryClass:
    return _eigen_analysis(as_matrix(M), eps)[0]


def eigenvalues(M) -> np.ndarray:
    return np.linalg.eigvals(as_matrix(M))


def boundary_elliptic_normal_form(theta: float) -> np.ndarray:
    """Complex reflection in the line with polar vector (0, 1, 0), angle theta."""
    if not 0 < theta < 2 * np.pi:
        raise ValueError(f"theta must lie in (0, 2pi), got {theta}")
    a = np.exp(-1j * theta / 3)
    return np.diag([a, a**-2, a]).astype(complex)


def regular_elliptic_normal_form(theta: float) -> np.ndarray:
    """Complex reflection in the point lifting to (1, 0, -1)/sqrt 2.

    Eigenvalue e^{2i theta/3} sits on the negative vector (1, 0, -1) and
    e^{-i theta/3} on the positive plane spanned by (1, 0, 1) and (0, 1, 0).
    """
    if not 0 < theta < 2 * np.pi:
        raise ValueError(f"theta must lie in (0, 2pi), got {theta}")
    u = np.exp(-1j * theta / 3)
    w = np.exp(2j * theta / 3)
    return np.array(
        [[(u + w) / 2, 0, (u - w) / 2], [0, u, 0], [(u - w) / 2, 0, (u + w) / 2]],
        dtype=complex,
    )


def order_of_elliptic(M, max_order: int = 1000, eps: float = 1e-9) -> int | None:
    """Smallest k <= max_order with M^k projectively the identity, else None."""
    M = as_matrix(M)
    cls = classify(M)
    if not (cls.is_elliptic or cls is IsometryClass.IDENTITY):
        raise NotElliptic(f"element is {cls.value}")
    P = M.copy()
    for k in range(1, max_order + 1):
        if projective_equal(P, I3, eps):
            return k
        P = P @ M
        if k % RENORMALIZE_EVERY == 0:
            P = renormalize(P)
    return None


def require_finite_order(M, max_order: int = 1000, eps: float = 1e-9) -> int:
    k = order_of_elliptic(M, max_order, eps)
    if k is None:
        raise InfiniteOrder(f"no power up to {max_order} is the identity")
    return k


def _fix_phase(v):
    k = int(np.argmax(np.abs(v) > 1e-6 * np.max(np.abs(v))))
    return v * (abs(v[k]) / v[k])


def fixed_locus(M, eps: float = EPS_CLS) -> FixedLocus:
    M = as_matrix(M)
    cls, lam = _eigen_analysis(M, eps)
    if cls not in (IsometryClass.BOUNDARY_ELLIPTIC, IsometryClass.POINT_REFLECTION):
        raise UnsupportedClass(f"no fixed line or isolated reflection point for {cls.value}")
    v = _smallest_singular_vector(M - lam * I3)
    s = hermitian_square(v)
    v = _fix_phase(v / np.sqrt(abs(s)))
    kind = EllipticKind.LINE if cls is IsometryClass.BOUNDARY_ELLIPTIC else EllipticKind.POINT
    return FixedLocus(kind, v)
