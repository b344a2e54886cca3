"""Siegel domain: horospherical coordinates (xi, nu, mu) and the lift to C^{2,1}."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import BoundaryPoint, PositiveVector
from .hermitian import (
    EPS_SIG,
    VectorType,
    as_matrix,
    as_vector,
    hermitian_product,
    vector_type,
)

SQRT2 = math.sqrt(2.0)
INFINITY_CUTOFF = 1e-12
ARCCOSH_CLAMP = 1e-12


@dataclass(frozen=True)
class SiegelPoint:
    xi: complex
    nu: float
    mu: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "xi", complex(self.xi))
        object.__setattr__(self, "nu", float(self.nu))
        object.__setattr__(self, "mu", float(self.mu))
        if self.mu < 0:
            raise ValueError(f"mu must be >= 0, got {self.mu}")

    @property
    def is_interior(self) -> bool:
        return self.mu > 0

    def to_json(self):
        return {"xi": [self.xi.real, self.xi.imag], "nu": self.nu, "mu": self.mu}


@dataclass(frozen=True)
class Infinity:
    """The point q_inf, lifting to (1, 0, 0)."""

    is_interior = False

    def to_json(self):
        return "infinity"


INFINITY = Infinity()
Point = Union[SiegelPoint, Infinity]


def point_from_json(obj) -> Point:
    if obj == "infinity":
        return INFINITY
    re, im = obj["xi"]
    return SiegelPoint(complex(re, im), float(obj["nu"]), float(obj.get("mu", 0.0)))


def lift(p: Point) -> np.ndarray:
    if isinstance(p, Infinity):
        return np.array([1, 0, 0], dtype=complex)
    xi = complex(p.xi)
    return np.array([-abs(xi) ** 2 - p.mu + 1j * p.nu, SQRT2 * xi, 1.0], dtype=complex)


def project(v, eps: float = EPS_SIG) -> Point:
    v = as_vector(v)
    if vector_type(v, eps) is VectorType.POSITIVE:
        raise PositiveVector("positive vectors do not represent points of the closure")
    if abs(v[2]) < INFINITY_CUTOFF * np.max(np.abs(v)):
        return INFINITY
    w = v / v[2]
    xi = complex(w[1] / SQRT2)
    mu = -w[0].real - abs(xi) ** 2
    # null vectors land at mu ~ -1e-16 from roundoff
    return SiegelPoint(xi, float(w[0].imag), max(float(mu), 0.0))


def bergman_distance(p: Point, q: Point) -> float:
    for x in (p, q):
        if not x.is_interior:
            raise BoundaryPoint(f"{x} is not an interior point")
    z, w = lift(p), lift(q)
    zw = hermitian_product(z, w)
    ratio = (zw * zw.conjugate()).real / (
        hermitian_product(z, z).real * hermitian_product(w, w).real
    )
    c = math.sqrt(ratio)
    if 1 - ARCCOSH_CLAMP <= c < 1:
        c = 1.0
    return 2.0 * math.acosh(c)


def apply(M, p: Point) -> Point:
    return project(as_matrix(M) @ lift(p))
