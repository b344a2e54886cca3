"""Ford isometric spheres as Cygan spheres, and the nested-sphere containment test."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import FixesInfinity
from .heisenberg import ORIGIN, HeisenbergPoint, heis_dilate, heis_mul
from .hermitian import as_matrix, group_inverse, hermitian_product
from .siegel import SQRT2, SiegelPoint, lift

Q_INF = np.array([1, 0, 0], dtype=complex)
FIXES_INF_EPS = 1e-12


@dataclass(frozen=True)
class CyganSphere:
    center: HeisenbergPoint
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"radius must be positive, got {self.radius}")

    def to_json(self):
        return {"center": self.center.to_json(), "radius": self.radius}

    @classmethod
    def from_json(cls, obj) -> "CyganSphere":
        return cls(HeisenbergPoint.from_json(obj["center"]), float(obj["radius"]))


def _bottom_left(M):
    M = as_matrix(M)
    g = M[2, 0]
    if abs(g) < FIXES_INF_EPS * np.max(np.abs(M)):
        raise FixesInfinity("M fixes q_inf; its isometric sphere is undefined")
    return M, g


def isometric_sphere(M) -> CyganSphere:
    """Center M^{-1}(q_inf) = (conj(h)/(sqrt2 conj(g)), -Im(j/g)), radius 1/sqrt|g|."""
    M, g = _bottom_left(M)
    h, j = M[2, 1], M[2, 2]
    center = HeisenbergPoint(complex(np.conj(h) / (SQRT2 * np.conj(g))), float(-(j / g).imag))
    return CyganSphere(center, 1.0 / math.sqrt(abs(g)))


def sphere_residual(M, p: HeisenbergPoint) -> float:
    """| |<Z, q_inf>| - |<Z, M^{-1} q_inf>| | for Z the lift of the boundary point p."""
    M, _ = _bottom_left(M)
    Z = lift(SiegelPoint(p.xi, p.nu, 0.0))
    back = group_inverse(M) @ Q_INF
    return abs(abs(hermitian_product(Z, Q_INF)) - abs(hermitian_product(Z, back)))


def sphere_points(sphere: CyganSphere, count: int, rng: np.random.Generator) -> list[HeisenbergPoint]:
    """Random points on a Cygan sphere: unit-norm offsets, dilated, then left-translated."""
    out = []
    for _ in range(count):
        alpha = rng.uniform(-math.pi / 2, math.pi / 2)
        arg = rng.uniform(0, 2 * math.pi)
        unit = HeisenbergPoint(math.sqrt(math.cos(alpha)) * complex(math.cos(arg), math.sin(arg)), math.sin(alpha))
        out.append(heis_mul(sphere.center, heis_dilate(unit, sphere.radius)))
    return out


def closed_form_spheres(m: int, n: int, omega_abs: float) -> dict[str, CyganSphere]:
    """I_f, I_{f^-1}, I_g, I_{g^-1} for the line-reflection pair."""
    w = omega_abs
    sf, cf = math.sin(math.pi / m), math.cos(math.pi / m)
    sg, cg = math.sin(math.pi / n), math.cos(math.pi / n)
    rf = math.sqrt(w / sf)
    rg = math.sqrt(1 / (w * sg))
    return {
        "I_f": CyganSphere(HeisenbergPoint(0, w * cf / sf), rf),
        "I_f_inv": CyganSphere(HeisenbergPoint(0, -w * cf / sf), rf),
        "I_g": CyganSphere(HeisenbergPoint(0, cg / (w * sg)), rg),
        "I_g_inv": CyganSphere(HeisenbergPoint(0, -cg / (w * sg)), rg),
    }


def bounding_spheres(m: int, n: int, omega_abs: float) -> tuple[float, float]:
    """Radii of S*_f (inside both spheres of f) and S*_g (around both spheres of g)."""
    w = omega_abs
    t_f, t_g = math.pi / m, math.pi / n
    r_f = math.sqrt(w / math.sin(t_f) * (1 - math.cos(t_f)))
    r_g = math.sqrt(1 / (w * math.sin(t_g)) * (1 + math.cos(t_g)))
    return r_f, r_g


def containment_holds(m: int, n: int, omega_abs: float) -> bool:
    r_f, r_g = bounding_spheres(m, n, omega_abs)
    return r_g <= r_f


def containment_bound(m: int, n: int) -> float:
    """The least |omega|^2 at which containment holds."""
    t_f, t_g = math.pi / m, math.pi / n
    return math.sin(t_f) / (1 - math.cos(t_f)) * (1 + math.cos(t_g)) / math.sin(t_g)


def ball_contains(outer: CyganSphere, inner: CyganSphere, tol: float = 1e-9) -> bool:
    """Whether the closed Cygan ball `inner` lies in `outer`, for centers on a common vertical line.

    For centers (xi, a) and (xi, b) the extreme point of the inner ball is on
    the vertical axis, giving r_in^2 + |a - b| <= r_out^2.
    """
    if abs(outer.center.xi - inner.center.xi) > tol:
        raise ValueError("ball_contains needs centers on a common vertical line")
    lhs = inner.radius**2 + abs(outer.center.nu - inner.center.nu)
    return lhs <= outer.radius**2 * (1 + tol)


def sphere_chain(F, G, m: int, n: int, omega_abs: float) -> bool:
    """The ping-pong nesting: I_g, I_{g^-1} in S*_g, S*_g in S*_f, S*_f in I_f and I_{f^-1}.

    Uses the isometric spheres computed from the actual matrices, so it fails
    when F, G are not in the aligned configuration.
    """
    r_f, r_g = bounding_spheres(m, n, omega_abs)
    s_f = CyganSphere(ORIGIN, r_f)
    s_g = CyganSphere(ORIGIN, r_g)
    i_f = [isometric_sphere(F), isometric_sphere(group_inverse(F))]
    i_g = [isometric_sphere(G), isometric_sphere(group_inverse(G))]
    try:
        return (
            all(ball_contains(s_g, s) for s in i_g)
            and ball_contains(s_f, s_g)
            and all(ball_contains(s, s_f) for s in i_f)
        )
    except ValueError:
        return False
