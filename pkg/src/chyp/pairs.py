"""The explicit generator pair f, g with fixed loci at separation delta.

Both generators are conjugates of standard elliptics fixing objects through
the origin: F = A U_1 A^{-1}, G = B U_2 B^{-1}.  Line reflections use the
diagonal boundary-elliptic form, point reflections the regular-elliptic one.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidSpec, LinesIntersect, OrderTooSmall, WrongSignature
from .hermitian import (
    EPS_SIG,
    VectorType,
    group_inverse,
    hermitian_product,
    hermitian_square,
    vector_type,
)
from .isometries import (
    EllipticKind,
    FixedLocus,
    boundary_elliptic_normal_form,
    regular_elliptic_normal_form,
)

SQRT2 = math.sqrt(2.0)


def parse_kind(kind) -> EllipticKind:
    if isinstance(kind, EllipticKind):
        return kind
    try:
        return EllipticKind(kind)
    except ValueError:
        raise InvalidSpec(f"unknown elliptic kind {kind!r}; expected 'line' or 'point'") from None


@dataclass(frozen=True)
class PairSpec:
    m: int
    n: int
    delta: float
    phi: float = 0.0
    kind_f: EllipticKind = EllipticKind.LINE
    kind_g: EllipticKind = EllipticKind.LINE

    def __post_init__(self):
        object.__setattr__(self, "kind_f", parse_kind(self.kind_f))
        object.__setattr__(self, "kind_g", parse_kind(self.kind_g))
        for name in ("m", "n"):
            if getattr(self, name) <= 2:
                raise OrderTooSmall(f"{name} = {getattr(self, name)}; orders must exceed 2")
        if not (self.delta > 0 and math.isfinite(self.delta)):
            raise InvalidSpec(f"delta must be a positive finite number, got {self.delta}")

    @property
    def omega(self) -> complex:
        """omega with omega^2 = e^{delta + i phi}, principal root."""
        return cmath.sqrt(cmath.exp(complex(self.delta, self.phi)))

    @property
    def omega_abs(self) -> float:
        return math.exp(self.delta / 2)

    def to_json(self):
        return {
            "m": self.m,
            "n": self.n,
            "delta": self.delta,
            "phi": self.phi,
            "kind_f": self.kind_f.value,
            "kind_g": self.kind_g.value,
        }

    @classmethod
    def from_json(cls, obj) -> "PairSpec":
        return cls(
            int(obj["m"]),
            int(obj["n"]),
            float(obj["delta"]),
            float(obj.get("phi", 0.0)),
            obj.get("kind_f", "line"),
            obj.get("kind_g", "line"),
        )


def make_u(order: int) -> np.ndarray:
    if order <= 2:
        raise OrderTooSmall(f"order {order} <= 2")
    return boundary_elliptic_normal_form(2 * math.pi / order)


def _standard_elliptic(order: int, kind: EllipticKind) -> np.ndarray:
    if order <= 2:
        raise OrderTooSmall(f"order {order} <= 2")
    if kind is EllipticKind.LINE:
        return make_u(order)
    return regular_elliptic_normal_form(2 * math.pi / order)


def make_conjugators(omega: complex) -> tuple[np.ndarray, np.ndarray]:
    """The two SU(2,1) conjugators moving the standard fixed objects apart.

    A sends (0,1,0) to p_f = (sqrt(omega/2), 0, 1/conj(sqrt(2 omega))); B sends
    it to (1/sqrt(2 omega), 0, conj(sqrt(omega/2))).  The minus sign on A[0,0]
    is required for A^* J A = J.
    """
    if omega == 0:
        raise ValueError("omega must be nonzero")
    c = cmath.sqrt(omega)
    cb = c.conjugate()
    r = 1 / SQRT2
    A = np.array(
        [
            [-cb / 2, c * r, cb / 2],
            [r, 0, r],
            [1 / (2 * c), r / cb, -1 / (2 * c)],
        ],
        dtype=complex,
    )
    B = np.array(
        [
            [-1 / (2 * cb), r / c, 1 / (2 * cb)],
            [r, 0, r],
            [c / 2, cb * r, -c / 2],
        ],
        dtype=complex,
    )
    return A, B


def make_pair(spec: PairSpec) -> tuple[np.ndarray, np.ndarray]:
    A, B = make_conjugators(spec.omega)
    F = A @ _standard_elliptic(spec.m, spec.kind_f) @ group_inverse(A)
    G = B @ _standard_elliptic(spec.n, spec.kind_g) @ group_inverse(B)
    return F, G


def closed_form_line_pair(m: int, n: int, omega_abs: float) -> tuple[np.ndarray, np.ndarray]:
    """F and G for two line reflections, written out entrywise in |omega|."""

    def block(order, top, bottom):
        u = cmath.exp(2j * math.pi / order)
        lo, hi = u ** (-1 / 3), u ** (2 / 3)
        return np.array(
            [
                [(lo + hi) / 2, 0, top * (hi - lo) / 2],
                [0, lo, 0],
                [bottom * (hi - lo) / 2, 0, (lo + hi) / 2],
            ],
            dtype=complex,
        )

    w = omega_abs
    return block(m, w, 1 / w), block(n, 1 / w, w)


def expected_fixed_loci(spec: PairSpec) -> tuple[FixedLocus, FixedLocus]:
    """Fixed loci of make_pair(spec), read off the conjugators."""
    A, B = make_conjugators(spec.omega)
    out = []
    for C, kind in ((A, spec.kind_f), (B, spec.kind_g)):
        if kind is EllipticKind.LINE:
            v = C[:, 1]
        else:
            v = (C[:, 0] - C[:, 2]) / SQRT2
        out.append(FixedLocus(kind, v.copy()))
    return out[0], out[1]


def _require(v, want: VectorType, what: str):
    if vector_type(v, EPS_SIG) is not want:
        raise WrongSignature(f"{what} must be a {want.value} vector")


def line_line_distance(p_f, p_g, eps: float = 1e-9) -> float:
    _require(p_f, VectorType.POSITIVE, "p_f")
    _require(p_g, VectorType.POSITIVE, "p_g")
    c = abs(hermitian_product(p_f, p_g)) / math.sqrt(hermitian_square(p_f) * hermitian_square(p_g))
    if c < 1 - eps:
        raise LinesIntersect(f"|<p_f, p_g>| = {c:.6g} < 1: the complex lines meet")
    return 2.0 * math.acosh(max(c, 1.0))


def line_point_distance(p_line, p_point) -> float:
    _require(p_line, VectorType.POSITIVE, "p_line")
    _require(p_point, VectorType.NEGATIVE, "p_point")
    num = abs(hermitian_product(p_line, p_point)) ** 2
    den = -hermitian_square(p_line) * hermitian_square(p_point)
    return 2.0 * math.asinh(math.sqrt(num / den))


def point_point_distance(p, q) -> float:
    _require(p, VectorType.NEGATIVE, "p")
    _require(q, VectorType.NEGATIVE, "q")
    num = abs(hermitian_product(p, q)) ** 2
    den = hermitian_square(p) * hermitian_square(q)
    return 2.0 * math.acosh(max(math.sqrt(num / den), 1.0))


def locus_distance(a: FixedLocus, b: FixedLocus) -> float:
    if a.kind is EllipticKind.LINE and b.kind is EllipticKind.LINE:
        return line_line_distance(a.vector, b.vector)
    if a.kind is EllipticKind.POINT and b.kind is EllipticKind.POINT:
        return point_point_distance(a.vector, b.vector)
    if a.kind is EllipticKind.LINE:
        return line_point_distance(a.vector, b.vector)
    return line_point_distance(b.vector, a.vector)
