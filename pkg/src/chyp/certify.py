"""Sufficient condition for <f, g> to be discrete and isomorphic to Z_m * Z_n.

A pair passes when cosh(delta) exceeds

    (cos(pi/m) cos(pi/n) + 1) / (sin(pi/m) sin(pi/n)),

delta being the distance between the fixed complex lines or points.  The
report also records the bounding-sphere radii behind the ping-pong argument.
A failing pair is reported as inconclusive, never as non-discrete.
"""
from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass

from .errors import NotElliptic, OrderTooSmall
from .isometries import EllipticKind, IsometryClass, classify, fixed_locus, require_finite_order
from .pairs import PairSpec, locus_distance, make_pair
from .spheres import bounding_spheres, containment_holds, sphere_chain

EPS_MARGIN = 1e-9
CONFIGURATION_NOTE = (
    "fixed loci assumed in the aligned position of the explicit construction "
    "(isometric spheres centred on the vertical axis)"
)


class Verdict(enum.Enum):
    CERTIFIED = "certified"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CertificateReport:
    verdict: Verdict
    m: int
    n: int
    delta: float
    threshold: float
    cosh_delta: float
    margin: float
    r_f_star: float
    r_g_star: float
    containment: bool
    sphere_chain: bool
    kinds: tuple[EllipticKind, EllipticKind]
    configuration: str = CONFIGURATION_NOTE

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED

    def to_json(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict.value
        d["kinds"] = [k.value for k in self.kinds]
        return d

    @classmethod
    def from_json(cls, d: dict) -> "CertificateReport":
        d = dict(d)
        d["verdict"] = Verdict(d["verdict"])
        d["kinds"] = tuple(EllipticKind(k) for k in d["kinds"])
        return cls(**d)

    csv_fields = (
        "m", "n", "delta", "cosh_delta", "threshold", "margin",
        "r_f_star", "r_g_star", "containment", "verdict",
    )  # fmt: skip

    def csv_row(self) -> list:
        d = self.to_json()
        return [d[k] for k in self.csv_fields]


def _check_orders(m, n):
    for name, k in (("m", m), ("n", n)):
        if k <= 2:
            raise OrderTooSmall(f"{name} = {k}; orders must exceed 2")


def threshold(m: int, n: int) -> float:
    _check_orders(m, n)
    a, b = math.pi / m, math.pi / n
    return (math.cos(a) * math.cos(b) + 1) / (math.sin(a) * math.sin(b))


def critical_delta(m: int, n: int) -> float:
    return math.acosh(threshold(m, n))


def _report(m, n, delta, kinds, F, G) -> CertificateReport:
    t = threshold(m, n)
    ch = math.cosh(delta)
    w = math.exp(delta / 2)
    r_f, r_g = bounding_spheres(m, n, w)
    contained = containment_holds(m, n, w)
    margin = ch - t
    ok = margin > EPS_MARGIN and contained
    return CertificateReport(
        verdict=Verdict.CERTIFIED if ok else Verdict.INCONCLUSIVE,
        m=m,
        n=n,
        delta=delta,
        threshold=t,
        cosh_delta=ch,
        margin=margin,
        r_f_star=r_f,
        r_g_star=r_g,
        containment=contained,
        sphere_chain=sphere_chain(F, G, m, n, w),
        kinds=kinds,
    )


def certify_elements(F, G, max_order: int = 1000) -> CertificateReport:
    """Recover orders and the fixed-locus distance from the matrices, then test."""
    for name, X in (("F", F), ("G", G)):
        cls = classify(X)
        if cls not in (IsometryClass.BOUNDARY_ELLIPTIC, IsometryClass.POINT_REFLECTION):
            raise NotElliptic(f"{name} is {cls.value}, not a complex reflection")
    m = require_finite_order(F, max_order)
    n = require_finite_order(G, max_order)
    _check_orders(m, n)
    loc_f, loc_g = fixed_locus(F), fixed_locus(G)
    delta = locus_distance(loc_f, loc_g)
    return _report(m, n, delta, (loc_f.kind, loc_g.kind), F, G)


def certify_spec(spec: PairSpec) -> CertificateReport:
    F, G = make_pair(spec)
    loc_f, loc_g = fixed_locus(F), fixed_locus(G)
    delta = locus_distance(loc_f, loc_g)
    return _report(spec.m, spec.n, delta, (spec.kind_f, spec.kind_g), F, G)
