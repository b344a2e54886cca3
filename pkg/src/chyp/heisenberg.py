"""Heisenberg group C x R, its norm and the Cygan metric.

The Hermitian form on C is <<a, b>> = a * conj(b), so the central term of
the group law is 2 Im(xi1 * conj(xi2)).  This is the sign that makes
Heisenberg translation agree with the matrix action on lifts.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class HeisenbergPoint:
    xi: complex = 0j
    nu: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "xi", complex(self.xi))
        object.__setattr__(self, "nu", float(self.nu))

    def to_json(self):
        return {"xi": [self.xi.real, self.xi.imag], "nu": self.nu}

    @classmethod
    def from_json(cls, obj) -> "HeisenbergPoint":
        re, im = obj["xi"]
        return cls(complex(re, im), float(obj["nu"]))


ORIGIN = HeisenbergPoint()


def _im_form(a: complex, b: complex) -> float:
    return (a * b.conjugate()).imag


def heis_mul(p: HeisenbergPoint, q: HeisenbergPoint) -> HeisenbergPoint:
    return HeisenbergPoint(p.xi + q.xi, p.nu + q.nu + 2.0 * _im_form(p.xi, q.xi))


def heis_inv(p: HeisenbergPoint) -> HeisenbergPoint:
    return HeisenbergPoint(-p.xi, -p.nu)


def heis_norm(p: HeisenbergPoint) -> float:
    a, b = abs(p.xi), abs(p.nu) ** 0.5
    s = max(a, b)
    if s == 0:
        return 0.0
    # scaled so |xi|^4 cannot underflow
    return s * ((a / s) ** 4 + (b / s) ** 4) ** 0.25


def cygan_distance(p: HeisenbergPoint, q: HeisenbergPoint) -> float:
    return heis_norm(heis_mul(heis_inv(p), q))


def heis_translate(p0: HeisenbergPoint, p: HeisenbergPoint) -> HeisenbergPoint:
    return heis_mul(p0, p)


def heis_dilate(p: HeisenbergPoint, r: float) -> HeisenbergPoint:
    """(xi, nu) -> (r xi, r^2 nu); scales the Cygan norm by r."""
    return HeisenbergPoint(r * p.xi, r * r * p.nu)
