"""Random SU(2,1) elements for property tests and experiments.

Products of the two elliptic normal forms and the pair conjugators with
random parameters; no general parametrization of SU(2,1) is attempted.
"""
from __future__ import annotations

import cmath

import numpy as np

from .hermitian import group_inverse
from .isometries import boundary_elliptic_normal_form, regular_elliptic_normal_form
from .pairs import make_conjugators


def random_conjugator(rng: np.random.Generator, log_scale: float = 1.0) -> np.ndarray:
    omega = cmath.exp(complex(rng.uniform(-log_scale, log_scale), rng.uniform(-np.pi, np.pi)))
    A, B = make_conjugators(omega)
    return A if rng.random() < 0.5 else B


def random_factor(rng: np.random.Generator, log_scale: float = 1.0) -> np.ndarray:
    theta = rng.uniform(0.05, 2 * np.pi - 0.05)
    choice = rng.integers(4)
    if choice == 0:
        return boundary_elliptic_normal_form(theta)
    if choice == 1:
        return regular_elliptic_normal_form(theta)
    C = random_conjugator(rng, log_scale)
    return C if choice == 2 else group_inverse(C)


def random_group_element(rng: np.random.Generator, factors: int = 4, log_scale: float = 1.0) -> np.ndarray:
    M = np.eye(3, dtype=complex)
    for _ in range(factors):
        M = M @ random_factor(rng, log_scale)
    return M


def random_conjugate(rng: np.random.Generator, M, log_scale: float = 1.0) -> np.ndarray:
    C = random_group_element(rng, 3, log_scale)
    return C @ M @ group_inverse(C)
