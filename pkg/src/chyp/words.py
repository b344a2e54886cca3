"""Reduced words of Z_m * Z_n evaluated on a matrix pair.

A run that finds no reduced word evaluating to the identity is evidence of
freeness up to the tested length, not a proof.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .hermitian import CUBE_ROOTS, I3, as_matrix, identity_distance, renormalize

RENORMALIZE_EVERY = 16
EPS_ID = 1e-6


@dataclass(frozen=True)
class ReducedWord:
    syllables: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.syllables:
            raise ValueError("reduced words are nonempty")
        for (a, _), (b, _) in zip(self.syllables, self.syllables[1:]):
            if a == b:
                raise ValueError(f"adjacent syllables on the same generator {a}")

    def check_orders(self, m: int, n: int):
        bound = {"f": m, "g": n}
        for gen, e in self.syllables:
            if gen not in bound:
                raise ValueError(f"unknown generator {gen!r}")
            if not 1 <= e < bound[gen]:
                raise ValueError(f"exponent {e} of {gen} outside [1, {bound[gen] - 1}]")

    def __len__(self):
        return len(self.syllables)

    def __str__(self):
        return ".".join(f"{g}{e}" for g, e in self.syllables)

    @classmethod
    def parse(cls, text: str) -> "ReducedWord":
        return cls(tuple((s[0], int(s[1:])) for s in text.split(".")))

    def __add__(self, other: "ReducedWord") -> "ReducedWord":
        return ReducedWord(self.syllables + other.syllables)


def word_count(m: int, n: int, s: int) -> int:
    """Number of reduced words with exactly s syllables."""
    f_first = (m - 1) ** math.ceil(s / 2) * (n - 1) ** (s // 2)
    g_first = (n - 1) ** math.ceil(s / 2) * (m - 1) ** (s // 2)
    return f_first + g_first


def _tree(first: str, other: str, bounds: dict, s: int):
    gens = [first if i % 2 == 0 else other for i in range(s)]
    ranges = [range(1, bounds[g]) for g in gens]
    for exps in itertools.product(*ranges):
        yield ReducedWord(tuple(zip(gens, exps)))


def enumerate_reduced_words(m: int, n: int, max_syllables: int) -> Iterator[ReducedWord]:
    """All reduced words up to max_syllables: by length, then f-first before g-first, then exponents."""
    if m <= 2 or n <= 2:
        raise ValueError("orders must exceed 2")
    if max_syllables < 1:
        raise ValueError("max_syllables must be >= 1")
    bounds = {"f": m, "g": n}
    for s in range(1, max_syllables + 1):
        yield from _tree("f", "g", bounds, s)
        yield from _tree("g", "f", bounds, s)


def evaluate_word(w: ReducedWord, F, G) -> np.ndarray:
    gens = {"f": as_matrix(F), "g": as_matrix(G)}
    P = I3.copy()
    factors = 0
    for g, e in w.syllables:
        for _ in range(e):
            P = P @ gens[g]
            factors += 1
            if factors % RENORMALIZE_EVERY == 0:
                P = renormalize(P)
    return P


def _powers(X, order):
    out = [X]
    for _ in range(order - 2):
        out.append(out[-1] @ X)
    return np.stack(out)


def _level_products(F, G, m, n, max_syllables):
    """Yield, per length s, the stacked products in enumeration order."""
    pw = {"f": _powers(F, m), "g": _powers(G, n)}
    other = {"f": "g", "g": "f"}
    fronts = {"f": pw["f"], "g": pw["g"]}
    last = {"f": "f", "g": "g"}
    for s in range(1, max_syllables + 1):
        if s > 1:
            for start in ("f", "g"):
                nxt = other[last[start]]
                P = np.einsum("aij,bjk->abik", fronts[start], pw[nxt]).reshape(-1, 3, 3)
                if s % RENORMALIZE_EVERY == 0:
                    P = P / np.linalg.det(P)[:, None, None] ** (1 / 3)
                fronts[start] = P
                last[start] = nxt
        yield s, np.concatenate([fronts["f"], fronts["g"]])


def _identity_distances(P):
    return np.min(
        [np.max(np.abs(P - lam * I3), axis=(1, 2)) for lam in CUBE_ROOTS], axis=0
    )


@dataclass
class FreenessReport:
    max_syllables: int
    words_checked: int
    min_identity_distance: float
    all_nontrivial: bool
    worst_word: ReducedWord | None
    tol: float = EPS_ID
    note: str = "finite-depth evidence only; absence of short relations does not prove freeness"
    distances: list[tuple[str, float]] | None = field(default=None, repr=False)

    def merge(self, other: "FreenessReport") -> "FreenessReport":
        """Combine reports over disjoint word batches (order-independent)."""
        best = min((self, other), key=lambda r: (r.min_identity_distance, str(r.worst_word)))
        return FreenessReport(
            max(self.max_syllables, other.max_syllables),
            self.words_checked + other.words_checked,
            best.min_identity_distance,
            self.all_nontrivial and other.all_nontrivial,
            best.worst_word,
            min(self.tol, other.tol),
        )

    def to_json(self) -> dict:
        return {
            "max_syllables": self.max_syllables,
            "words_checked": self.words_checked,
            "min_identity_distance": self.min_identity_distance,
            "all_nontrivial": self.all_nontrivial,
            "worst_word": None if self.worst_word is None else str(self.worst_word),
            "tol": self.tol,
            "note": self.note,
        }


def verify_freeness(F, G, m: int, n: int, max_syllables: int = 6,
                    tol: float = EPS_ID, record: bool = False) -> FreenessReport:
    F, G = as_matrix(F), as_matrix(G)
    dists = np.concatenate([_identity_distances(P) for _, P in _level_products(F, G, m, n, max_syllables)])
    k = int(np.argmin(dists))
    words = enumerate_reduced_words(m, n, max_syllables)
    if record:
        words = list(words)
        worst = words[k]
        table = [(str(w), float(d)) for w, d in zip(words, dists)]
    else:
        worst = next(itertools.islice(words, k, None))
        table = None
    total = sum(word_count(m, n, s) for s in range(1, max_syllables + 1))
    assert total == len(dists)
    return FreenessReport(
        max_syllables=max_syllables,
        words_checked=len(dists),
        min_identity_distance=float(dists[k]),
        all_nontrivial=bool(dists[k] > tol),
        worst_word=worst,
        tol=tol,
        distances=table,
    )


__all__ = [
    "ReducedWord", "FreenessReport", "word_count", "enumerate_reduced_words",
    "evaluate_word", "identity_distance", "verify_freeness",
]  # fmt: skip
