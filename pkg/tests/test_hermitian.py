import cmath

import numpy as np
import pytest

from chyp.errors import NotJUnitary, ZeroVector
from chyp.hermitian import (
    I3,
    J,
    VectorType,
    group_inverse,
    hermitian_product,
    identity_distance,
    is_group_element,
    normalize_det,
    projective_equal,
    same_up_to_phase,
    vector_type,
)

E = np.e
LOX = np.diag([E, 1, 1 / E]).astype(complex)


@pytest.mark.parametrize(
    "z, expected",
    [((1, 0, 0), 0), ((0, 1, 0), 1), ((1, 0, 1), 2), ((1, 0, -1), -2)],
)
def test_hermitian_square_examples(z, expected):
    assert hermitian_product(z, z) == pytest.approx(expected)


def test_hermitian_product_matches_matrix_formula(rng):
    for _ in range(50):
        z, w = rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3))
        assert hermitian_product(z, w) == pytest.approx(w.conj() @ J @ z)
        assert hermitian_product(z, w) == pytest.approx(np.conj(hermitian_product(w, z)))


@pytest.mark.parametrize(
    "v, kind",
    [((1, 0, 0), VectorType.NULL), ((1, 0, -1), VectorType.NEGATIVE), ((0, 1, 0), VectorType.POSITIVE)],
)
def test_vector_type(v, kind):
    assert vector_type(v) is kind


def test_vector_type_zero():
    with pytest.raises(ZeroVector):
        vector_type((0, 1e-12, 0))


def test_group_membership_examples():
    assert is_group_element(I3)
    assert is_group_element(LOX)
    assert not is_group_element(np.diag([2, 1, 1]))


def test_inverse_examples():
    assert np.allclose(group_inverse(I3), I3)
    u = cmath.exp(2j * np.pi / 5)
    M = np.diag([u ** (-1 / 3), u ** (2 / 3), u ** (-1 / 3)])
    assert np.allclose(group_inverse(M), np.diag([u ** (1 / 3), u ** (-2 / 3), u ** (1 / 3)]))


def test_inverse_entry_pattern(group_elements):
    M = group_elements[0]
    Minv = group_inverse(M)
    # rows and columns both reversed, entries conjugated
    assert np.allclose(Minv, np.conj(M[::-1, ::-1]).T)
    assert Minv[0, 0] == pytest.approx(np.conj(M[2, 2]))


def test_closure_and_inverse(group_elements):
    for M, N in zip(group_elements[:200], group_elements[200:400]):
        assert is_group_element(M @ N, 1e-10)
        assert np.abs(group_inverse(M) @ M - I3).max() < 1e-12 * max(1, np.abs(M).max() ** 2)


def test_form_invariance(group_elements, rng):
    for M in group_elements[:200]:
        z, w = rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3))
        assert abs(hermitian_product(M @ z, M @ w) - hermitian_product(z, w)) < 1e-10


def test_signature_preserved(group_elements, rng):
    for M in group_elements[:200]:
        v = rng.normal(size=3) + 1j * rng.normal(size=3)
        if abs(hermitian_product(v, v)) > 1e-8:
            assert vector_type(M @ v) is vector_type(v)


def test_normalize_det():
    assert np.allclose(normalize_det(I3), I3)
    # det(wI) = 1 already, so the result is I only projectively
    N = normalize_det(cmath.exp(2j * np.pi / 3) * I3)
    assert abs(np.linalg.det(N) - 1) < 1e-12 and projective_equal(N, I3, 1e-12)
    with pytest.raises(NotJUnitary):
        normalize_det(2 * I3)


def test_normalize_det_principal_branch(group_elements):
    M = group_elements[3]
    lam = cmath.exp(0.4j)
    N = normalize_det(lam * M)
    assert abs(np.linalg.det(N) - 1) < 1e-12
    assert projective_equal(N, M, 1e-12)


def test_projective_equal_examples(group_elements):
    M = group_elements[5]
    assert projective_equal(M, M)
    assert projective_equal(M, cmath.exp(2j * np.pi / 3) * M)
    assert not projective_equal(I3, LOX)


def test_projective_equal_is_equivalence(group_elements):
    w = cmath.exp(2j * np.pi / 3)
    base = group_elements[:4]
    sample = base + [w * M for M in base] + [w * w * M for M in base]
    eq = np.array([[projective_equal(a, b) for b in sample] for a in sample])
    assert eq.diagonal().all()
    assert (eq == eq.T).all()
    assert ((eq.astype(int) @ eq.astype(int) > 0) == eq).all()


def test_identity_distance():
    assert identity_distance(cmath.exp(-2j * np.pi / 3) * I3) < 1e-15
    assert identity_distance(LOX) == pytest.approx(E - 1)


def test_same_up_to_phase():
    v = np.array([1, 2j, 3])
    assert same_up_to_phase(cmath.exp(1.1j) * v, v)
    assert not same_up_to_phase(2 * v, v)
