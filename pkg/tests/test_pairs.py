import cmath
import itertools
import math

import numpy as np
import pytest

from chyp.errors import InvalidSpec, LinesIntersect, OrderTooSmall, WrongSignature
from chyp.hermitian import group_inverse, hermitian_product, is_group_element, same_up_to_phase
from chyp.isometries import EllipticKind, IsometryClass, classify, fixed_locus, order_of_elliptic
from chyp.pairs import (
    PairSpec,
    closed_form_line_pair,
    expected_fixed_loci,
    line_line_distance,
    line_point_distance,
    locus_distance,
    make_conjugators,
    make_pair,
    make_u,
    point_point_distance,
)
from chyp.siegel import bergman_distance, project

KINDS = list(itertools.product(["line", "point"], repeat=2))


def test_make_u_examples():
    assert np.allclose(make_u(3), np.diag(np.exp(1j * np.pi * np.array([-2, 4, -2]) / 9)))
    assert order_of_elliptic(make_u(5)) == 5
    for k in (3, 4):
        assert same_up_to_phase(fixed_locus(make_u(k)).vector, [0, 1, 0])
    with pytest.raises(OrderTooSmall):
        make_u(2)


def test_conjugators_at_omega_one():
    A, _ = make_conjugators(1.0)
    r = 1 / math.sqrt(2)
    # the leading entry carries a minus sign; with +1/2 the matrix is not J-unitary
    assert np.allclose(A, [[-0.5, r, 0.5], [r, 0, r], [0.5, r, -0.5]])


@pytest.mark.parametrize("delta, phi", [(0.6, 0.0), (1.2, 0.7), (3.0, -2.0)])
def test_conjugators_in_su21(delta, phi):
    A, B = make_conjugators(cmath.exp(complex(delta, phi) / 2))
    assert is_group_element(A) and is_group_element(B)
    if phi:
        assert not np.allclose(A, B)


def test_spec_validation():
    with pytest.raises(OrderTooSmall):
        PairSpec(2, 3, 1.0)
    with pytest.raises(InvalidSpec):
        PairSpec(3, 3, 0.0)
    with pytest.raises(InvalidSpec):
        PairSpec(3, 3, 1.0, kind_f="plane")
    s = PairSpec(4, 3, 1.2, 0.7)
    assert abs(s.omega) == pytest.approx(s.omega_abs)
    assert s.omega**2 == pytest.approx(cmath.exp(1.2 + 0.7j))
    assert PairSpec.from_json(s.to_json()) == s


def test_middle_entry():
    F, _ = make_pair(PairSpec(3, 3, 1.2))
    assert F[1, 1] == pytest.approx(cmath.exp(-2j * math.pi / 9))


@pytest.mark.parametrize("m, n", [(3, 3), (4, 3), (7, 5)])
@pytest.mark.parametrize("kinds", KINDS)
def test_orders_and_classes(m, n, kinds):
    F, G = make_pair(PairSpec(m, n, 1.2, 0.4, *kinds))
    assert order_of_elliptic(F) == m and order_of_elliptic(G) == n
    want = {"line": IsometryClass.BOUNDARY_ELLIPTIC, "point": IsometryClass.POINT_REFLECTION}
    assert classify(F) is want[kinds[0]] and classify(G) is want[kinds[1]]
    assert is_group_element(F) and is_group_element(G)


@pytest.mark.parametrize("m, n", [(3, 3), (5, 4), (9, 3)])
@pytest.mark.parametrize("delta", [0.2, 1.0, 3.5])
def test_closed_forms(m, n, delta):
    for phi in (0.0, 1.1):
        F, G = make_pair(PairSpec(m, n, delta, phi))
        Fc, Gc = closed_form_line_pair(m, n, math.exp(delta / 2))
        assert np.abs(F - Fc).max() < 1e-12 and np.abs(G - Gc).max() < 1e-12


def test_phase_independence():
    F0, G0 = make_pair(PairSpec(5, 3, 0.8, 0.0, "point", "line"))
    F1, G1 = make_pair(PairSpec(5, 3, 0.8, 2.1, "point", "line"))
    assert np.abs(F0 - F1).max() < 1e-12 and np.abs(G0 - G1).max() < 1e-12


def test_conjugation_coherence():
    spec = PairSpec(4, 3, 1.5, 0.3)
    A, B = make_conjugators(spec.omega)
    F, G = make_pair(spec)
    assert np.abs(F - A @ make_u(4) @ group_inverse(A)).max() < 1e-10
    assert np.abs(G - B @ make_u(3) @ group_inverse(B)).max() < 1e-10


@pytest.mark.parametrize("kinds", KINDS)
def test_fixed_loci_match_and_are_fixed(kinds):
    spec = PairSpec(5, 4, 1.2, 0.7, *kinds)
    F, G = make_pair(spec)
    for X, exp in zip((F, G), expected_fixed_loci(spec)):
        got = fixed_locus(X)
        assert got.kind is exp.kind
        assert same_up_to_phase(got.vector, exp.vector, 1e-9)
        v = exp.vector
        lam = (X @ v)[np.argmax(abs(v))] / v[np.argmax(abs(v))]
        assert abs(abs(lam) - 1) < 1e-9 and np.abs(X @ v - lam * v).max() < 1e-9


def test_line_polar_vector_closed_form():
    spec = PairSpec(3, 3, 1.2, 0.7)
    w = spec.omega
    p_f = np.array([cmath.sqrt(w / 2), 0, 1 / np.conj(cmath.sqrt(2 * w))])
    assert same_up_to_phase(fixed_locus(make_pair(spec)[0]).vector, p_f)
    assert hermitian_product(p_f, p_f) == pytest.approx(1)


def test_line_line_examples():
    p = np.array([0, 1, 0])
    assert line_line_distance(p, p) == 0
    for phi in (0.0, 0.7):
        f, g = expected_fixed_loci(PairSpec(3, 3, 1.2, phi))
        assert line_line_distance(f.vector, g.vector) == pytest.approx(1.2, abs=1e-12)


def test_lines_intersect():
    p = np.array([0, 1, 0])
    q = np.array([1, 0, 1]) / math.sqrt(2)  # unit positive, orthogonal to p
    with pytest.raises(LinesIntersect):
        line_line_distance(p, q)
    with pytest.raises(WrongSignature):
        line_line_distance(p, [1, 0, -1])


def test_line_point_examples():
    assert line_point_distance([0, 1, 0], np.array([1, 0, -1]) / math.sqrt(2)) == pytest.approx(0, abs=1e-15)
    d = [locus_distance(*expected_fixed_loci(PairSpec(3, 3, delta, 0, "line", "point"))) for delta in (0.9, 1.8)]
    assert d[0] == pytest.approx(0.9) and d[1] == pytest.approx(2 * d[0], abs=1e-9)
    with pytest.raises(WrongSignature):
        line_point_distance([0, 1, 0], [0, 1, 0])


def test_point_point_examples(rng):
    v = np.array([1, 0, -1]) / math.sqrt(2)
    assert point_point_distance(v, v) == 0
    f, g = expected_fixed_loci(PairSpec(3, 3, 1.4, 0, "point", "point"))
    assert point_point_distance(f.vector, g.vector) == pytest.approx(1.4)
    for _ in range(100):
        p, q = rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3))
        p[2] = q[2] = 1
        p[0] = -abs(p[1]) ** 2 / 2 - rng.uniform(0.1, 2) + 1j * p[0].imag
        q[0] = -abs(q[1]) ** 2 / 2 - rng.uniform(0.1, 2) + 1j * q[0].imag
        assert point_point_distance(p, q) == pytest.approx(bergman_distance(project(p), project(q)), abs=1e-9)


def _line_point_foot(p_line, q):
    return q - hermitian_product(q, p_line) / hermitian_product(p_line, p_line) * p_line


def _points_on_invariant_line(spec):
    """Where each fixed locus meets the complex line with polar (0,1,0), both generators preserve it."""
    out = []
    for loc in expected_fixed_loci(spec):
        v = loc.vector
        if loc.kind is EllipticKind.POINT:
            out.append(v)
        else:
            # negative vector (x, 0, 1) with <(x,0,1), p> = 0
            x = -np.conj(v[0]) / np.conj(v[2])
            out.append(np.array([x, 0, 1]))
    return out


@pytest.mark.parametrize("kinds", KINDS)
@pytest.mark.parametrize("delta, phi", [(0.3, 0.0), (1.2, 0.7), (2.5, -1.0)])
def test_distance_agrees_with_bergman_on_common_perpendicular(kinds, delta, phi):
    spec = PairSpec(4, 5, delta, phi, *kinds)
    a, b = _points_on_invariant_line(spec)
    assert bergman_distance(project(a), project(b)) == pytest.approx(delta, abs=1e-9)
    assert locus_distance(*expected_fixed_loci(spec)) == pytest.approx(delta, abs=1e-9)


def test_line_point_distance_is_distance_to_foot(rng):
    f, g = expected_fixed_loci(PairSpec(3, 4, 1.7, 0.2, "line", "point"))
    foot = _line_point_foot(f.vector, g.vector)
    assert bergman_distance(project(foot), project(g.vector)) == pytest.approx(1.7, abs=1e-9)
