"""Groups generated by two elliptic elements of PU(2,1).

SU(2,1) arithmetic for the form with J = antidiag-plus-middle, the Siegel
domain and Heisenberg boundary, Ford isometric spheres, the aligned pair of
complex reflections f, g, a free-product certificate, and a reduced-word
oracle that cross-checks it.
"""
from .certify import CertificateReport, Verdict, certify_elements, certify_spec, critical_delta, threshold
from .heisenberg import HeisenbergPoint, cygan_distance, heis_inv, heis_mul, heis_norm, heis_translate
from .hermitian import (
    J,
    VectorType,
    group_inverse,
    hermitian_product,
    is_group_element,
    normalize_det,
    projective_equal,
    vector_type,
)
from .isometries import (
    EllipticKind,
    FixedLocus,
    IsometryClass,
    boundary_elliptic_normal_form,
    classify,
    fixed_locus,
    order_of_elliptic,
    regular_elliptic_normal_form,
)
from .pairs import (
    PairSpec,
    line_line_distance,
    line_point_distance,
    make_conjugators,
    make_pair,
    make_u,
    point_point_distance,
)
from .siegel import INFINITY, SiegelPoint, apply, bergman_distance, lift, project
from .spheres import CyganSphere, bounding_spheres, containment_holds, isometric_sphere, sphere_residual
from .words import FreenessReport, ReducedWord, enumerate_reduced_words, evaluate_word, verify_freeness
