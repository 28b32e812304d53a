import math

import numpy as np
import pytest

from quasih import (
    Reality,
    boundary_degeneracy_profile,
    build_alpha,
    closed_form_band_metric,
    find_positive,
    metric_nullspace,
    numeric_energies,
)
from quasih.metric import ALPHA_CRITICAL


def equation_residual(h, theta):
    return np.max(np.abs(h.T @ theta - theta @ h))


def projection_residual(fam, theta):
    mat = np.column_stack([e.ravel() for e in fam.basis])
    coeffs, *_ = np.linalg.lstsq(mat, theta.ravel(), rcond=None)
    return np.max(np.abs(mat @ coeffs - theta.ravel()))


def test_diagonal_commutant():
    h = np.diag([-3.0, -1.0, 1.0, 3.0])
    fam = metric_nullspace(h)
    assert fam.dim == 4
    assert fam.residual <= 1e-12
    # span contains the four diagonal unit matrices
    for k in range(4):
        e = np.zeros((4, 4))
        e[k, k] = 1.0
        assert projection_residual(fam, e) <= 1e-10


def test_band_family_dimension_and_residual():
    rng = np.random.default_rng(7)
    for alpha in rng.uniform(0.01, 0.6, size=10):
        fam = metric_nullspace(build_alpha(alpha))
        assert fam.dim == 4
        for theta in fam.basis:
            np.testing.assert_array_equal(theta, theta.T)
            assert equation_residual(fam.h, theta) <= 1e-9 * np.max(
                np.abs(fam.h)
            ) * np.max(np.abs(theta))


def test_closed_form_satisfies_equation():
    h = build_alpha(0.5)
    theta = closed_form_band_metric(0.5, 1.0, 1.0, 0.0, 0.0)
    assert theta[0, 3] == 0.0 and theta[0, 2] == 0.0
    assert equation_residual(h, theta) <= 1e-12
    np.testing.assert_array_equal(theta, theta.T)


def test_closed_form_in_nullspace_span():
    rng = np.random.default_rng(3)
    alpha = 0.3
    fam = metric_nullspace(build_alpha(alpha))
    for _ in range(20):
        p, q, r, s = rng.uniform(-2, 2, size=4)
        theta = closed_form_band_metric(alpha, p, q, r, s)
        assert projection_residual(fam, theta) <= 1e-9 * max(1.0, np.max(np.abs(theta)))


def test_closed_form_free_entries():
    theta = closed_form_band_metric(0.3, 1.5, -0.5, 0.25, -0.75)
    assert theta[1, 1] == 1.5
    assert theta[3, 3] == -0.5
    assert theta[0, 2] == 0.25
    assert theta[1, 3] == -0.75


def test_closed_form_rejects_zero_alpha():
    with pytest.raises(ValueError):
        closed_form_band_metric(0.0, 1, 1, 0, 0)


def test_nullspace_at_exceptional_point():
    # defective H: the symmetric solution space degenerates; record that
    # the family no longer contains a positive-definite member
    fam = metric_nullspace(build_alpha(ALPHA_CRITICAL))
    assert fam.dim >= 1
    cert = find_positive(fam, n_random=2000)
    assert not cert.positive


def test_positive_inside_domain():
    fam = metric_nullspace(build_alpha(0.3))
    cert = find_positive(fam)
    assert cert.positive
    assert cert.min_eigenvalue > 0
    # the certificate's coefficients reproduce a positive-definite Theta
    theta = sum(c * e for c, e in zip(cert.coefficients, fam.basis))
    w = np.linalg.eigvalsh(theta)
    assert w[0] > 0
    assert w[-1] == pytest.approx(1.0, rel=1e-6)


def test_no_positive_outside_domain():
    fam = metric_nullspace(build_alpha(0.7))
    assert numeric_energies(fam.h).classification is Reality.COMPLEX_PAIRS
    cert = find_positive(fam)
    assert not cert.positive
    assert cert.min_eigenvalue <= 0


def test_positivity_threshold_brackets_critical_coupling():
    delta = 1e-3
    inside = find_positive(metric_nullspace(build_alpha(math.sqrt(0.4 - delta))))
    outside = find_positive(metric_nullspace(build_alpha(math.sqrt(0.4 + delta))))
    assert inside.positive
    assert not outside.positive


def test_degeneracy_profile_collapses_at_boundary():
    profile = boundary_degeneracy_profile([0.01, 0.3, 0.632])
    assert profile[0][1] > 0.5  # near-diagonal regime
    assert profile[1][1] > 0.0
    assert profile[2][1] < 1e-2  # nearly singular close to the boundary


def test_degeneracy_profile_flags_exceptional_point():
    profile = boundary_degeneracy_profile([ALPHA_CRITICAL])
    assert math.isnan(profile[0][1])


def test_degeneracy_profile_rejects_out_of_range():
    with pytest.raises(ValueError):
        boundary_degeneracy_profile([0.7])


def test_nullspace_rejects_bad_input():
    with pytest.raises(ValueError):
        metric_nullspace(np.zeros((3, 4)))
    with pytest.raises(ValueError):
        metric_nullspace(np.eye(17))
    with pytest.raises(ValueError):
        metric_nullspace(np.eye(4), rank_tol=0.0)
