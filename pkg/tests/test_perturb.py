import math

import numpy as np
import pytest

from quasih import (
    Reality,
    SpikeAnsatz,
    band_closed_energies,
    band_series_E1,
    band_series_E3,
    critical_strength,
    in_domain,
    series_scaling_check,
    spike_band_edges,
    spike_membership,
    spike_point,
)


def exact_band_mags(alpha):
    mags = sorted(abs(e) for e in band_closed_energies(alpha).energies)
    return mags[0], mags[-1]


def test_series_values_at_zero():
    assert band_series_E3(0.0, 6) == 3.0
    assert band_series_E1(0.0, 6) == 1.0


def test_series_no_quadratic_term_in_E1():
    assert band_series_E1(0.1, 2) == 1.0


def test_series_small_alpha_against_closed_form():
    alpha = 0.1
    e1_exact, e3_exact = exact_band_mags(alpha)
    assert abs(band_series_E3(alpha, 6) - e3_exact) <= 5e-8
    assert abs(band_series_E1(alpha, 6) - e1_exact) <= 5e-8
    assert band_series_E3(alpha, 6) == pytest.approx(
        3 - 0.02 - 1e-4 - (7 / 6) * 1e-6, abs=1e-15
    )


@pytest.mark.parametrize("which", [1, 3])
@pytest.mark.parametrize("order", [2, 4, 6])
def test_series_error_order_scaling(which, order):
    series = band_series_E1 if which == 1 else band_series_E3

    def err(alpha):
        exact = exact_band_mags(alpha)[0 if which == 1 else 1]
        return abs(series(alpha, order) - exact)

    # halving alpha shrinks the error by >= 2^(order+1), within 20%
    ratio = err(0.2) / err(0.1)
    assert ratio >= 0.8 * 2 ** (order + 1)


def test_series_scaling_check_window():
    for which in (1, 3):
        chk = series_scaling_check(which, 6)
        assert chk.window == (0.0, 0.25)
        # next omitted term is O(alpha^8): coefficient of modest size
        assert chk.max_abs_error_over_window < 1e-3


def test_series_rejects_unsupported_order():
    with pytest.raises(ValueError):
        band_series_E3(0.1, 5)


def test_critical_strength_values():
    alpha_cs, e_cs = critical_strength()
    assert abs(alpha_cs**2 - 0.4) <= 1e-12
    assert abs(e_cs - 1.612451550) <= 5e-10


def test_discriminant_factorization():
    # 5 (x - 2/5)(x - 2) = 5 x^2 - 12 x + 4 with x = alpha^2
    for alpha in np.linspace(0.0, 2.0, 41):
        x = alpha * alpha
        lhs = 5.0 * (x - 0.4) * (x - 2.0)
        rhs = 5.0 * x * x - 12.0 * x + 4.0
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


def test_complexification_just_past_critical():
    alpha_cs, _ = critical_strength()
    spec = band_closed_energies(alpha_cs + 1e-3)
    assert spec.classification is Reality.COMPLEX_PAIRS


def test_spike_point_at_vertex():
    ansatz = SpikeAnsatz(t=0.0, coef_a=0.0, coef_c=0.0)
    a, c = spike_point(ansatz)
    assert (a, c) == (-2.0, -math.sqrt(3.0))


def test_spike_point_linear_term_only():
    ansatz = SpikeAnsatz(t=0.05, coef_a=0.0, coef_c=0.0)
    a, c = spike_point(ansatz)
    assert a == pytest.approx(-2.0 * 0.95, abs=1e-15)
    assert c == pytest.approx(-math.sqrt(3.0) * 0.95, abs=1e-15)


def test_spike_vertex_saturates_sphere():
    assert 2.0**2 + 2.0 * (math.sqrt(3.0)) ** 2 == pytest.approx(10.0, abs=1e-12)


def test_spike_ansatz_validation():
    with pytest.raises(ValueError):
        SpikeAnsatz(t=-0.01, coef_a=0.0, coef_c=0.0)
    with pytest.raises(ValueError):
        SpikeAnsatz(t=0.01, coef_a=0.0, coef_c=0.0, corner=(0, 1))
    with pytest.warns(UserWarning):
        SpikeAnsatz(t=0.5, coef_a=0.0, coef_c=0.0)


def test_spike_membership_leading_order():
    assert spike_membership(0.0, 0.0, 0.01)
    assert spike_membership(0.3, 0.3, 0.0)  # vertex inside by convention
    assert not spike_membership(1.0, 0.0, 0.01)  # 1 > 8/9
    assert not spike_membership(-0.6, 0.0, 0.01)  # -0.6 < -1/2
    assert not spike_membership(0.0, 0.0, -0.01)


def test_spike_predictor_agrees_away_from_edges():
    coef_c, t = 0.3, 0.02
    lower, upper = spike_band_edges(coef_c, t)
    for coef_a in np.linspace(coef_c - 1.0, coef_c + 1.5, 51):
        predicted = spike_membership(coef_a, coef_c, t)
        a, c = spike_point(SpikeAnsatz(t=t, coef_a=coef_a, coef_c=coef_c))
        exact = in_domain(a, 0.0, c).inside
        # disagreement only inside the O(t) fuzz bands around the edges
        near_edge = (
            abs(coef_a - (coef_c + 8.0 / 9.0)) < 5 * t
            or abs(coef_a - (coef_c - 0.5)) < 5 * t
        )
        if predicted != exact:
            assert near_edge
        assert exact == (lower <= coef_a <= upper)


def test_spike_edges_converge_linearly():
    coef_c = 0.3
    upper_offsets, lower_offsets = [], []
    for t in (0.02, 0.01, 0.005):
        lower, upper = spike_band_edges(coef_c, t)
        upper_offsets.append(upper - (coef_c + 8.0 / 9.0))
        lower_offsets.append((coef_c - 0.5) - lower)
    for offsets in (upper_offsets, lower_offsets):
        assert all(o > 0 for o in offsets)
        assert offsets[0] / offsets[1] == pytest.approx(2.0, rel=0.3)
        assert offsets[1] / offsets[2] == pytest.approx(2.0, rel=0.3)
    # linear fit through (t, offset) has negligible intercept
    ts = np.array([0.02, 0.01, 0.005])
    slope, intercept = np.polyfit(ts, np.array(upper_offsets), 1)
    assert abs(intercept) <= 1e-3
    assert math.isfinite(slope)


def test_spike_edges_need_positive_t():
    with pytest.raises(ValueError):
        spike_band_edges(0.0, 0.0)
