"""Small-coupling series of the band model and the spike expansion of the
domain boundary near its vertex.

The band energies admit the even series

    |E_3| = 3 - 2 alpha^2 - alpha^4 - (7/6) alpha^6 + O(alpha^8),
    |E_1| = 1 + alpha^4 + (3/2) alpha^6 + O(alpha^8),

which collide at the critical strength alpha = sqrt(2/5) where both pairs
merge at +-sqrt(13/5).

Near a vertex (a, c) = (+-2, +-sqrt(3)) of the two-parameter band model's
reality domain, the admissible parameters follow the ansatz

    a = a_vertex * (-1 + t + coef_a t^2 + O(t^3)),
    c = c_vertex * (-1 + t + coef_c t^2 + O(t^3)),   t >= 0,

and at leading order membership reduces to the band

    coef_c - 1/2 <= coef_a <= coef_c + 8/9,

with O(t) corrections to both edges: the domain is a narrow spike with
the vertex at its tip.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from quasih.domain import in_domain
from quasih.model import _require_finite
from quasih.spectrum import band_closed_energies

#: Supported truncation orders of the band series.
SERIES_ORDERS = (2, 4, 6)

#: Default policy bound on the spike expansion parameter t.
SPIKE_T_MAX = 0.2

#: Magnitudes of the vertex coordinates (a, c) = (+-2, +-sqrt(3)).
A_VERTEX = 2.0
C_VERTEX = math.sqrt(3.0)

_E3_COEFFS = {2: -2.0, 4: -1.0, 6: -7.0 / 6.0}
_E1_COEFFS = {2: 0.0, 4: 1.0, 6: 1.5}


@dataclass(frozen=True)
class SeriesCheck:
    """Truncation-error summary of a series over a coupling window."""

    order: int
    coefficients: tuple[float, ...]
    max_abs_error_over_window: float
    window: tuple[float, float]


@dataclass(frozen=True)
class SpikeAnsatz:
    """Second-order boundary ansatz near one vertex of the spike.

    ``corner`` is the sign pair (sign of a, sign of c) selecting one of
    the four vertices; the default (-1, -1) is the lower-left one.  The
    expansion parameter t must be non-negative, and values beyond the
    policy bound only draw a warning (the series degrades gracefully).
    """

    t: float
    coef_a: float
    coef_c: float
    corner: tuple[int, int] = (-1, -1)
    t_max: float = SPIKE_T_MAX

    def __post_init__(self):
        _require_finite(t=self.t, coef_a=self.coef_a, coef_c=self.coef_c)
        if self.t < 0.0:
            raise ValueError("spike parameter t must be non-negative")
        if self.corner[0] not in (-1, 1) or self.corner[1] not in (-1, 1):
            raise ValueError("corner must be a pair of signs (+-1, +-1)")
        if self.t > self.t_max:
            warnings.warn(
                f"t={self.t} exceeds the policy bound {self.t_max}; "
                "second-order accuracy degrades",
                stacklevel=2,
            )


def _series(alpha: float, base: float, coeffs: dict, order: int) -> float:
    if order not in SERIES_ORDERS:
        raise ValueError(f"order must be one of {SERIES_ORDERS}")
    _require_finite(alpha=alpha)
    value = base
    for k in SERIES_ORDERS:
        if k > order:
            break
        value += coeffs[k] * alpha**k
    return value


def band_series_E3(alpha: float, order: int) -> float:
    """Truncated series for |E_3|: 3 - 2a^2 - a^4 - (7/6)a^6."""
    return _series(alpha, 3.0, _E3_COEFFS, order)


def band_series_E1(alpha: float, order: int) -> float:
    """Truncated series for |E_1|: 1 + a^4 + (3/2)a^6 (no quadratic term)."""
    return _series(alpha, 1.0, _E1_COEFFS, order)


def _band_exact(alpha: float, which: int) -> float:
    energies = band_closed_energies(alpha).energies
    mags = sorted(abs(e) for e in energies)
    # Two +- pairs: small pair |E_1|, large pair |E_3|.
    return mags[0] if which == 1 else mags[-1]


def series_scaling_check(
    which: int, order: int, window: tuple[float, float] = (0.0, 0.25), n: int = 50
) -> SeriesCheck:
    """Measure the truncation error of a band series over a window.

    The next omitted term is O(alpha^(order+2)), so halving alpha should
    shrink the error by about 2^(order+2).
    """
    if which not in (1, 3):
        raise ValueError("which must be 1 or 3")
    series = band_series_E1 if which == 1 else band_series_E3
    coeffs = _E1_COEFFS if which == 1 else _E3_COEFFS
    lo, hi = window
    alphas = np.linspace(lo, hi, n + 1)[1:]
    err = max(abs(series(al, order) - _band_exact(al, which)) for al in alphas)
    return SeriesCheck(
        order=order,
        coefficients=tuple(coeffs[k] for k in SERIES_ORDERS if k <= order),
        max_abs_error_over_window=err,
        window=window,
    )


def critical_strength() -> tuple[float, float]:
    """Critical band coupling and collision energy (sqrt(2/5), sqrt(13/5)).

    Self-checks that the discriminant 5a^4 - 12a^2 + 4 vanishes there and
    that the numeric spectrum consists of two doubly degenerate levels.
    """
    alpha_cs = math.sqrt(0.4)
    e_cs = math.sqrt(2.6)
    disc = 5.0 * alpha_cs**4 - 12.0 * alpha_cs**2 + 4.0
    if abs(disc) > 1e-12:
        raise RuntimeError(f"discriminant check failed: {disc}")
    from quasih.model import build_alpha
    from quasih.spectrum import numeric_energies

    energies = sorted(numeric_energies(build_alpha(alpha_cs)).energies, key=lambda z: z.real)
    pairs_ok = (
        abs(energies[0] - energies[1]) < 1e-6
        and abs(energies[2] - energies[3]) < 1e-6
        and abs(energies[0].real + e_cs) < 1e-6
        and abs(energies[3].real - e_cs) < 1e-6
    )
    if not pairs_ok:
        raise RuntimeError("degenerate-pair check failed at the critical strength")
    return alpha_cs, e_cs


def spike_point(ansatz: SpikeAnsatz) -> tuple[float, float]:
    """Parameter-plane point (a, c) of the spike ansatz.

    At t = 0 this is the chosen vertex itself, e.g. (-2, -sqrt(3)) for
    the default lower-left corner.
    """
    s_a, s_c = ansatz.corner
    t = ansatz.t
    a = s_a * A_VERTEX * (1.0 - t - ansatz.coef_a * t * t)
    c = s_c * C_VERTEX * (1.0 - t - ansatz.coef_c * t * t)
    return a, c


def spike_membership(coef_a: float, coef_c: float, t: float) -> bool:
    """Leading-order membership predictor for the spike ansatz.

    True iff t >= 0 and coef_c - 1/2 <= coef_a <= coef_c + 8/9; this
    approximates the exact verdict at the spike point with O(t)-wide
    fuzz bands around both edges.  t = 0 (the vertex itself) is inside
    by convention: the vertex belongs to the closed domain.
    """
    _require_finite(coef_a=coef_a, coef_c=coef_c, t=t)
    if t < 0.0:
        return False
    return coef_c - 0.5 <= coef_a <= coef_c + 8.0 / 9.0


def _exact_inside(coef_a: float, coef_c: float, t: float, corner=(-1, -1)) -> bool:
    a, c = spike_point(SpikeAnsatz(t=t, coef_a=coef_a, coef_c=coef_c, corner=corner))
    return in_domain(a, 0.0, c).inside


def spike_band_edges(
    coef_c: float,
    t: float,
    corner: tuple[int, int] = (-1, -1),
    span: float = 2.0,
    tol: float = 1e-10,
) -> tuple[float, float]:
    """Exact admissible coef_a interval at fixed coef_c and t.

    Bisects the exact membership verdict (via :func:`in_domain` at the
    spike point) outward from coef_a = coef_c, which is always inside.
    As t -> 0 the interval converges to
    [coef_c - 1/2, coef_c + 8/9] with edge offsets shrinking linearly.
    """
    if t <= 0.0:
        raise ValueError("edge measurement needs t > 0")
    if not _exact_inside(coef_c, coef_c, t, corner):
        raise RuntimeError("center of the coef_a sweep is unexpectedly outside")

    def bisect(lo: float, hi: float) -> float:
        # membership holds at lo-side point closer to coef_c, fails at hi.
        while abs(hi - lo) > tol:
            mid = 0.5 * (lo + hi)
            if _exact_inside(mid, coef_c, t, corner):
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    if _exact_inside(coef_c + span, coef_c, t, corner):
        raise RuntimeError("upper sweep limit still inside; enlarge span")
    if _exact_inside(coef_c - span, coef_c, t, corner):
        raise RuntimeError("lower sweep limit still inside; enlarge span")
    upper = bisect(coef_c, coef_c + span)
    lower = bisect(coef_c, coef_c - span)
    return lower, upper
