"""Spectra, quasi-Hermiticity domain and metric operators of a PT-symmetric
four-level matrix model with couplings (a, b, c, d).

The library is organized around small pure functions on numpy arrays:

- :mod:`quasih.model` builds the Hamiltonian matrices (full 4x4, reordered
  band form, one-parameter band special case, two-state toy model).
- :mod:`quasih.secular` evaluates the quartic secular polynomial and its
  invariants, including the hyperbola factorization of the constant term.
- :mod:`quasih.spectrum` produces the four energies, by closed formulas or
  numerically, and classifies their reality.
- :mod:`quasih.domain` decides membership in the quasi-Hermiticity domain,
  locates the points of maximal non-Hermiticity and traces the boundary.
- :mod:`quasih.metric` constructs the family of candidate metrics and
  certifies positive definiteness.
- :mod:`quasih.perturb` holds the small-coupling series and the spike
  expansion of the domain boundary near its vertex.
- :mod:`quasih.cli` is the command-line front end.
"""

from quasih.model import (
    ParamPoint,
    build_two_state,
    build_full,
    build_reordered,
    build_band,
    build_alpha,
    harmonic_diag,
)
from quasih.secular import (
    SecularInvariants,
    secular_coeffs,
    constant_term,
    reduced_AB,
    hyperbola_factors,
)
from quasih.spectrum import (
    Reality,
    Spectrum,
    closed_form_energies,
    band_closed_energies,
    numeric_energies,
    quartic_energies,
    classify_reality,
)
from quasih.domain import (
    DomainVerdict,
    PMNPoint,
    GridScan,
    in_domain,
    in_domain_rotated,
    pmn_points,
    boundary_trace_ray,
    scan_grid,
    figure1_geometry,
)
from quasih.metric import (
    MetricFamily,
    PositivityCertificate,
    metric_nullspace,
    closed_form_band_metric,
    find_positive,
    boundary_degeneracy_profile,
)
from quasih.perturb import (
    SpikeAnsatz,
    SeriesCheck,
    band_series_E1,
    band_series_E3,
    series_scaling_check,
    critical_strength,
    spike_point,
    spike_membership,
    spike_band_edges,
)

__version__ = "0.1.0"

__all__ = [
    "ParamPoint",
    "build_two_state",
    "build_full",
    "build_reordered",
    "build_band",
    "build_alpha",
    "harmonic_diag",
    "SecularInvariants",
    "secular_coeffs",
    "constant_term",
    "reduced_AB",
    "hyperbola_factors",
    "Reality",
    "Spectrum",
    "closed_form_energies",
    "band_closed_energies",
    "numeric_energies",
    "quartic_energies",
    "classify_reality",
    "DomainVerdict",
    "PMNPoint",
    "GridScan",
    "in_domain",
    "in_domain_rotated",
    "pmn_points",
    "boundary_trace_ray",
    "scan_grid",
    "figure1_geometry",
    "MetricFamily",
    "PositivityCertificate",
    "metric_nullspace",
    "closed_form_band_metric",
    "find_positive",
    "boundary_degeneracy_profile",
    "SpikeAnsatz",
    "SeriesCheck",
    "band_series_E1",
    "band_series_E3",
    "series_scaling_check",
    "critical_strength",
    "spike_point",
    "spike_membership",
    "spike_band_edges",
]
