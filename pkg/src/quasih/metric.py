"""Candidate metric operators Theta for the model Hamiltonians.

A metric must satisfy the intertwining relation H^T Theta = Theta H
together with Theta = Theta^T > 0.  For a real H the real symmetric
solutions form a linear space; :func:`metric_nullspace` computes a basis
of that space by SVD of the commutator map restricted to symmetric
matrices.  Only symmetric solutions are sought: for real H a complex
Hermitian solution splits into a real symmetric part (a solution) and an
antisymmetric imaginary part, and the positive-definiteness question
lives entirely in the symmetric sector.

For the one-parameter band model the closed four-parameter family
Theta(p, q, r, s) is available in closed form; inside the reality domain
the family contains positive-definite members, and the best achievable
conditioning degrades to zero as the exceptional point alpha^2 = 2/5 is
approached (the metric becomes singular on the domain boundary).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from quasih.model import _require_finite, build_alpha
from quasih.spectrum import Reality, numeric_energies

#: Default relative SVD threshold for nullspace rank decisions.
DEFAULT_RANK_TOL = 1e-10

#: Largest matrix dimension accepted by the nullspace solver.
MAX_NULLSPACE_DIM = 16


@dataclass(frozen=True)
class MetricFamily:
    """Basis of the symmetric solution space of H^T Theta = Theta H."""

    h: np.ndarray
    dim: int
    basis: tuple[np.ndarray, ...]
    residual: float


@dataclass(frozen=True)
class PositivityCertificate:
    """Best positive candidate found in a family's span.

    ``coefficients`` are the weights over the family basis of the
    reported candidate, normalized to unit largest eigenvalue of Theta;
    ``min_eigenvalue`` is its smallest eigenvalue after that
    normalization.  A negative result certifies failure only at the
    search resolution.
    """

    coefficients: tuple[float, ...]
    min_eigenvalue: float
    positive: bool


def _sym_basis(n: int) -> list[np.ndarray]:
    basis = []
    for i in range(n):
        for j in range(i, n):
            e = np.zeros((n, n))
            e[i, j] = e[j, i] = 1.0
            basis.append(e)
    return basis


def _unvec_sym(coeffs: np.ndarray, basis: list[np.ndarray]) -> np.ndarray:
    theta = np.zeros_like(basis[0])
    for c, e in zip(coeffs, basis):
        theta += c * e
    return theta


def _equation_residual(h: np.ndarray, theta: np.ndarray) -> float:
    num = np.max(np.abs(h.T @ theta - theta @ h))
    den = max(np.max(np.abs(h)) * np.max(np.abs(theta)), np.finfo(float).tiny)
    return num / den


def metric_nullspace(h: np.ndarray, rank_tol: float = DEFAULT_RANK_TOL) -> MetricFamily:
    """Basis of all real symmetric Theta with H^T Theta = Theta H.

    The map Theta -> H^T Theta - Theta H is assembled over the
    n(n+1)/2-dimensional symmetric sector and its nullspace is taken at
    singular values below rank_tol * sigma_max.  Near the domain
    boundary the nullspace is ill-conditioned, hence the exposed
    threshold.
    """
    h = np.asarray(h, dtype=float)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError("matrix must be square")
    n = h.shape[0]
    if n > MAX_NULLSPACE_DIM:
        raise ValueError(f"dimension {n} exceeds limit {MAX_NULLSPACE_DIM}")
    if rank_tol <= 0:
        raise ValueError("rank tolerance must be positive")

    basis = _sym_basis(n)
    k = np.column_stack([(h.T @ e - e @ h).ravel() for e in basis])
    _, sigma, vt = np.linalg.svd(k)
    if sigma.size and sigma[0] > 0:
        null_vectors = [vt[i] for i in range(len(sigma)) if sigma[i] <= rank_tol * sigma[0]]
    else:
        null_vectors = [vt[i] for i in range(len(sigma))]
    # Rows of vt beyond the singular spectrum are exact nullspace vectors.
    null_vectors += list(vt[len(sigma) :])

    family = []
    residual = 0.0
    for vec in null_vectors:
        theta = _unvec_sym(vec, basis)
        theta /= np.max(np.abs(theta))
        theta = 0.5 * (theta + theta.T)  # exact symmetry
        family.append(theta)
        residual = max(residual, _equation_residual(h, theta))
    return MetricFamily(h=h, dim=len(family), basis=tuple(family), residual=residual)


def closed_form_band_metric(
    alpha: float, p: float, q: float, r: float, s: float
) -> np.ndarray:
    """Closed-form metric Theta(p, q, r, s) for the band model H(alpha).

    Theta_22 = p, Theta_44 = q, Theta_13 = r and Theta_24 = s are free;
    the remaining entries follow from the sixteen intertwining
    conditions.  The published form of the Theta_33 entry is short by one
    s (its bracket reads +s where the equation forces +7s); the corrected
    entry used here satisfies H^T Theta = Theta H identically.
    Requires alpha != 0 (the formulas contain 1/alpha powers); the
    alpha -> 0 limit is the diagonal commutant, available through
    :func:`metric_nullspace`.
    """
    _require_finite(alpha=alpha, p=p, q=q, r=r, s=s)
    if alpha == 0.0:
        raise ValueError("alpha must be non-zero; use metric_nullspace at alpha=0")
    a2 = alpha * alpha
    t11 = (-9.0 * p + 3.0 * q + 10.0 * r + s) / 6.0 + (2.0 * r - s) / a2
    t14 = -(r + s) * alpha / 3.0
    t33 = (-3.0 * p - 3.0 * q + 4.0 * r + 7.0 * s) / 6.0 + s / a2
    t12 = alpha * (3.0 * p - 3.0 * q - 4.0 * r - s) / 6.0 + (-2.0 * r + s) / alpha
    t23 = alpha * (-3.0 * p + 3.0 * q + 2.0 * r - s) / 6.0 - s / alpha
    t34 = alpha * (3.0 * p - 3.0 * q - 4.0 * r - s) / 6.0 - s / alpha
    return np.array(
        [
            [t11, t12, r, t14],
            [t12, p, t23, s],
            [r, t23, t33, t34],
            [t14, s, t34, q],
        ]
    )


def _signed_min_eig(theta: np.ndarray) -> tuple[float, float]:
    """Smallest eigenvalue after scaling to unit largest eigenvalue.

    The overall sign of a family member is free, so both Theta and
    -Theta are considered; returns (normalized min eigenvalue, sign).
    """
    w = np.linalg.eigvalsh(theta)
    best, sign = -math.inf, 1.0
    if w[-1] > 0:
        best, sign = w[0] / w[-1], 1.0
    if w[0] < 0 and w[-1] / w[0] > best:
        best, sign = w[-1] / w[0], -1.0
    return best, sign


def _family_coefficients(fam: MetricFamily, theta: np.ndarray) -> np.ndarray:
    """Least-squares weights of Theta over the family basis."""
    mat = np.column_stack([e.ravel() for e in fam.basis])
    coeffs, *_ = np.linalg.lstsq(mat, theta.ravel(), rcond=None)
    return coeffs


def _candidate(fam: MetricFamily, coeffs: np.ndarray) -> np.ndarray:
    theta = sum(c * e for c, e in zip(coeffs, fam.basis))
    return 0.5 * (theta + theta.T)


def find_positive(
    fam: MetricFamily,
    n_random: int = 10_000,
    seed: int = 0,
    pos_tol: float = 1e-12,
) -> PositivityCertificate:
    """Search the family span for a positive-definite metric.

    When the spectrum of the underlying H is real and non-degenerate the
    left-eigenvector dyad sum Theta = sum_n u_n u_n^T is an exact member
    of the span and serves as the primary candidate; a random-restart
    search over basis coefficients (plus a local Nelder-Mead polish)
    covers the general case.  The returned min eigenvalue refers to the
    candidate normalized to unit largest eigenvalue; a negative result is
    a certificate of failure at this search resolution only.
    """
    if fam.dim < 1:
        raise ValueError("family must contain at least one basis element")
    rng = np.random.default_rng(seed)

    candidates: list[np.ndarray] = []

    spec = numeric_energies(fam.h)
    if spec.classification is Reality.ALL_REAL:
        # Left eigenvectors: rows of inv(V) for H = V diag(E) V^{-1}.
        w, v = np.linalg.eig(fam.h)
        if np.max(np.abs(w.imag)) < 1e-9:
            left = np.linalg.inv(v.real if np.max(np.abs(v.imag)) < 1e-9 else v)
            left = np.real(left)
            rows = left / np.linalg.norm(left, axis=1, keepdims=True)
            dyad = rows.T @ rows
            candidates.append(_family_coefficients(fam, dyad))

    candidates.extend(rng.standard_normal((n_random, fam.dim)))

    best_coeffs = None
    best_min = -math.inf
    for coeffs in candidates:
        coeffs = np.atleast_1d(np.asarray(coeffs, dtype=float))
        theta = _candidate(fam, coeffs)
        if np.max(np.abs(theta)) == 0.0:
            continue
        m, sign = _signed_min_eig(theta)
        if m > best_min:
            best_min, best_coeffs = m, sign * coeffs

    def objective(coeffs: np.ndarray) -> float:
        theta = _candidate(fam, coeffs)
        if np.max(np.abs(theta)) == 0.0:
            return 1.0
        return -_signed_min_eig(theta)[0]

    res = minimize(
        objective,
        best_coeffs,
        method="Nelder-Mead",
        options={"xatol": 1e-12, "fatol": 1e-14, "maxiter": 2000},
    )
    if -res.fun > best_min:
        m, sign = _signed_min_eig(_candidate(fam, res.x))
        best_min, best_coeffs = m, sign * res.x

    # Report coefficients scaled to unit largest eigenvalue of Theta.
    w = np.linalg.eigvalsh(_candidate(fam, best_coeffs))
    if w[-1] > 0:
        best_coeffs = np.asarray(best_coeffs) / w[-1]
    # Positivity below numerical noise cannot be certified (e.g. the
    # singular family at an exceptional point).
    return PositivityCertificate(
        coefficients=tuple(float(c) for c in np.atleast_1d(best_coeffs)),
        min_eigenvalue=float(best_min),
        positive=bool(best_min > pos_tol),
    )


#: Exceptional point of the band model.
ALPHA_CRITICAL = math.sqrt(2.0 / 5.0)


def boundary_degeneracy_profile(
    alphas, n_random: int = 2000, seed: int = 0
) -> list[tuple[float, float]]:
    """Best positive-metric conditioning along the band coupling.

    For each alpha in (0, sqrt(2/5)] the best positive Theta (unit
    largest eigenvalue) is searched and its smallest eigenvalue reported;
    the profile collapses toward zero as the exceptional point is
    approached.  At alpha = sqrt(2/5) exactly, H is defective and the
    profile value is NaN (flagged, not computed).
    """
    profile = []
    for alpha in alphas:
        if not 0.0 < alpha <= ALPHA_CRITICAL:
            raise ValueError("alpha must lie in (0, sqrt(2/5)]")
        if math.isclose(alpha, ALPHA_CRITICAL, rel_tol=0.0, abs_tol=1e-14):
            profile.append((alpha, math.nan))
            continue
        fam = metric_nullspace(build_alpha(alpha))
        cert = find_positive(fam, n_random=n_random, seed=seed)
        profile.append((alpha, cert.min_eigenvalue))
    return profile
