"""Energy spectra of the model Hamiltonians and their reality class.

The general solver goes through ``numpy.linalg.eigvals`` (companion-style
QR on the matrix itself); the closed biquadratic formula

    E = +-sqrt(A +- sqrt(A^2 - B))

for the c^2 = d^2 model is kept as an independent cross-check, with
principal square roots continued to complex arguments.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from quasih.model import _require_finite
from quasih.secular import reduced_AB

#: Default absolute tolerance on |Im E| for reality decisions.
DEFAULT_REALITY_TOL = 1e-9

#: Largest matrix dimension accepted by the numeric solver.
MAX_DIM = 64


class Reality(enum.Enum):
    """Reality classification of a spectrum."""

    ALL_REAL = "AllReal"
    REAL_DEGENERATE = "RealDegenerate"
    COMPLEX_PAIRS = "ComplexPairs"


@dataclass(frozen=True)
class Spectrum:
    """Energies sorted by (real part, imaginary part), with classification."""

    energies: tuple[complex, ...]
    classification: Reality
    max_imag: float


def _sorted_energies(roots) -> tuple[complex, ...]:
    return tuple(sorted((complex(z) for z in roots), key=lambda z: (z.real, z.imag)))


def classify_reality(energies, tol: float = DEFAULT_REALITY_TOL) -> Reality:
    """Classify a multiset of energies.

    All-real requires every |Im E| < tol and every pairwise gap > tol;
    real spectra with a gap at or below tol are degenerate; anything with
    a larger imaginary part is a complex-pair spectrum.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    zs = [complex(z) for z in energies]
    max_imag = max(abs(z.imag) for z in zs)
    if max_imag >= tol:
        return Reality.COMPLEX_PAIRS
    min_gap = min((abs(u - v) for u, v in combinations(zs, 2)), default=math.inf)
    if min_gap <= tol:
        return Reality.REAL_DEGENERATE
    return Reality.ALL_REAL


def spectrum_from_roots(roots, tol: float = DEFAULT_REALITY_TOL) -> Spectrum:
    """Package raw roots into a sorted, classified :class:`Spectrum`."""
    energies = _sorted_energies(roots)
    return Spectrum(
        energies=energies,
        classification=classify_reality(energies, tol),
        max_imag=max(abs(z.imag) for z in energies),
    )


def closed_form_energies(
    a: float, b: float, d: float, tol: float = DEFAULT_REALITY_TOL
) -> Spectrum:
    """Closed-form energies of the c^2 = d^2 model.

    E = +-sqrt(A +- sqrt(A^2 - B)) with principal complex square roots;
    complex results are valid outputs, classified accordingly.
    """
    A, B = reduced_AB(a, b, d)
    inner = cmath.sqrt(complex(A * A - B))
    roots = []
    for sign_inner in (1.0, -1.0):
        e = cmath.sqrt(A + sign_inner * inner)
        roots.extend([e, -e])
    return spectrum_from_roots(roots, tol)


def band_closed_energies(alpha: float, tol: float = DEFAULT_REALITY_TOL) -> Spectrum:
    """Closed-form energies of the one-parameter band model.

    E_{+-1} = +-sqrt(5 - 6 alpha^2 - 2 sqrt(5 alpha^4 - 12 alpha^2 + 4))
    and E_{+-3} with the + branch, continued to complex values past the
    critical strength alpha^2 = 2/5.
    """
    _require_finite(alpha=alpha)
    disc = cmath.sqrt(complex(5.0 * alpha**4 - 12.0 * alpha**2 + 4.0))
    roots = []
    for sign_inner in (1.0, -1.0):
        e = cmath.sqrt(-6.0 * alpha**2 + 5.0 + 2.0 * sign_inner * disc)
        roots.extend([e, -e])
    return spectrum_from_roots(roots, tol)


def quartic_energies(
    e2: float, e1: float, e0: float, tol: float = DEFAULT_REALITY_TOL
) -> Spectrum:
    """Roots of the secular quartic E^4 + e2 E^2 + e1 E + e0.

    Solved through the companion-matrix eigenvalues (robust, no radical
    formulas).  Working from the secular coefficients rather than the
    Hamiltonian matrix avoids the fourth-root amplification of entry
    rounding near quadruple degeneracies.
    """
    _require_finite(e2=e2, e1=e1, e0=e0)
    return spectrum_from_roots(np.roots([1.0, 0.0, e2, e1, e0]), tol)


def numeric_energies(h: np.ndarray, tol: float = DEFAULT_REALITY_TOL) -> Spectrum:
    """Eigenvalues of a real square matrix as a classified spectrum."""
    h = np.asarray(h, dtype=float)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError("matrix must be square")
    if h.shape[0] > MAX_DIM:
        raise ValueError(f"dimension {h.shape[0]} exceeds limit {MAX_DIM}")
    if not np.all(np.isfinite(h)):
        raise ValueError("matrix entries must be finite")
    return spectrum_from_roots(np.linalg.eigvals(h), tol)
