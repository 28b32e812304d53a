"""Metric operators of the band model: the four-parameter family, a
positivity certificate inside the reality domain, and the collapse of
conditioning at the exceptional point alpha = sqrt(2/5).

Run with:  python3 demos/demo_metric.py
"""

import numpy as np

from quasih import (
    boundary_degeneracy_profile,
    build_alpha,
    closed_form_band_metric,
    find_positive,
    metric_nullspace,
)
from quasih.metric import ALPHA_CRITICAL


def main():
    alpha = 0.3
    h = build_alpha(alpha)
    fam = metric_nullspace(h)
    print(f"== Symmetric solutions of H^T Theta = Theta H at alpha = {alpha} ==")
    print(f"  family dimension: {fam.dim}   max residual: {fam.residual:.2e}\n")

    theta = closed_form_band_metric(alpha, 1.0, 1.0, 0.2, -0.1)
    resid = np.max(np.abs(h.T @ theta - theta @ h))
    print("== Closed-form member Theta(p=1, q=1, r=0.2, s=-0.1) ==")
    print(np.array_str(theta, precision=6, suppress_small=True))
    print(f"  equation residual: {resid:.2e}\n")

    cert = find_positive(fam)
    print("== Positivity certificate ==")
    print(f"  positive: {cert.positive}   min eigenvalue (top = 1): {cert.min_eigenvalue:.6f}\n")

    print("== Conditioning profile toward the exceptional point ==")
    alphas = [0.1, 0.3, 0.5, 0.6, 0.98 * ALPHA_CRITICAL, ALPHA_CRITICAL]
    for a, m in boundary_degeneracy_profile(alphas):
        note = "  <- defective H, no metric" if np.isnan(m) else ""
        print(f"  alpha = {a:.6f}   best min eig = {m:.3e}{note}")
    print("  The best achievable metric becomes singular on the boundary.")


if __name__ == "__main__":
    main()
