"""Tour of the model spectra: from the 2x2 toy to the full 4x4 quartic.

Run with:  python3 demos/demo_spectrum.py
"""

import math

import numpy as np

from quasih import (
    ParamPoint,
    build_full,
    build_two_state,
    closed_form_energies,
    numeric_energies,
    quartic_energies,
    secular_coeffs,
)


def main():
    print("== Two-state warm-up ==")
    for b in (0.0, 0.5, 0.9, 1.0, 1.5):
        eigs = np.linalg.eigvals(build_two_state(b))
        print(f"  b = {b:4.2f}  E = {np.sort_complex(eigs)}")
    print("  Energies +-sqrt(1 - b^2) stay real up to the exceptional")
    print("  point b = 1, then complexify -- in a fully non-Hermitian matrix.\n")

    print("== Four-level model, all couplings equal to 1 ==")
    p = ParamPoint(1.0, 1.0, 1.0, 1.0)
    inv = secular_coeffs(p)
    print(f"  secular quartic: E^4 + ({inv.e2}) E^2 + ({inv.e1}) E + ({inv.e0})")
    spec = numeric_energies(build_full(p))
    print(f"  eigensolver  : {[round(e.real, 12) for e in spec.energies]}")
    comp = quartic_energies(inv.e2, inv.e1, inv.e0)
    print(f"  companion    : {[round(e.real, 12) for e in comp.energies]}")
    print(f"  exact        : +-1, +-sqrt(5) = +-{math.sqrt(5):.12f}\n")

    print("== Closed form on the c = d slice ==")
    for a, b, d in [(0.5, 0.5, 0.5), (2.0, 0.0, math.sqrt(3.0)), (0.0, 0.0, 3.0)]:
        s = closed_form_energies(a, b, d)
        print(f"  (a,b,d) = ({a:.3f},{b:.3f},{d:.3f})  ->  {s.classification.value}")
        for e in s.energies:
            print(f"      E = {e.real:+.9f} {e.imag:+.9f}i")
    print("  The middle point is the domain vertex: a quadruple zero energy.")


if __name__ == "__main__":
    main()
