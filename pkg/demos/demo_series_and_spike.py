"""Perturbative structure: the small-coupling band series with its
critical strength, and the spike-shaped domain wedge at the PMN vertex.

Run with:  python3 demos/demo_series_and_spike.py
"""

from quasih import (
    SpikeAnsatz,
    band_closed_energies,
    band_series_E1,
    band_series_E3,
    critical_strength,
    in_domain,
    spike_band_edges,
    spike_point,
)


def main():
    print("== Band series vs closed form ==")
    print("  alpha   |E3| series(6)   |E3| exact      |E1| series(6)   |E1| exact")
    for alpha in (0.05, 0.1, 0.2, 0.3):
        mags = sorted(abs(e) for e in band_closed_energies(alpha).energies)
        print(
            f"  {alpha:.2f}   {band_series_E3(alpha, 6):.10f}   {mags[-1]:.10f}"
            f"   {band_series_E1(alpha, 6):.10f}   {mags[0]:.10f}"
        )
    alpha_cs, e_cs = critical_strength()
    print(f"\n  Levels collide at alpha = {alpha_cs:.9f}, E = +-{e_cs:.9f}.\n")

    print("== Spike wedge at the vertex (-2, -sqrt(3)) ==")
    coef_c = 0.3
    print(f"  coef_c = {coef_c}; leading-order band: [{coef_c - 0.5}, {coef_c + 8/9:.6f}]")
    for t in (0.02, 0.01, 0.005):
        lo, hi = spike_band_edges(coef_c, t)
        print(f"  t = {t:.3f}: exact band [{lo:+.6f}, {hi:+.6f}]")
    print("  The edges converge linearly in t: an extremely narrow spike.\n")

    print("== Cross-section of the wedge at t = 0.02 ==")
    for coef_a in [-0.4, -0.2, 0.0, 0.3, 0.8, 1.1, 1.3]:
        a, c = spike_point(SpikeAnsatz(t=0.02, coef_a=coef_a, coef_c=coef_c))
        verdict = "inside" if in_domain(a, 0.0, c).inside else "outside"
        print(f"  coef_a = {coef_a:+.2f} -> (a, c) = ({a:+.6f}, {c:+.6f})  {verdict}")


if __name__ == "__main__":
    main()
