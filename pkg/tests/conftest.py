import numpy as np


def multiset_max_distance(xs, ys) -> float:
    """Greedy minimal matching distance between two equal-size multisets
    of complex numbers; robust against ordering ties near degeneracies."""
    xs = [complex(x) for x in xs]
    ys = [complex(y) for y in ys]
    assert len(xs) == len(ys)
    worst = 0.0
    for x in xs:
        j = int(np.argmin([abs(x - y) for y in ys]))
        worst = max(worst, abs(x - ys[j]))
        ys.pop(j)
    return worst


def char_poly_coeffs(h) -> np.ndarray:
    """Monic characteristic polynomial coefficients via eigenvalue Vieta
    sums (independent of the closed-form secular expressions)."""
    return np.real(np.poly(np.asarray(h, dtype=float)))
