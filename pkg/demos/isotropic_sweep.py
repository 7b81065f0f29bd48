"""Isotropic-state bounds across the fidelity range.

The closed forms need only (d, F), so dimension 100 costs the same as
dimension 2; the dense cross-check below d = 8 confirms they match the
matrix computation. Output lands in isotropic_sweep.csv, plus a PNG when
matplotlib is installed.
"""

import numpy as np

from entmono import (
    concurrence_lower_bound,
    isotropic_concurrence_bound,
    isotropic_state,
    isotropic_tangle_bound,
)


def main():
    fgrid = np.linspace(0.0, 1.0, 101)
    dims = (2, 3, 10, 100)

    curves = {
        d: np.array([isotropic_tangle_bound(d, float(f)) for f in fgrid]) for d in dims
    }

    print("Separability thresholds (bound switches on at F = 1/d):")
    for d in dims:
        on = fgrid[np.array([isotropic_concurrence_bound(d, float(f)) for f in fgrid]) > 0]
        print(f"  d = {d:<4} first nonzero grid point F = {on[0]:.2f}  (1/d = {1/d:.4f})")

    print("\nDense-matrix cross-check at d = 3 and d = 8:")
    for d in (3, 8):
        worst = max(
            abs(concurrence_lower_bound(isotropic_state(d, float(f)))
                - isotropic_concurrence_bound(d, float(f)))
            for f in fgrid[::10]
        )
        print(f"  d = {d}: worst deviation {worst:.2e}")

    print("\nLarge-d behavior: tangle bound approaches 2 F^2")
    for f in (0.25, 0.5, 1.0):
        print(f"  F = {f}: d=100 gives {isotropic_tangle_bound(100, f):.5f}, "
              f"d=10000 gives {isotropic_tangle_bound(10**4, f):.5f}, "
              f"limit {2 * f * f:.5f}")

    with open("isotropic_sweep.csv", "w", encoding="utf-8") as fh:
        fh.write("F," + ",".join(f"n2pt_d{d}" for d in dims) + "\n")
        for i, f in enumerate(fgrid):
            fh.write(f"{f:.6f}," + ",".join(f"{curves[d][i]:.12g}" for d in dims) + "\n")
    print("\nwrote isotropic_sweep.csv")

    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not installed; skipping the plot")
        return
    fig, ax = plt.subplots(figsize=(6, 4))
    for d in dims:
        ax.plot(fgrid, curves[d], label=f"d = {d}")
    ax.plot(fgrid, 2 * fgrid**2, "k:", label=r"$2F^2$ limit")
    ax.set_xlabel("fidelity F")
    ax.set_ylabel("tangle lower bound")
    ax.legend()
    fig.tight_layout()
    fig.savefig("isotropic_sweep.png", dpi=150)
    print("wrote isotropic_sweep.png")


if __name__ == "__main__":
    main()
