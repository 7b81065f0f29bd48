"""Tour of the negative-spectrum monotone family.

The quantity neg_pnorm(A, p) collects the negative eigenvalues of a
Hermitian matrix and takes their p-norm. On partial transposes it grades
entanglement: p = 1 gives the negativity, and twice the p = 2 value bounds
the I-concurrence from below. This script shows the convexity structure on
random matrices and evaluates the standard states everyone knows.
"""

import numpy as np

from entmono import (
    PureState,
    concurrence_lower_bound,
    isotropic_state,
    max_entangled,
    neg_pnorm,
    negativity,
    pure_concurrence,
    tangle_lower_bound,
)


def random_hermitian(rng, n):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (z + z.conj().T) / 2


def main():
    rng = np.random.default_rng(8)

    print("Triangle inequality  m_p(A+B) <= m_p(A) + m_p(B)  on random pairs")
    for p in (1.0, 1.5, 2.0, 3.0):
        slack = min(
            neg_pnorm(a, p) + neg_pnorm(b, p) - neg_pnorm(a + b, p)
            for a, b in (
                (random_hermitian(rng, 6), random_hermitian(rng, 6))
                for _ in range(200)
            )
        )
        print(f"  p = {p:<3}  smallest slack over 200 pairs: {slack:.3e}")

    print("\nStandard states (negativity / concurrence bound / tangle bound):")
    bell = PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), (2, 2)).to_density()
    product = PureState([1, 0, 0, 0], (2, 2)).to_density()
    qutrit = max_entangled(3).to_density()
    noisy = isotropic_state(3, 0.7)
    for name, rho in (("Bell pair", bell), ("product state", product),
                      ("maximally entangled qutrits", qutrit),
                      ("isotropic qutrits, F = 0.7", noisy)):
        print(f"  {name:<28} {negativity(rho):.6f} / "
              f"{concurrence_lower_bound(rho):.6f} / {tangle_lower_bound(rho):.6f}")

    print("\nOn pure states the p = 2 bound IS the concurrence:")
    for _ in range(3):
        v = rng.standard_normal(12) + 1j * rng.standard_normal(12)
        psi = PureState(v / np.linalg.norm(v), (3, 4))
        print(f"  bound {concurrence_lower_bound(psi.to_density()):.12f}"
              f"  vs  C(psi) {pure_concurrence(psi):.12f}")


if __name__ == "__main__":
    main()
