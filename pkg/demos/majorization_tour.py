"""Majorization in five minutes.

Prefix-sum dominance of sorted vectors orders probability distributions by
disorder; doubly stochastic matrices can only flatten, and Hermitian
eigenvalues obey the same ordering under matrix sums. These facts carry
the convexity proofs behind the monotone family.
"""

import numpy as np

from entmono import (
    hermitian_eigenvalues,
    is_doubly_stochastic,
    majorizes,
    positive_part,
    pth_power,
    weakly_submajorizes,
)


def main():
    print("A peaked distribution majorizes a flat one:")
    print("  (1, 0)   majorizes (1/2, 1/2):", majorizes([1, 0], [0.5, 0.5]))
    print("  (1/2,1/2) majorizes (1, 0):   ", majorizes([0.5, 0.5], [1, 0]))

    print("\nMixing can only flatten: y majorizes A @ y for doubly stochastic A")
    rng = np.random.default_rng(4)
    y = rng.dirichlet(np.ones(5))
    a = np.eye(5)
    for _ in range(12):
        i, j = rng.choice(5, 2, replace=False)
        t = rng.uniform()
        mix = np.eye(5)
        mix[i, i] = mix[j, j] = t
        mix[i, j] = mix[j, i] = 1 - t
        a = mix @ a
    print("  A doubly stochastic:", is_doubly_stochastic(a))
    print("  y  =", np.sort(y)[::-1].round(4))
    print("  Ay =", np.sort(a @ y)[::-1].round(4))
    print("  majorizes(y, Ay):", majorizes(y, a @ y))

    print("\nHermitian eigenvalues: lambda(A+B) is majorized by "
          "sorted lambda(A) + lambda(B)")
    z1 = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    z2 = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    h1, h2 = (z1 + z1.conj().T) / 2, (z2 + z2.conj().T) / 2
    lhs = hermitian_eigenvalues(h1) + hermitian_eigenvalues(h2)
    rhs = hermitian_eigenvalues(h1 + h2)
    print("  lambda(A)+lambda(B) =", lhs.round(3))
    print("  lambda(A+B)         =", rhs.round(3))
    print("  majorizes:", majorizes(lhs, rhs))

    print("\nWeak submajorization survives the positive part and p-th powers:")
    yv = np.array([2.0, 1.0, -0.5, -1.5])
    xv = np.array([1.2, 0.8, -0.2, -1.9])
    print("  x weakly below y:", weakly_submajorizes(yv, xv))
    print("  after positive part:",
          weakly_submajorizes(positive_part(yv), positive_part(xv)))
    print("  after squaring the positive parts:",
          weakly_submajorizes(pth_power(positive_part(yv), 2),
                              pth_power(positive_part(xv), 2)))


if __name__ == "__main__":
    main()
