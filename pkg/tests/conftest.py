"""Shared generators for randomized tests. All tests seed their own rng."""

import numpy as np

from entmono import DensityMatrix, PureState


def random_hermitian(rng, n, scale=1.0):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return scale * (z + z.conj().T) / 2.0


def random_pure(rng, d_a, d_b):
    v = rng.standard_normal(d_a * d_b) + 1j * rng.standard_normal(d_a * d_b)
    return PureState(v / np.linalg.norm(v), (d_a, d_b))


def random_density(rng, d_a, d_b, rank=None):
    dim = d_a * d_b
    rank = rank or dim
    a = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    rho = a @ a.conj().T
    return DensityMatrix(rho / np.trace(rho).real, (d_a, d_b))


def random_doubly_stochastic(rng, n, factors=None):
    """Product of random two-coordinate mixing matrices (T-transforms), which
    is doubly stochastic by construction."""
    a = np.eye(n)
    for _ in range(factors or 3 * n):
        i, j = rng.choice(n, size=2, replace=False)
        t = rng.uniform(0.0, 1.0)
        mix = np.eye(n)
        mix[i, i] = mix[j, j] = t
        mix[i, j] = mix[j, i] = 1.0 - t
        a = mix @ a
    return a
