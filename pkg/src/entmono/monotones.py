"""Entanglement monotones built from negative eigenvalues.

The central quantity is the p-norm of the negative part of a Hermitian
spectrum,

    neg_pnorm(A, p) = ( sum_{lambda < 0} |lambda|^p )^(1/p),    p >= 1,

which satisfies the triangle inequality and is convex on Hermitian matrices.
Applied to the partial transpose of a density matrix it yields entanglement
monotones: ``p = 1`` is the negativity, and twice the ``p = 2`` value is a
lower bound on the I-concurrence (its square bounds the I-tangle), agreeing
with the pure-state concurrence exactly on pure inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    DensityMatrix,
    PureState,
    hermitian_eigenvalues,
    partial_transpose,
    schmidt_coefficients,
)

# Eigenvalues in (-NEG_EIG_TOL * scale, 0) are treated as zero so that
# eigensolver noise cannot masquerade as entanglement.
NEG_EIG_TOL = 1e-10


def _check_order(p: float) -> float:
    p = float(p)
    if not np.isfinite(p) or p < 1.0:
        raise ValueError(f"monotone order p must be a real number >= 1, got {p!r}")
    return p


def negative_eigenvalues(a) -> np.ndarray:
    """Strictly negative eigenvalues of a Hermitian matrix, descending.

    The cutoff scales with the spectral radius: values above
    ``-NEG_EIG_TOL * max(1, |lambda|_max)`` count as zero.
    """
    w = hermitian_eigenvalues(a)
    scale = max(1.0, float(np.abs(w).max())) if w.size else 1.0
    return w[w < -NEG_EIG_TOL * scale]


def neg_pnorm(a, p: float = 2.0) -> float:
    """p-norm of the negative eigenvalues of a Hermitian matrix.

    Returns 0 for positive semidefinite input. Accepts any real ``p >= 1``.
    """
    p = _check_order(p)
    neg = negative_eigenvalues(a)
    if neg.size == 0:
        return 0.0
    return float(np.sum(np.abs(neg) ** p) ** (1.0 / p))


def neg_power_sum(a, p: float = 2.0) -> float:
    """Sum of ``|lambda|^p`` over negative eigenvalues, i.e. ``neg_pnorm ** p``."""
    p = _check_order(p)
    neg = negative_eigenvalues(a)
    if neg.size == 0:
        return 0.0
    return float(np.sum(np.abs(neg) ** p))


@dataclass(frozen=True)
class MonotoneReport:
    """Evaluation record for one matrix and one order ``p``."""

    p: float
    pnorm: float
    power_sum: float
    negative_eigenvalues: np.ndarray
    neg_count: int


def monotone_report(a, p: float = 2.0) -> MonotoneReport:
    """Evaluate :func:`neg_pnorm` and :func:`neg_power_sum` in one pass."""
    p = _check_order(p)
    neg = negative_eigenvalues(a)
    powers = np.abs(neg) ** p
    psum = float(powers.sum())
    return MonotoneReport(
        p=p,
        pnorm=float(psum ** (1.0 / p)) if neg.size else 0.0,
        power_sum=psum,
        negative_eigenvalues=neg,
        neg_count=int(neg.size),
    )


def negativity(rho: DensityMatrix) -> float:
    """Absolute sum of the negative partial-transpose eigenvalues."""
    return neg_pnorm(partial_transpose(rho, "B"), p=1.0)


def concurrence_lower_bound(rho: DensityMatrix) -> float:
    """Lower bound on the I-concurrence: twice the 2-norm of the negative
    partial-transpose eigenvalues.

    Equals :func:`pure_concurrence` exactly when ``rho`` is pure, and is a
    convex function of ``rho``, which is what makes it a bound for the
    convex-roof extension on mixed states.
    """
    return 2.0 * neg_pnorm(partial_transpose(rho, "B"), p=2.0)


def tangle_lower_bound(rho: DensityMatrix) -> float:
    """Lower bound on the I-tangle: square of :func:`concurrence_lower_bound`."""
    return concurrence_lower_bound(rho) ** 2


def pure_concurrence(psi: PureState) -> float:
    """Concurrence of a bipartite pure state.

    In Schmidt coefficients ``c_i`` this is ``2 * sqrt(sum_{i<j} c_i^2 c_j^2)``,
    evaluated through the normalization identity
    ``sum_{i<j} c_i^2 c_j^2 = (1 - sum_i c_i^4) / 2`` which needs only the
    fourth-power sum. Ranges from 0 on product states to
    ``sqrt(2 (d - 1) / d)`` for ``d = min(d_a, d_b)``.
    """
    c = schmidt_coefficients(psi)
    return float(np.sqrt(max(2.0 * (1.0 - np.sum(c**4)), 0.0)))


def pure_tangle(psi: PureState) -> float:
    """Squared concurrence of a bipartite pure state."""
    return pure_concurrence(psi) ** 2
