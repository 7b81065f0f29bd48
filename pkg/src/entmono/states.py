"""Isotropic states and their closed-form entanglement bounds.

An isotropic state on a ``d x d`` system is the convex mixture

    rho_F = (1 - lam) / d^2 * I  +  lam * |Phi><Phi|,

where ``|Phi>`` is the maximally entangled state and the mixing weight
``lam = (d^2 F - 1) / (d^2 - 1)`` is fixed by the fidelity
``F = <Phi| rho_F |Phi>`` in ``[0, 1]``. The partial transpose has just two
distinct eigenvalues, so the monotone bounds have closed forms that can be
evaluated at any ``d`` without building the ``d^2 x d^2`` matrix.
"""

from __future__ import annotations

import math

import numpy as np

from .linalg import DensityMatrix, PureState, max_entangled_vector


def _check_d(d: int) -> int:
    if int(d) != d or d < 2:
        raise ValueError(f"isotropic dimension must be an integer >= 2, got {d!r}")
    return int(d)


def _check_fidelity(fidelity: float) -> float:
    f = float(fidelity)
    if not np.isfinite(f) or f < 0.0 or f > 1.0:
        raise ValueError(f"fidelity must lie in [0, 1], got {fidelity!r}")
    return f


def mixing_parameter(d: int, fidelity: float) -> float:
    """Weight ``lam`` of the entangled component; ranges over
    ``[-1/(d^2-1), 1]`` as the fidelity runs over ``[0, 1]``."""
    d = _check_d(d)
    f = _check_fidelity(fidelity)
    return (d * d * f - 1.0) / (d * d - 1.0)


def max_entangled(d: int) -> PureState:
    """The maximally entangled state ``sum_i |ii> / sqrt(d)`` on ``d x d``."""
    d = _check_d(d)
    return PureState(max_entangled_vector(d), (d, d))


def isotropic_state(d: int, fidelity: float) -> DensityMatrix:
    """Isotropic state of the given fidelity as an explicit matrix."""
    d = _check_d(d)
    f = _check_fidelity(fidelity)
    lam = mixing_parameter(d, f)
    vec = max_entangled_vector(d)
    mat = (1.0 - lam) / (d * d) * np.eye(d * d, dtype=np.complex128)
    mat += lam * np.outer(vec, vec.conj())
    return DensityMatrix(mat, (d, d))


def isotropic_pt_spectrum(d: int, fidelity: float) -> list[tuple[float, int]]:
    """Partial-transpose spectrum as ``[(eigenvalue, multiplicity), ...]``.

    Exactly two distinct values occur: ``(1-lam)/d^2 + lam/d`` with
    multiplicity ``d(d+1)/2`` and ``(1-lam)/d^2 - lam/d`` with multiplicity
    ``d(d-1)/2``. The second becomes non-negative once ``lam <= 1/(d+1)``,
    i.e. ``F <= 1/d``.
    """
    d = _check_d(d)
    lam = mixing_parameter(d, fidelity)
    base = (1.0 - lam) / (d * d)
    return [
        (base + lam / d, d * (d + 1) // 2),
        (base - lam / d, d * (d - 1) // 2),
    ]


def isotropic_concurrence_bound(d: int, fidelity: float) -> float:
    """Closed form of the concurrence lower bound on isotropic states.

    Zero for ``lam <= 1/(d+1)`` (fidelity at or below the separability
    threshold ``1/d``), otherwise
    ``(2/d) ((lam-1)/d + lam) sqrt(d(d-1)/2)``. Both branches vanish at the
    threshold, so the function is continuous. This bound coincides with the
    exact I-concurrence of isotropic states.
    """
    d = _check_d(d)
    lam = mixing_parameter(d, fidelity)
    if lam <= 1.0 / (d + 1.0):
        return 0.0
    return (2.0 / d) * ((lam - 1.0) / d + lam) * math.sqrt(d * (d - 1) / 2.0)


def isotropic_tangle_bound(d: int, fidelity: float) -> float:
    """Closed form of the tangle lower bound: the concurrence bound squared.

    For large ``d`` at fixed fidelity this approaches ``2 F^2``.
    """
    return isotropic_concurrence_bound(d, fidelity) ** 2
