"""Dense complex linear algebra for bipartite quantum states.

Everything downstream (monotone evaluation, convex-roof search, the cavity
QED simulation) runs on the few primitives defined here: validated density
matrices and pure states tagged with subsystem dimensions ``(d_a, d_b)``,
Hermitian eigenvalues in descending order, the partial transpose, Schmidt
coefficients and the overlap with the maximally entangled state.

Matrices are plain ``numpy`` arrays in row-major bipartite ordering: the
composite index of row ``(i, j)`` is ``i * d_b + j`` with ``i`` labelling
subsystem A and ``j`` labelling subsystem B.
"""

from __future__ import annotations

import numpy as np

# Default tolerances. Inputs typically arrive from file parsing or from time
# evolution with accumulated round-off, hence the loose 1e-8 defaults; the
# eigensolver itself is far more accurate than that.
HERM_TOL = 1e-8
TRACE_TOL = 1e-8
PSD_TOL = 1e-8
NORM_TOL = 1e-8
IMAG_TOL = 1e-8


class NonHermitianError(ValueError):
    """Raised when a matrix violates the Hermiticity tolerance."""


class DimensionMismatchError(ValueError):
    """Raised when an array shape is inconsistent with the declared dims."""


class ConvergenceError(RuntimeError):
    """Raised when the underlying eigensolver fails to converge."""


def _as_complex_array(a, name: str = "array") -> np.ndarray:
    out = np.asarray(a, dtype=np.complex128)
    if not (np.all(np.isfinite(out.real)) and np.all(np.isfinite(out.imag))):
        raise ValueError(f"{name} contains non-finite entries")
    return out


def _as_square_matrix(a, name: str = "matrix") -> np.ndarray:
    out = _as_complex_array(a, name)
    if out.ndim != 2 or out.shape[0] != out.shape[1]:
        raise DimensionMismatchError(f"{name} must be square, got shape {out.shape}")
    return out


def _check_dims(dims, size: int) -> tuple[int, int]:
    try:
        d_a, d_b = int(dims[0]), int(dims[1])
    except (TypeError, IndexError) as exc:
        raise DimensionMismatchError(f"dims must be a pair of integers, got {dims!r}") from exc
    if d_a < 1 or d_b < 1:
        raise DimensionMismatchError(f"subsystem dimensions must be positive, got {dims!r}")
    if d_a * d_b != size:
        raise DimensionMismatchError(
            f"dims {d_a}x{d_b} do not factor the array dimension {size}"
        )
    return d_a, d_b


def assert_hermitian(a: np.ndarray, tol: float = HERM_TOL) -> None:
    """Raise :class:`NonHermitianError` unless ``a`` is Hermitian within ``tol``.

    The deviation ``max |a - a^H|`` is compared against ``tol * max(1, |a|_max)``
    so the check is relative for large matrices but absolute near zero.
    """
    dev = np.abs(a - a.conj().T).max() if a.size else 0.0
    scale = max(1.0, np.abs(a).max()) if a.size else 1.0
    if dev > tol * scale:
        raise NonHermitianError(
            f"matrix deviates from Hermiticity by {dev:.3e} (tolerance {tol * scale:.3e})"
        )


def hermitian_eigenvalues(a, herm_tol: float = HERM_TOL) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, sorted in descending order.

    Parameters
    ----------
    a : array_like
        Square complex matrix, Hermitian within ``herm_tol``.

    Returns
    -------
    numpy.ndarray
        Real eigenvalues, length ``a.shape[0]``, descending. Degenerate
        eigenvalues carry no ordering guarantee beyond the numeric sort.
    """
    a = _as_square_matrix(a)
    assert_hermitian(a, tol=herm_tol)
    try:
        w = np.linalg.eigvalsh(a)  # LAPACK, ascending
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigensolver failed: {exc}") from exc
    return w[::-1].copy()


class DensityMatrix:
    """Bipartite density matrix together with its subsystem dimensions.

    Validates Hermiticity, unit trace and positive semidefiniteness at
    construction; the stored array is a read-only copy, so instances are
    immutable and safe to share across threads.

    Parameters
    ----------
    mat : array_like
        Square complex matrix of dimension ``d_a * d_b``.
    dims : (int, int)
        Subsystem dimensions ``(d_a, d_b)``.
    herm_tol, trace_tol, psd_tol : float, optional
        Validation tolerances.
    """

    def __init__(self, mat, dims, *, herm_tol: float = HERM_TOL,
                 trace_tol: float = TRACE_TOL, psd_tol: float = PSD_TOL):
        mat = _as_square_matrix(mat, "density matrix")
        self.dims = _check_dims(dims, mat.shape[0])
        assert_hermitian(mat, tol=herm_tol)
        tr = mat.trace()
        if abs(tr - 1.0) > trace_tol:
            raise ValueError(f"density matrix trace {tr:.12g} is not 1 within {trace_tol:g}")
        w = np.linalg.eigvalsh(mat)
        if w[0] < -psd_tol:
            raise ValueError(
                f"density matrix has eigenvalue {w[0]:.3e} below -psd_tol ({-psd_tol:g})"
            )
        mat = mat.copy()
        mat.flags.writeable = False
        self.mat = mat

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def __repr__(self) -> str:
        return f"DensityMatrix(dim={self.dim}, dims={self.dims})"


class PureState:
    """Bipartite pure state vector with subsystem dimensions ``(d_a, d_b)``.

    The amplitude vector is validated to be normalized and stored read-only.
    """

    def __init__(self, vec, dims, *, norm_tol: float = NORM_TOL):
        vec = _as_complex_array(vec, "state vector").reshape(-1)
        self.dims = _check_dims(dims, vec.size)
        nrm = np.linalg.norm(vec)
        if abs(nrm - 1.0) > norm_tol:
            raise ValueError(f"state vector norm {nrm:.12g} is not 1 within {norm_tol:g}")
        vec = vec.copy()
        vec.flags.writeable = False
        self.vec = vec

    @property
    def dim(self) -> int:
        return self.vec.size

    def to_density(self) -> DensityMatrix:
        """Rank-one density matrix ``|psi><psi|`` with the same dims."""
        return DensityMatrix(np.outer(self.vec, self.vec.conj()), self.dims)

    def __repr__(self) -> str:
        return f"PureState(dim={self.dim}, dims={self.dims})"


def transpose_subsystem(mat, dims, subsystem: str = "B") -> np.ndarray:
    """Entry permutation behind the partial transpose, on a raw matrix.

    For ``subsystem="B"`` the entry at row ``(i, j)``, column ``(k, l)`` of
    the output equals ``mat[(i, l), (k, j)]``. The permutation is an
    involution and preserves trace and Hermiticity.
    """
    mat = _as_square_matrix(mat)
    d_a, d_b = _check_dims(dims, mat.shape[0])
    r4 = mat.reshape(d_a, d_b, d_a, d_b)
    if subsystem == "B":
        out = r4.transpose(0, 3, 2, 1)
    elif subsystem == "A":
        out = r4.transpose(2, 1, 0, 3)
    else:
        raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    return np.ascontiguousarray(out).reshape(mat.shape)


def partial_transpose(rho: DensityMatrix, subsystem: str = "B") -> np.ndarray:
    """Transpose one tensor factor of a bipartite density matrix.

    The result is Hermitian with the same trace but is generally not
    positive, which is exactly what the entanglement monotones probe.
    Returns a plain (writable) array since the output need not be a state.
    """
    return transpose_subsystem(rho.mat, rho.dims, subsystem)


def reduced_state(psi: PureState, keep: str = "A") -> np.ndarray:
    """Reduced density matrix of one subsystem of a pure state."""
    d_a, d_b = psi.dims
    m = psi.vec.reshape(d_a, d_b)
    if keep == "A":
        return m @ m.conj().T
    if keep == "B":
        return m.T @ m.conj()
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def schmidt_coefficients(psi: PureState) -> np.ndarray:
    """Schmidt coefficients of a bipartite pure state, descending.

    Computed as square roots of the eigenvalues of the reduced density
    matrix of the smaller subsystem (tiny negative round-off is clamped to
    zero). Returns ``min(d_a, d_b)`` non-negative values whose squares sum
    to one.
    """
    d_a, d_b = psi.dims
    g = reduced_state(psi, "A" if d_a <= d_b else "B")
    w = np.linalg.eigvalsh(g)[::-1]
    return np.sqrt(np.clip(w, 0.0, None))


def max_entangled_vector(d: int) -> np.ndarray:
    """Amplitudes of the maximally entangled state on a ``d x d`` system."""
    if int(d) != d or d < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {d!r}")
    d = int(d)
    vec = np.zeros(d * d, dtype=np.complex128)
    vec[:: d + 1] = 1.0 / np.sqrt(d)
    return vec


def fidelity_max_entangled(rho: DensityMatrix, imag_tol: float = IMAG_TOL) -> float:
    """Overlap of ``rho`` with the maximally entangled state, in ``[0, 1]``.

    Requires equal subsystem dimensions. The overlap of a valid state is
    real; a residual imaginary part beyond ``imag_tol`` raises.
    """
    d_a, d_b = rho.dims
    if d_a != d_b:
        raise DimensionMismatchError(
            f"maximally entangled overlap needs d_a == d_b, got {rho.dims}"
        )
    idx = np.arange(d_a) * (d_a + 1)
    val = rho.mat[np.ix_(idx, idx)].sum() / d_a
    if abs(val.imag) > imag_tol:
        raise ValueError(f"overlap has imaginary part {val.imag:.3e}")
    return float(min(max(val.real, 0.0), 1.0))
