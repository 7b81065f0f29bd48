"""Two-atom Tavis-Cummings evolution and the atom-field tangle bound.

Two identical two-level atoms couple resonantly to one quantized field mode
through the interaction-picture Hamiltonian (dipole and rotating-wave
approximations, equal couplings)

    H = g * sum_k (a sigma_k^+ + a^dagger sigma_k^-),    k = 1, 2.

The total excitation number ``a^dagger a + sum_k sigma_k^+ sigma_k^-``
commutes with H, so the Hilbert space splits into blocks of dimension at
most four that are diagonalized exactly once; propagation is then exact
(no integrator error) at O(n_max) cost per time point.

Basis conventions: atom levels are indexed 0 = ground, 1 = excited, and a
total state ``|s1, s2, n>`` lives at flat index ``(2 s1 + s2) (n_max + 1) + n``.
Since the phase of every block is ``exp(-i w g t)`` with ``w`` the
unit-coupling eigenvalues, time is handled as the effective time ``gt``;
the coupling ``g`` only distinguishes the null case ``g = 0``.

Tracing out one atom of the evolved pure state leaves an atom-field density
matrix of rank at most two, the structure that makes the tangle bound a
meaningful probe of the collapse and revival dynamics.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linalg import DensityMatrix, DimensionMismatchError, hermitian_eigenvalues
from .monotones import tangle_lower_bound

RANK_EST_TOL = 1e-10


class TruncationError(RuntimeError):
    """Raised when the Fock-space cutoff is too small for the requested run."""


def coherent_state(alpha: float, n_max: int) -> np.ndarray:
    """Truncated coherent-state amplitudes, renormalized.

    Amplitudes follow the recurrence ``c_{n+1} = c_n * alpha / sqrt(n + 1)``
    from ``c_0 = exp(-alpha^2 / 2)``; factorials are never formed, so there
    is no overflow at large ``n``. Raises :class:`TruncationError` when the
    truncated weight falls below ``1 - 1e-6``.
    """
    alpha = float(alpha)
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    if int(n_max) != n_max or n_max < 0:
        raise ValueError(f"n_max must be a non-negative integer, got {n_max!r}")
    n_max = int(n_max)
    amps = np.empty(n_max + 1)
    amps[0] = np.exp(-0.5 * alpha * alpha)
    for n in range(n_max):
        amps[n + 1] = amps[n] * alpha / np.sqrt(n + 1.0)
    weight = float(np.sum(amps * amps))
    if weight < 1.0 - 1e-6:
        raise TruncationError(
            f"coherent state with alpha={alpha} keeps only {weight:.8f} of its "
            f"weight below n_max={n_max}"
        )
    return amps / np.sqrt(weight)


@dataclass(frozen=True)
class TcmConfig:
    """Run parameters: coupling, mean photon number, cutoff, time grid.

    ``t_grid`` holds effective times ``gt``. The cutoff must satisfy
    ``n_max >= nbar + 6 sqrt(nbar)`` so the coherent tail fits comfortably.
    ``g = 0`` is allowed and yields a constant state.
    """

    g: float = 1.0
    nbar: float = 100.0
    n_max: int = 200
    t_grid: np.ndarray = field(default_factory=lambda: np.linspace(0.0, 50.0, 1000))

    def __post_init__(self):
        if self.g < 0:
            raise ValueError(f"coupling g must be >= 0, got {self.g}")
        if self.nbar < 0:
            raise ValueError(f"nbar must be >= 0, got {self.nbar}")
        if self.n_max < self.nbar + 6.0 * np.sqrt(self.nbar):
            raise ValueError(
                f"n_max={self.n_max} is inadequate for nbar={self.nbar}; "
                f"need at least {self.nbar + 6.0 * np.sqrt(self.nbar):.1f}"
            )
        grid = np.asarray(self.t_grid, dtype=np.float64).reshape(-1)
        if grid.size == 0 or not np.all(np.isfinite(grid)) or grid[0] < 0:
            raise ValueError("t_grid must be non-empty, finite and non-negative")
        if grid.size > 1 and np.any(np.diff(grid) <= 0):
            raise ValueError("t_grid must be strictly increasing")
        grid = grid.copy()
        grid.flags.writeable = False
        object.__setattr__(self, "t_grid", grid)


def _blocks(n_max: int):
    """Bases of the conserved-excitation blocks, as lists of (s1, s2, n)."""
    for exc_total in range(n_max + 3):
        basis = []
        for s1, s2 in ((1, 1), (1, 0), (0, 1), (0, 0)):
            n = exc_total - s1 - s2
            if 0 <= n <= n_max:
                basis.append((s1, s2, n))
        if basis:
            yield basis


def _block_hamiltonian(basis) -> np.ndarray:
    """Unit-coupling Hamiltonian restricted to one excitation block."""
    index = {b: i for i, b in enumerate(basis)}
    h = np.zeros((len(basis), len(basis)))
    for i, (s1, s2, n) in enumerate(basis):
        if s1 == 1:  # a^dagger sigma_1^-
            j = index.get((0, s2, n + 1))
            if j is not None:
                h[j, i] = np.sqrt(n + 1.0)
        if s2 == 1:  # a^dagger sigma_2^-
            j = index.get((s1, 0, n + 1))
            if j is not None:
                h[j, i] = np.sqrt(n + 1.0)
    return h + h.T


def propagate(initial, n_max: int, t_grid) -> np.ndarray:
    """Evolve an arbitrary state of the 2 x 2 x (n_max + 1) space.

    ``t_grid`` is in effective-time units ``gt``. Returns the stack of
    states, shape ``(len(t_grid), 4 (n_max + 1))``. Exact per block via one
    small eigendecomposition each.
    """
    fock = n_max + 1
    initial = np.asarray(initial, dtype=np.complex128).reshape(-1)
    if initial.size != 4 * fock:
        raise DimensionMismatchError(
            f"state has {initial.size} amplitudes, expected {4 * fock}"
        )
    t_grid = np.asarray(t_grid, dtype=np.float64).reshape(-1)
    out = np.zeros((t_grid.size, 4 * fock), dtype=np.complex128)
    for basis in _blocks(n_max):
        flat = np.array([(2 * s1 + s2) * fock + n for s1, s2, n in basis])
        v0 = initial[flat]
        if not np.any(v0):
            continue
        w, vec = np.linalg.eigh(_block_hamiltonian(basis))
        y0 = vec.T @ v0
        phases = np.exp(-1j * np.outer(w, t_grid))
        out[:, flat] = (vec @ (phases * y0[:, None])).T
    return out


def evolve(cfg: TcmConfig) -> np.ndarray:
    """Evolve ``|e, e> (x) |alpha>`` over ``cfg.t_grid``.

    Returns the stack of total pure states. Raises
    :class:`TruncationError` if any output time leaks more than ``1e-6``
    population into the top two Fock levels.
    """
    fock = cfg.n_max + 1
    psi0 = np.zeros(4 * fock, dtype=np.complex128)
    psi0[3 * fock:] = coherent_state(np.sqrt(cfg.nbar), cfg.n_max)
    if cfg.g == 0.0:
        states = np.tile(psi0, (cfg.t_grid.size, 1))
    else:
        states = propagate(psi0, cfg.n_max, cfg.t_grid)
    top = states.reshape(-1, 4, fock)[:, :, fock - 2:]
    leak = float(np.max(np.sum(np.abs(top) ** 2, axis=(1, 2))))
    if leak > 1e-6:
        raise TruncationError(
            f"population {leak:.3e} in the top two Fock levels; raise n_max"
        )
    return states


def excitation_expectation(state, n_max: int) -> float:
    """Expectation of the conserved total excitation number."""
    fock = n_max + 1
    v = np.asarray(state, dtype=np.complex128).reshape(4, fock)
    weights = np.abs(v) ** 2
    atoms = np.array([0.0, 1.0, 1.0, 2.0])  # row 2 s1 + s2: gg, ge, eg, ee
    return float(weights.sum(axis=1) @ atoms + weights.sum(axis=0) @ np.arange(fock))


def reduce_atom_field(total, n_max: int) -> DensityMatrix:
    """Trace out atom 1, leaving the atom-2 plus field density matrix.

    The result has dims ``(2, n_max + 1)`` and rank at most two, since only
    a single qubit was discarded from a pure state.
    """
    fock = n_max + 1
    v = np.asarray(total, dtype=np.complex128).reshape(-1)
    if v.size != 4 * fock:
        raise DimensionMismatchError(
            f"state has {v.size} amplitudes, expected {4 * fock}"
        )
    m = v.reshape(2, 2 * fock)
    return DensityMatrix(np.einsum("sm,sn->mn", m, m.conj()), (2, fock))


@dataclass(frozen=True)
class TcmTrace:
    """Time series of the tangle bound along one run.

    Parallel arrays: effective time, tangle bound of the atom-field state,
    its numerical rank (always at most two) and purity.
    """

    gt: np.ndarray
    n2pt: np.ndarray
    rank_estimate: np.ndarray
    purity: np.ndarray

    def __post_init__(self):
        n = self.gt.size
        if not (self.n2pt.size == self.rank_estimate.size == self.purity.size == n):
            raise ValueError("trace columns must have equal length")
        if np.any(self.rank_estimate > 2):
            raise ValueError("atom-field rank above two; the state was not pure")

    @property
    def rows(self):
        """Iterate ``(gt, n2pt, rank, purity)`` tuples."""
        return zip(self.gt, self.n2pt, self.rank_estimate, self.purity)


def run_trace(cfg: TcmConfig) -> TcmTrace:
    """Full pipeline: evolve, reduce, evaluate the tangle bound per time."""
    states = evolve(cfg)
    nt = states.shape[0]
    n2pt = np.empty(nt)
    rank = np.empty(nt, dtype=np.int64)
    purity = np.empty(nt)
    for i in range(nt):
        rho = reduce_atom_field(states[i], cfg.n_max)
        spectrum = hermitian_eigenvalues(rho.mat)
        rank[i] = int(np.sum(spectrum > RANK_EST_TOL))
        purity[i] = float(np.sum(spectrum * spectrum))
        n2pt[i] = tangle_lower_bound(rho)
    return TcmTrace(gt=cfg.t_grid.copy(), n2pt=n2pt, rank_estimate=rank, purity=purity)
