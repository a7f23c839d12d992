"""Certified eigendecomposition of working-substance Hamiltonians.

Every decomposition is checked against a residual gate ||H v - E v|| < 1e-9
and column orthonormality < 1e-10 before being returned, and
``converged_cutoff`` certifies that the lowest levels are stable under
doubling of the Fock cutoff, so cycle observables cannot silently depend on
truncation artifacts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .eigensolver import hermitian_eigh, symmetric_eigh
from .hamiltonian import RabiParams, build_hamiltonian
from .hilbert import FockCutoff, OperatorMatrix, as_matrix

__all__ = [
    "ConvergenceError",
    "SpectralDecomposition",
    "converged_cutoff",
    "eigendecompose",
    "relative_spectrum",
]

RESIDUAL_TOL = 1e-9
ORTHONORMALITY_TOL = 1e-10
CUTOFF_CEILING = 512


class ConvergenceError(RuntimeError):
    """Cutoff scan hit the ceiling without the spectrum stabilizing."""


@dataclass(frozen=True)
class SpectralDecomposition:
    """Ascending eigenvalues and orthonormal eigenvectors (as columns)."""

    energies: np.ndarray
    states: np.ndarray
    cutoff_used: FockCutoff | None
    residual_norm: float

    def __post_init__(self):
        e = np.asarray(self.energies, dtype=float)
        e.flags.writeable = False
        s = np.asarray(self.states)
        s.flags.writeable = False
        object.__setattr__(self, "energies", e)
        object.__setattr__(self, "states", s)

    @property
    def dim(self) -> int:
        return self.energies.shape[0]

    def ground_referenced(self) -> np.ndarray:
        """Energies relative to the ground state, element 0 exactly 0."""
        rel = self.energies - self.energies[0]
        rel = rel.copy()
        rel[0] = 0.0
        return rel


def eigendecompose(
    h: OperatorMatrix | np.ndarray,
    residual_tol: float = RESIDUAL_TOL,
) -> SpectralDecomposition:
    """Full decomposition of a Hermitian matrix with certified residuals.

    Degenerate subspaces are returned with a deterministic orthonormal basis
    (Gram-Schmidt in index order). Non-Hermitian input is rejected; a
    non-converging QL iteration raises EigensolverError with the iteration
    count.
    """
    m = as_matrix(h)
    scale = max(1.0, float(np.max(np.abs(m))))
    if np.max(np.abs(m - m.conj().T)) > 1e-12 * scale:
        raise ValueError("eigendecompose requires a Hermitian matrix")
    if np.max(np.abs(m.imag)) <= 1e-14 * scale:
        w, v = symmetric_eigh(m.real)
        v = v.astype(complex)
    else:
        w, v = hermitian_eigh(m)
    residuals = np.linalg.norm(m @ v - v * w, axis=0)
    residual = float(residuals.max())
    if residual > residual_tol:
        raise ConvergenceError(
            f"eigendecomposition residual {residual:.3e} exceeds {residual_tol:.1e}"
        )
    gram = v.conj().T @ v
    ortho_err = float(np.max(np.abs(gram - np.eye(v.shape[1]))))
    if ortho_err > ORTHONORMALITY_TOL:
        raise ConvergenceError(f"eigenvector orthonormality error {ortho_err:.3e}")
    cutoff = None
    if isinstance(h, OperatorMatrix) and h.subsystem_dims is not None:
        cutoff = FockCutoff(h.subsystem_dims[1])
    return SpectralDecomposition(
        energies=w, states=v, cutoff_used=cutoff, residual_norm=residual
    )


def relative_spectrum(decomposition: SpectralDecomposition, n_levels: int) -> np.ndarray:
    """Lowest n_levels energies relative to the ground state."""
    if not 1 <= n_levels <= decomposition.dim:
        raise ValueError(f"n_levels must be in [1, {decomposition.dim}], got {n_levels}")
    return decomposition.ground_referenced()[:n_levels]


def _relative_levels(params: RabiParams, n_max: int, n_levels: int) -> np.ndarray:
    h = build_hamiltonian(params, FockCutoff(n_max)).matrix.real
    w, _ = symmetric_eigh(h, vectors=False)
    rel = w[:n_levels] - w[0]
    rel[0] = 0.0
    return rel


def converged_cutoff(
    params: RabiParams,
    n_levels: int,
    tol: float,
    start: int | None = None,
    ceiling: int = CUTOFF_CEILING,
) -> FockCutoff:
    """Smallest tested cutoff whose doubling moves the lowest n_levels by < tol.

    The scan doubles the cutoff from ``start`` (default max(n_levels, 8)) and
    compares ground-referenced energies; eigenvalues-only solves keep it cheap.
    Raises ConvergenceError if the ceiling (default 512) is reached.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be > 0, got {tol}")
    if n_levels < 1:
        raise ValueError(f"n_levels must be >= 1, got {n_levels}")
    n = start if start is not None else max(n_levels, 8)
    n = max(int(n), 2)
    current = _relative_levels(params, n, n_levels)
    while n <= ceiling:
        doubled = _relative_levels(params, 2 * n, n_levels)
        if float(np.max(np.abs(doubled - current))) < tol:
            return FockCutoff(n)
        n *= 2
        current = doubled
    raise ConvergenceError(
        f"cutoff ceiling {ceiling} reached without {n_levels}-level convergence to {tol:.1e}"
    )
