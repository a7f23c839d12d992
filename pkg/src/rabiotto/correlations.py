"""Von Neumann entropy and quantum discord of qubit-oscillator states.

Quantum discord with the measurement on the qubit (subsystem A):

    D_A = S(rho_A) - S(rho_AB) + min over bases of sum_j p_j S(rho_B^j)

where the minimum runs over rank-1 projective measurements Pi_j on the qubit,
parametrized by Bloch angles (theta_m, phi_m). Entropies use the natural log.

The minimization is deterministic: a coarse grid over the Bloch sphere
(default 64 x 128) followed by local Nelder-Mead refinement, which by
construction never returns a value above the best grid point. Grid evaluation
avoids building full-space projectors: the post-measurement oscillator state
for outcome |v> is the block combination sum_ab conj(v_a) v_b rho_ab, and all
angles are batched through numpy's eigvalsh. The oscillator blocks are first
compressed onto the support of the unconditional oscillator state (every
post-measurement state lives inside it), which caps the batched eigenproblem
size by the number of thermally occupied modes. For real-valued states the
conditional entropy is even in phi_m, halving the grid work.

``conditional_entropy`` is the independent reference path: it applies full
projectors (Pi (x) I) rho (Pi (x) I) and partial-traces, with no compression
or batching, and is what the vectorized path is tested against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cycle import CycleStates
from .hilbert import OperatorMatrix, partial_trace, tensor
from .optimize import nelder_mead

__all__ = [
    "DiscordDifferences",
    "DiscordResult",
    "MeasurementBasis",
    "conditional_entropy",
    "discord_differences",
    "quantum_discord",
    "von_neumann_entropy",
]

EIG_FLOOR = 1e-14
OUTCOME_FLOOR = 1e-14
DISCORD_TOL = 1e-9
DEFAULT_GRID = (64, 128)


@dataclass(frozen=True)
class MeasurementBasis:
    """Rank-1 projective qubit measurement along Bloch direction (theta_m, phi_m)."""

    theta_m: float
    phi_m: float

    def __post_init__(self):
        if not 0.0 <= self.theta_m <= math.pi + 1e-12:
            raise ValueError(f"theta_m must lie in [0, pi], got {self.theta_m}")

    def bloch_vector(self) -> np.ndarray:
        t, p = self.theta_m, self.phi_m
        return np.array([math.sin(t) * math.cos(p), math.sin(t) * math.sin(p), math.cos(t)])

    def projectors(self) -> tuple[np.ndarray, np.ndarray]:
        """(Pi_plus, Pi_minus) as 2x2 complex matrices; they sum to identity."""
        c = math.cos(self.theta_m / 2.0)
        s = math.sin(self.theta_m / 2.0)
        phase = complex(math.cos(self.phi_m), math.sin(self.phi_m))
        up = np.array([c, s * phase], dtype=complex)
        down = np.array([-s * np.conj(phase), c], dtype=complex)
        return np.outer(up, up.conj()), np.outer(down, down.conj())


@dataclass(frozen=True)
class DiscordResult:
    discord: float
    optimal_basis: MeasurementBasis
    entropy_a: float
    entropy_ab: float
    conditional_entropy_min: float
    optimizer_trace: tuple | None = None


def _entropy_from_eigenvalues(lam: np.ndarray) -> float:
    lam = np.asarray(lam, dtype=float)
    safe = np.where(lam > EIG_FLOOR, lam, 1.0)
    return float(-np.sum(np.where(lam > EIG_FLOOR, lam * np.log(safe), 0.0)))


def von_neumann_entropy(rho: OperatorMatrix | np.ndarray) -> float:
    """S(rho) = -tr(rho ln rho); rejects inputs that are not density matrices."""
    m = rho.matrix if isinstance(rho, OperatorMatrix) else np.asarray(rho, dtype=complex)
    if np.max(np.abs(m - m.conj().T)) > 1e-12 * max(1.0, float(np.max(np.abs(m)))):
        raise ValueError("entropy requires a Hermitian density matrix")
    lam = np.linalg.eigvalsh(m)
    if abs(lam.sum() - 1.0) > 1e-10:
        raise ValueError(f"density matrix must have unit trace, got {lam.sum()}")
    if lam.min() < -1e-10:
        raise ValueError(f"density matrix has negative eigenvalue {lam.min():.3e}")
    return _entropy_from_eigenvalues(lam)


def conditional_entropy(rho: OperatorMatrix, basis: MeasurementBasis) -> float:
    """sum_j p_j S(rho_B^j) via explicit full-space projection (reference path)."""
    if not isinstance(rho, OperatorMatrix) or rho.subsystem_dims is None:
        raise ValueError("conditional_entropy requires qubit (x) oscillator structure")
    _, n_osc = rho.subsystem_dims
    total = 0.0
    for proj in basis.projectors():
        full = tensor(proj, np.eye(n_osc, dtype=complex))
        projected = full.matrix @ rho.matrix @ full.matrix
        p = float(np.trace(projected).real)
        if p < OUTCOME_FLOOR:
            continue
        rho_b = partial_trace(
            OperatorMatrix(projected / p, subsystem_dims=rho.subsystem_dims), "oscillator"
        )
        total += p * _entropy_from_eigenvalues(np.linalg.eigvalsh(rho_b.matrix))
    return total


# ---------------------------------------------------------------------------
# vectorized measurement-grid machinery


class _BlockEvaluator:
    """Conditional entropy of one state, batched over measurement angles."""

    def __init__(self, rho: OperatorMatrix):
        if rho.subsystem_dims is None:
            raise ValueError("quantum_discord requires qubit (x) oscillator structure")
        m = rho.matrix
        _, n = rho.subsystem_dims
        r00, r01 = m[:n, :n], m[:n, n:]
        r10, r11 = m[n:, :n], m[n:, n:]
        self.is_real = bool(np.max(np.abs(m.imag)) <= 1e-14)
        # every post-measurement oscillator state is supported on the range of
        # the unconditional state r00 + r11; compress onto it
        support_w, support_v = np.linalg.eigh(r00 + r11)
        keep = support_w > 1e-15
        u = support_v[:, keep]
        self.b00 = u.conj().T @ r00 @ u
        self.b01 = u.conj().T @ r01 @ u
        self.b10 = u.conj().T @ r10 @ u
        self.b11 = u.conj().T @ r11 @ u

    def __call__(self, thetas: np.ndarray, phis: np.ndarray, chunk: int = 1024) -> np.ndarray:
        out = np.empty(thetas.shape[0])
        for i in range(0, thetas.shape[0], chunk):
            out[i : i + chunk] = self._batch(thetas[i : i + chunk], phis[i : i + chunk])
        return out

    def _batch(self, thetas: np.ndarray, phis: np.ndarray) -> np.ndarray:
        c2 = np.cos(thetas / 2.0) ** 2
        s2 = np.sin(thetas / 2.0) ** 2
        cross = np.cos(thetas / 2.0) * np.sin(thetas / 2.0) * np.exp(1j * phis)
        total = np.zeros(thetas.shape[0])
        for w00, w01 in ((c2, cross), (s2, -cross)):  # outcomes +/-
            m = (
                w00[:, None, None] * self.b00
                + w01[:, None, None] * self.b01
                + np.conj(w01)[:, None, None] * self.b10
                + (1.0 - w00)[:, None, None] * self.b11
            )
            p = np.einsum("bii->b", m).real
            lam = np.linalg.eigvalsh(m)
            norm = np.where(p[:, None] > OUTCOME_FLOOR, lam / p[:, None], 0.0)
            safe = np.where(norm > EIG_FLOOR, norm, 1.0)
            entropy = -np.sum(np.where(norm > EIG_FLOOR, norm * np.log(safe), 0.0), axis=1)
            total += np.where(p > OUTCOME_FLOOR, p * entropy, 0.0)
        return total


def _canonical_angles(theta: float, phi: float) -> tuple[float, float]:
    """Fold arbitrary angles onto theta in [0, pi], phi in [0, 2*pi)."""
    nx = math.sin(theta) * math.cos(phi)
    ny = math.sin(theta) * math.sin(phi)
    nz = math.cos(theta)
    t = math.acos(max(-1.0, min(1.0, nz)))
    if math.sin(t) < 1e-12:
        return t, 0.0
    return t, math.atan2(ny, nx) % (2.0 * math.pi)


def quantum_discord(
    rho: OperatorMatrix,
    grid: tuple[int, int] = DEFAULT_GRID,
    refine: bool = True,
    collect_trace: bool = False,
) -> DiscordResult:
    """Quantum discord D_A of a structured density matrix.

    ``grid = (n_theta, n_phi)`` sets the coarse search; ``refine`` runs
    Nelder-Mead from the best grid point. ``collect_trace`` stores the
    refinement's (angles, value) evaluations on the result.
    """
    if not isinstance(rho, OperatorMatrix) or rho.subsystem_dims is None:
        raise ValueError("quantum_discord requires qubit (x) oscillator structure")
    m = rho.matrix
    if np.max(np.abs(m - m.conj().T)) > 1e-12 * max(1.0, float(np.max(np.abs(m)))):
        raise ValueError("quantum_discord requires a Hermitian density matrix")
    lam_ab = np.linalg.eigvalsh(m)
    if abs(lam_ab.sum() - 1.0) > 1e-10 or lam_ab.min() < -1e-10:
        raise ValueError("quantum_discord requires a density matrix (unit trace, PSD)")
    entropy_ab = _entropy_from_eigenvalues(lam_ab)
    entropy_a = von_neumann_entropy(partial_trace(rho, "qubit"))

    evaluator = _BlockEvaluator(rho)
    n_theta, n_phi = grid
    thetas = np.linspace(0.0, math.pi, n_theta)
    phis = np.linspace(0.0, 2.0 * math.pi, n_phi, endpoint=False)

    if evaluator.is_real and n_phi % 2 == 0:
        # real state: S(theta, phi) = S(theta, 2*pi - phi); evaluate half
        half = n_phi // 2 + 1
        tt, pp = np.meshgrid(thetas, phis[:half], indexing="ij")
        vals_half = evaluator(tt.ravel(), pp.ravel()).reshape(n_theta, half)
        values = np.empty((n_theta, n_phi))
        values[:, :half] = vals_half
        values[:, half:] = vals_half[:, half - 2 : 0 : -1]
    else:
        tt, pp = np.meshgrid(thetas, phis, indexing="ij")
        values = evaluator(tt.ravel(), pp.ravel()).reshape(n_theta, n_phi)

    flat_best = int(np.argmin(values))
    i_t, i_p = divmod(flat_best, n_phi)
    best_val = float(values[i_t, i_p])
    best_angles = (float(thetas[i_t]), float(phis[i_p]))

    trace: list | None = [] if collect_trace else None
    if refine:
        step = (math.pi / max(n_theta - 1, 1), 2.0 * math.pi / n_phi)

        def objective(x: np.ndarray) -> float:
            t, p = _canonical_angles(float(x[0]), float(x[1]))
            return float(evaluator(np.array([t]), np.array([p]))[0])

        x_opt, f_opt = nelder_mead(
            objective, best_angles, step=step, ftol=1e-13, max_iter=300, trace=trace
        )
        if f_opt < best_val:  # refinement is monotone against the grid
            best_val = float(f_opt)
            best_angles = _canonical_angles(float(x_opt[0]), float(x_opt[1]))

    discord = entropy_a - entropy_ab + best_val
    if discord < -DISCORD_TOL:
        raise ArithmeticError(
            f"discord {discord:.3e} below -{DISCORD_TOL:.0e}; numerical failure"
        )
    if discord < 0.0:
        discord = 0.0
    return DiscordResult(
        discord=discord,
        optimal_basis=MeasurementBasis(*best_angles),
        entropy_a=entropy_a,
        entropy_ab=entropy_ab,
        conditional_entropy_min=best_val,
        optimizer_trace=tuple(trace) if trace is not None else None,
    )


@dataclass(frozen=True)
class DiscordDifferences:
    """The pairwise discord differences used in the correlation analyses."""

    rho1: DiscordResult
    rho3: DiscordResult
    rho4: DiscordResult

    @property
    def d41(self) -> float:
        """D(rho4) - D(rho1): across the hot bath stage."""
        return self.rho4.discord - self.rho1.discord

    @property
    def d31(self) -> float:
        """D(rho3) - D(rho1): cold thermal vs hot thermal."""
        return self.rho3.discord - self.rho1.discord

    @property
    def d34(self) -> float:
        """D(rho3) - D(rho4): across the compression stage."""
        return self.rho3.discord - self.rho4.discord

    def as_tuple(self) -> tuple[float, float, float]:
        return self.d41, self.d31, self.d34


def discord_differences(
    states: CycleStates,
    grid: tuple[int, int] = DEFAULT_GRID,
    refine: bool = True,
) -> DiscordDifferences:
    """Discords of rho1, rho3, rho4 and their pairwise differences."""
    return DiscordDifferences(
        rho1=quantum_discord(states.rho1, grid=grid, refine=refine),
        rho3=quantum_discord(states.rho3, grid=grid, refine=refine),
        rho4=quantum_discord(states.rho4, grid=grid, refine=refine),
    )
