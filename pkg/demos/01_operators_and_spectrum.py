"""Build the generalized Rabi Hamiltonian and watch its spectrum hybridize.

The working substance is a qubit coupled to a single cavity mode. At zero
coupling the excitation ladder is harmonic; as g/omega grows through the
ultra-strong into the deep-strong regime, levels pair up into quasi-degenerate
doublets: the ground doublet splits only by ~omega*exp(-2 g^2/omega^2). That
anharmonicity is what later drives the heat engine into a refrigerator.

Run:  python demos/01_operators_and_spectrum.py
"""

import numpy as np

from rabiotto import (
    RabiParams,
    annihilation,
    build_hamiltonian,
    converged_cutoff,
    eigendecompose,
    number_operator,
    pauli,
    relative_spectrum,
    tensor,
)

# --- the ingredients -------------------------------------------------------

a = annihilation(6)
print("annihilation operator (cutoff 6), superdiagonal sqrt(n):")
print(np.round(a.matrix.real, 3))

n_op = number_operator(6)
print("\nnumber operator diagonal:", np.diag(n_op.matrix).real)

sz_full = tensor(pauli("z"), np.eye(6))
print("\nqubit sigma_z lifted to the composite space has dims", sz_full.subsystem_dims)

# --- the Hamiltonian across coupling regimes --------------------------------

print("\nlowest 6 levels (relative to the ground state), resonance omega_q = omega_cav = 1:")
print(f"{'g/omega':>8} | " + " ".join(f"{k:>9}" for k in range(6)) + "   (cutoff)")
for g in (0.0, 0.3, 0.8, 1.5, 2.5, 3.5):
    params = RabiParams.resonant(1.0, g=g)
    cutoff = converged_cutoff(params, n_levels=6, tol=1e-8)
    dec = eigendecompose(build_hamiltonian(params, cutoff))
    rel = relative_spectrum(dec, 6)
    print(f"{g:>8.2f} | " + " ".join(f"{e:>9.5f}" for e in rel) + f"   ({cutoff.n_max})")

print(
    "\nNote the lowest pair collapsing like exp(-2 g^2): at g = 2.5 the gap is"
    f" {relative_spectrum(eigendecompose(build_hamiltonian(RabiParams.resonant(1.0, g=2.5), 80)), 2)[1]:.2e}."
)
print("Every decomposition above is residual-certified to ||Hv - Ev|| < 1e-9.")
