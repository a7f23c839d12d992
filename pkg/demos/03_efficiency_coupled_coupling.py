"""Efficiency when coupling and frequency are ramped together.

The coupled-coupling protocol sets g_h = alpha*(omega_h/omega_c)*g_c during
the adiabats. At alpha = 1 the hot Hamiltonian is exactly proportional to the
cold one (H_h = R*H_c), every level scales by R, and the efficiency locks to
the Otto value 1 - omega_c/omega_h no matter how strong the light-matter
coupling is. Away from alpha = 1 the coupling reshapes the spectrum and the
efficiency picks up a coupling dependence: enhanced below alpha = 1 in an
optimal window, degraded above it.

Run:  python demos/03_efficiency_coupled_coupling.py
"""

import numpy as np

from rabiotto import coupled_coupling_protocol, run_cycle

ALPHAS = (0.8, 1.0, 1.2)
CUTOFF = 56

print(f"{'g_c/w_c':>8} | " + " | ".join(f"eta(alpha={a})" for a in ALPHAS))
for g in np.arange(0.0, 2.01, 0.25):
    etas = []
    for alpha in ALPHAS:
        protocol = coupled_coupling_protocol(g_c=float(g), alpha=alpha, ratio=2.0)
        _, rep = run_cycle(protocol, cutoff=CUTOFF)
        etas.append(rep.eta)
    print(f"{g:>8.2f} | " + " | ".join(f"{e:>12.6f}" for e in etas))

print("\nalpha = 1.0 sits at the Otto efficiency 1 - 1/R = 0.5 to machine precision;")
print("the alpha = 0.8 column beats it in the window where compression also")
print("destroys quantum correlations (see demo 04).")
