"""Unit conventions and physical constants.

All Hamiltonians and energies in this package are dimensionless, expressed in
units of hbar * omega_ref for a reference angular frequency omega_ref (rad/s).
By convention omega_ref is the cold resonator frequency, so the cold cavity
has omega_cav = 1. Reservoir temperatures are given in kelvin and enter only
through the dimensionless thermal energy k_B * T / (hbar * omega_ref).

The default omega_ref is 2*pi*10 GHz, a typical superconducting-circuit
frequency. At 19 mK this gives a thermal energy of ~0.0396 quanta, the regime
in which the engine/refrigerator transitions of the resonator-frequency
protocol occur near g/omega_c ~ 1.1 and ~2.6.
"""

import math

K_BOLTZMANN = 1.380649e-23  # J/K (exact, SI 2019)
HBAR = 1.054571817e-34  # J*s

DEFAULT_OMEGA_REF = 2.0 * math.pi * 10.0e9  # rad/s


def thermal_energy(temperature_k: float, omega_ref: float = DEFAULT_OMEGA_REF) -> float:
    """Dimensionless thermal energy k_B*T / (hbar*omega_ref).

    Parameters
    ----------
    temperature_k : temperature in kelvin (> 0).
    omega_ref : reference angular frequency in rad/s.
    """
    if temperature_k <= 0.0:
        raise ValueError(f"temperature must be positive, got {temperature_k}")
    if omega_ref <= 0.0:
        raise ValueError(f"omega_ref must be positive, got {omega_ref}")
    return K_BOLTZMANN * temperature_k / (HBAR * omega_ref)
