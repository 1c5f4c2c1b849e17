"""Physical constants (SI, CODATA 2018 exact values)."""

import scipy.constants as _sc

HBAR = _sc.hbar            # 1.054571817e-34 J s
E_CHARGE = _sc.e           # 1.602176634e-19 C
K_B = _sc.k                # 1.380649e-23 J/K

# Reduced flux quantum hbar/2e, the scale relating a junction's critical
# current to its Josephson inductance L_J = PHI0_BAR / I_c.
PHI0_BAR = HBAR / (2.0 * E_CHARGE)
