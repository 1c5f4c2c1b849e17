"""Independent numerical route: second-moment equations of motion.

Instead of the closed-form evolution entries, this module integrates the
coupled first-order equations for the signal and idler photon numbers and
their pair correlation with a fixed-step fourth-order Runge-Kutta scheme.
It shares only the drift matrix and bath rates with the analytic path, so
agreement between the two is a strong end-to-end check.  The derivation
of the equations lives in docs/moment_equations.md.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, ConsistencyError
from .mixing import ModeCoefficients

# Scaled slack for |c_si|^2 <= (n_signal+1)*n_idler along the trajectory;
# an absolute tolerance would false-trip at high gain.
_PHYS_RTOL = 1e-9


@dataclass(frozen=True)
class MomentState:
    """Second moments at time t: occupations and the pair correlation <ab>."""

    n_signal: float
    n_idler: float
    c_si: complex
    t: float


def drift_matrix(coeffs: ModeCoefficients) -> np.ndarray:
    """2x2 complex drift of (signal annihilation, idler creation).

    Its eigenvalues are -(gamma_s+gamma_i)/4 +- g, tying the moment route
    to the analytic gain rate.
    """
    half_mismatch = 0.5j * coeffs.d_omega_total
    return np.array(
        [
            [-0.5 * coeffs.gamma_signal - half_mismatch, -1j * coeffs.pair_rate],
            [1j * coeffs.pair_rate.conjugate(), -0.5 * coeffs.gamma_idler + half_mismatch],
        ],
        dtype=complex,
    )


def _check_physical(n_s: float, n_i: float, c: complex) -> None:
    bound = (n_s + 1.0) * n_i
    if abs(c) ** 2 > bound + _PHYS_RTOL * (1.0 + bound):
        raise ConsistencyError(
            f"moment trajectory left the physical cone: |c_si|^2 ="
            f" {abs(c) ** 2:.6e} > (n_signal+1)*n_idler = {bound:.6e}"
        )


def integrate_moments(
    coeffs: ModeCoefficients,
    state,
    t: float,
    steps: int = 10000,
) -> MomentState:
    """Evolve input moments for reference time t with fixed-step RK4.

    state needs attributes n_signal, n_idler, c_si (PhotonFieldState or
    MomentState both qualify).  The step count trades runtime for accuracy;
    the default keeps the truncation error orders of magnitude below the
    1e-6 relative agreement demanded of the analytic route.  Physicality
    of the moments is enforced along the trajectory.
    """
    if t < 0.0:
        raise ConfigError(f"time must be >= 0, got {t!r}")
    if steps < 1000:
        raise ConfigError(f"steps must be >= 1000, got {steps!r}")

    m = drift_matrix(coeffs)
    m11, m12 = m[0, 0], m[0, 1]
    m22 = m[1, 1]
    # dc/dt couples through m21* which equals m12 here.
    corr_drift = m11 + m22.conjugate()
    gamma_s = coeffs.gamma_signal
    gamma_i = coeffs.gamma_idler
    pump_s = gamma_s * coeffs.n_bar_signal
    pump_i = gamma_i * coeffs.n_bar_idler

    def rhs(n_s: float, n_i: float, c: complex):
        cross = m12 * c.conjugate()
        d_ns = -gamma_s * n_s + 2.0 * cross.real + pump_s
        d_ni = -gamma_i * n_i + 2.0 * cross.real + pump_i
        d_c = corr_drift * c + m12 * (n_s + n_i + 1.0)
        return d_ns, d_ni, d_c

    n_s = float(state.n_signal)
    n_i = float(state.n_idler)
    c = complex(state.c_si)
    _check_physical(n_s, n_i, c)
    h = t / steps
    for _ in range(steps):
        a1, b1, c1 = rhs(n_s, n_i, c)
        a2, b2, c2 = rhs(n_s + 0.5 * h * a1, n_i + 0.5 * h * b1, c + 0.5 * h * c1)
        a3, b3, c3 = rhs(n_s + 0.5 * h * a2, n_i + 0.5 * h * b2, c + 0.5 * h * c2)
        a4, b4, c4 = rhs(n_s + h * a3, n_i + h * b3, c + h * c3)
        n_s += h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
        n_i += h / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4)
        c += h / 6.0 * (c1 + 2.0 * c2 + 2.0 * c3 + c4)
        _check_physical(n_s, n_i, c)
    return MomentState(n_signal=n_s, n_idler=n_i, c_si=c, t=t)
