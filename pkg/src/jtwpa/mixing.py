"""Four-wave-mixing interaction: pump scales, mode coupling, and evolution.

A strong pump at omega_p converts signal photons at omega into idler
photons at 2*omega_p - omega and back.  In the co-rotating frame the pair
(signal annihilation, idler creation) evolves linearly; everything the
evolution needs is collected per signal frequency in ModeCoefficients.
All rates are expressed against the line's total reference delay, so the
dimensionless evolution argument is rate * t_ref_total.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .device import DeviceParams, DerivedConstants
from .dispersion import check_sampling, lambda_factor, wave_number
from .errors import ConfigError, DomainError
from .thermal import bose_einstein, damping

# Below this |g*t| the hyperbolic functions switch to even power series,
# removing the 0/0 in sinh(g t)/g.
_SERIES_THRESHOLD = 1e-6


@dataclass(frozen=True)
class PumpConfig:
    """Validated pump drive.

    omega_p:     pump angular frequency [rad/s]
    pump_ratio:  pump current amplitude over junction critical current, in [0, 1)
    a_p0:        pump flux amplitude per cell [Wb], l_j0*I_p/(k_p*dz)
    temperature: bath temperature [K]
    """

    omega_p: float
    pump_ratio: float
    a_p0: float
    temperature: float


@dataclass(frozen=True)
class ModeCoefficients:
    """Everything the two-mode evolution needs at one signal frequency.

    Frequencies and dispersion factors for signal/idler/pump, the pump
    wavenumber, self/cross phase rates, the total phase mismatch rate
    d_omega_total, loss rates, thermal occupations, and the derived
    evolution scales: pair_rate (off-diagonal drive), balance
    ((gamma_s - gamma_i + 2i*d_omega_total)/4), gain rate g, and the
    normalized eigenvector entries eta = balance/g, rho = -i*pair_rate/g
    (NaN when g is exactly zero; the evolution functions never use them).
    """

    omega_signal: float
    omega_idler: float
    omega_pump: float
    lambda_signal: float
    lambda_idler: float
    lambda_pump: float
    k_pump: float
    theta_signal: float
    theta_idler: float
    theta_pump: float
    chi_prime: float
    d_omega_total: float
    gamma_signal: float
    gamma_idler: float
    n_bar_signal: float
    n_bar_idler: float
    pair_rate: complex
    balance: complex
    g: complex
    eta: complex
    rho: complex


def pump_amplitude(
    device: DeviceParams,
    derived: DerivedConstants,
    omega_p: float,
    pump_ratio: float,
    mode: str,
) -> float:
    """Pump flux amplitude per cell A_p0 = l_j0*I_p/(k_p*dz) [Wb].

    The pump must itself propagate: its dispersion factor and sampling
    bound are validated here and domain errors propagate to the caller.
    """
    if not 0.0 <= pump_ratio < 1.0:
        raise ConfigError(
            f"pump_ratio must lie in [0, 1), got {pump_ratio!r}"
        )
    lam_p = lambda_factor(omega_p, device, derived, mode)
    k_p = wave_number(omega_p, lam_p, derived)
    check_sampling(k_p, device.cell_length, omega_p)
    i_pump = pump_ratio * device.i_critical
    return derived.l_j0 * i_pump / (k_p * device.cell_length)


def make_pump(
    device: DeviceParams,
    derived: DerivedConstants,
    omega_p: float,
    pump_ratio: float,
    temperature: float,
    mode: str,
) -> PumpConfig:
    """Validate and assemble the pump configuration."""
    if temperature < 0.0:
        raise ConfigError(f"temperature must be >= 0 K, got {temperature!r}")
    a_p0 = pump_amplitude(device, derived, omega_p, pump_ratio, mode)
    return PumpConfig(
        omega_p=omega_p, pump_ratio=pump_ratio, a_p0=a_p0, temperature=temperature
    )


def _gain_rate(balance: complex, pair_rate: complex) -> complex:
    """Principal-branch g = sqrt(balance^2 + |pair_rate|^2).

    The evolution functions depend on g only through even combinations,
    so the branch choice cannot affect observables.
    """
    mag2 = pair_rate.real * pair_rate.real + pair_rate.imag * pair_rate.imag
    return cmath.sqrt(balance * balance + mag2)


def gain_rate(coeffs: ModeCoefficients) -> complex:
    """Parametric rate g governing cosh/sinh growth of the mode pair."""
    return _gain_rate(coeffs.balance, coeffs.pair_rate)


def coupling_coefficients(
    device: DeviceParams,
    derived: DerivedConstants,
    pump: PumpConfig,
    omega: float,
    mode: str,
) -> ModeCoefficients:
    """Evaluate all coupling scales for a signal at omega.

    Raises DomainError when the signal, the idler at 2*omega_p - omega, or
    the pump cannot propagate (cutoff, stopband, sampling bound) or when
    the idler frequency is not positive.
    """
    if not omega > 0.0:
        raise DomainError(
            "nonpositive-frequency",
            f"signal angular frequency must be > 0, got {omega!r}",
        )
    omega_i = 2.0 * pump.omega_p - omega
    if not omega_i > 0.0:
        raise DomainError(
            "idler-outside-band",
            f"idler frequency 2*f_pump - f_signal = {omega_i / (2 * math.pi):.6e} Hz"
            f" is not positive",
        )

    lam_p = lambda_factor(pump.omega_p, device, derived, mode)
    lam_s = lambda_factor(omega, device, derived, mode)
    lam_i = lambda_factor(omega_i, device, derived, mode)

    k_p = wave_number(pump.omega_p, lam_p, derived)
    check_sampling(k_p, device.cell_length, pump.omega_p)
    check_sampling(wave_number(omega, lam_s, derived), device.cell_length, omega)
    check_sampling(wave_number(omega_i, lam_i, derived), device.cell_length, omega_i)

    # Common nonlinear prefactor (k_p dz A_p0 / l_j0 I_c)^2 of the
    # pump-power-dependent phase rates.
    dz = device.cell_length
    drive2 = (k_p * dz * pump.a_p0 / (derived.l_j0 * device.i_critical)) ** 2

    theta_signal = drive2 * lam_s * omega / 8.0
    theta_idler = drive2 * lam_i * omega_i / 8.0
    # The pump modulates itself at half the cross-phase strength.
    theta_pump = drive2 * lam_p * pump.omega_p / 16.0

    chi_prime = (
        (k_p * dz / (derived.l_j0 * device.i_critical)) ** 2
        * math.sqrt(lam_s * lam_i)
        * math.sqrt(omega * omega_i)
        / 16.0
    )

    d_omega_total = (
        2.0 * (pump.omega_p + theta_pump) * math.sqrt(lam_p)
        - (omega + theta_signal) * math.sqrt(lam_s)
        - (omega_i + theta_idler) * math.sqrt(lam_i)
    )

    gamma_s = damping(omega, device, derived)
    gamma_i = damping(omega_i, device, derived)
    n_bar_s = bose_einstein(omega, pump.temperature)
    n_bar_i = bose_einstein(omega_i, pump.temperature)

    pair_rate = complex(
        chi_prime * pump.a_p0 * pump.a_p0 * (lam_s * lam_i) ** 0.25, 0.0
    )
    balance = complex((gamma_s - gamma_i) / 4.0, d_omega_total / 2.0)
    g = _gain_rate(balance, pair_rate)
    if g == 0:
        eta = complex("nan")
        rho = complex("nan")
    else:
        eta = balance / g
        rho = -1j * pair_rate / g

    return ModeCoefficients(
        omega_signal=omega,
        omega_idler=omega_i,
        omega_pump=pump.omega_p,
        lambda_signal=lam_s,
        lambda_idler=lam_i,
        lambda_pump=lam_p,
        k_pump=k_p,
        theta_signal=theta_signal,
        theta_idler=theta_idler,
        theta_pump=theta_pump,
        chi_prime=chi_prime,
        d_omega_total=d_omega_total,
        gamma_signal=gamma_s,
        gamma_idler=gamma_i,
        n_bar_signal=n_bar_s,
        n_bar_idler=n_bar_i,
        pair_rate=pair_rate,
        balance=balance,
        g=g,
        eta=eta,
        rho=rho,
    )


def phase_mismatch_total(
    device: DeviceParams,
    derived: DerivedConstants,
    pump: PumpConfig,
    omega: float,
    mode: str,
) -> float:
    """Total phase mismatch rate [rad/s]: linear dispersion plus pump-induced
    self/cross phase shifts of all three waves."""
    return coupling_coefficients(device, derived, pump, omega, mode).d_omega_total


def zeta_functions(coeffs: ModeCoefficients, t: float) -> tuple[complex, complex]:
    """Co-rotating-frame evolution entries (zeta1, zeta2) at time t.

    zeta1 = cosh(g t) - balance*sinh(g t)/g multiplies the input signal,
    zeta2 = -i*pair_rate*sinh(g t)/g couples in the conjugated idler.
    Near g = 0 the ratio sinh(g t)/g is evaluated by its even power
    series, so the pump-off and fully balanced cases are exact.
    """
    g = coeffs.g
    gt = g * t
    if abs(gt) < _SERIES_THRESHOLD:
        z = gt * gt
        sinhc = t * (1.0 + z / 6.0 + z * z / 120.0)
        cosh = 1.0 + z / 2.0 + z * z / 24.0
    else:
        sinhc = cmath.sinh(gt) / g
        cosh = cmath.cosh(gt)
    zeta1 = cosh - coeffs.balance * sinhc
    zeta2 = -1j * coeffs.pair_rate * sinhc
    return zeta1, zeta2
