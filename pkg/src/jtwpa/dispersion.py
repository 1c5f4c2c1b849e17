"""Linear dispersion of the amplifier line.

The frequency-dependent factor returned here multiplies omega^2 in the
propagation relation, so the wavenumber is k = omega*sqrt(factor)/v_ref.
Two modes exist: the bare junction line (junction capacitance only) and the
resonator-loaded line used for phase matching, where each cell's impedance
to ground is modified by a coupled series LC branch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .device import DeviceParams, DerivedConstants
from .errors import ConfigError, DomainError

MODES = ("bare", "rpm")

# A propagating sample must resolve at least two cells per wavelength.
_SAMPLING_LIMIT = math.pi

# Relative distance from the resonator pole below which the branch
# admittance is numerically meaningless.
_POLE_RTOL = 1e-9

# Largest tolerable relative imaginary residue of the loaded dispersion
# factor, which is analytically real.
_RESIDUE_RTOL = 1e-9


def _check_positive_frequency(omega: float) -> None:
    if not omega > 0.0:
        raise DomainError(
            "nonpositive-frequency",
            f"angular frequency must be > 0, got {omega!r}",
        )


def lambda_bare(omega: float, derived: DerivedConstants) -> float:
    """Dispersion factor 1/(1 - (omega/omega_j)^2) of the bare line.

    Diverges at the junction plasma frequency; frequencies at or above it
    do not propagate and raise a domain error.
    """
    _check_positive_frequency(omega)
    ratio = omega / derived.omega_j
    if ratio >= 1.0:
        raise DomainError(
            "plasma-cutoff",
            f"frequency {omega / (2 * math.pi):.6e} Hz is at or above the"
            f" plasma cutoff {derived.omega_j / (2 * math.pi):.6e} Hz",
        )
    return 1.0 / (1.0 - ratio * ratio)


def rpm_impedance(
    omega: float, resonator, c_ground: float
) -> complex:
    """Per-cell impedance to ground of the resonator-loaded line.

    Parallel combination of the ground capacitance and the coupled series
    LC branch: Z = 1/(i w C + Y) with
    Y = i w C_c (1 - L_r C_r w^2) / (1 - (C_r + C_c) L_r w^2).
    Raises a domain error within a relative 1e-9 of the branch pole.
    """
    _check_positive_frequency(omega)
    w2 = omega * omega
    pole_w2 = 1.0 / ((resonator.c_resonator + resonator.c_coupling) * resonator.l_resonator)
    denom = 1.0 - w2 / pole_w2
    if abs(denom) < _POLE_RTOL:
        raise DomainError(
            "rpm-pole",
            f"frequency {omega / (2 * math.pi):.6e} Hz sits on the resonator"
            f" branch pole {math.sqrt(pole_w2) / (2 * math.pi):.6e} Hz",
        )
    branch = (
        1j
        * omega
        * resonator.c_coupling
        * (1.0 - resonator.l_resonator * resonator.c_resonator * w2)
        / denom
    )
    return 1.0 / (1j * omega * c_ground + branch)


def lambda_rpm(
    omega: float, device: DeviceParams, derived: DerivedConstants
) -> float:
    """Dispersion factor of the resonator-loaded line.

    Computed from the loaded per-cell impedance as
    lambda_bare / (i w Z(w) c_ground).  The result is analytically real;
    a residual imaginary part, a value below 1, or proximity to the branch
    pole all mark the frequency non-propagating.
    """
    if device.resonator is None:
        raise ConfigError("device has no resonator block; rpm dispersion unavailable")
    bare = lambda_bare(omega, derived)
    z = rpm_impedance(omega, device.resonator, device.c_ground)
    value = bare / (1j * omega * z * device.c_ground)
    if abs(value.imag) >= _RESIDUE_RTOL * max(abs(value.real), 1e-300):
        raise DomainError(
            "rpm-residue",
            f"loaded dispersion factor is not real at"
            f" {omega / (2 * math.pi):.6e} Hz: {value!r}",
        )
    real = value.real
    if real < 1.0:
        raise DomainError(
            "rpm-stopband",
            f"frequency {omega / (2 * math.pi):.6e} Hz lies in the resonator"
            f" stopband (dispersion factor {real:.6e} < 1)",
        )
    return real


def lambda_factor(
    omega: float,
    device: DeviceParams,
    derived: DerivedConstants,
    mode: str,
) -> float:
    """Dispatch to the bare or resonator-loaded dispersion factor."""
    if mode == "bare":
        return lambda_bare(omega, derived)
    if mode == "rpm":
        return lambda_rpm(omega, device, derived)
    raise ConfigError(f"unknown dispersion mode {mode!r}; expected one of {MODES}")


def wave_number(omega: float, lam: float, derived: DerivedConstants) -> float:
    """Wavenumber k = omega*sqrt(lambda)/v_ref [rad/m]."""
    _check_positive_frequency(omega)
    return omega * math.sqrt(lam) / derived.v_ref


def check_sampling(k: float, cell_length: float, omega: float) -> None:
    """Enforce the two-cells-per-wavelength validity bound k*dz < pi."""
    if k * cell_length >= _SAMPLING_LIMIT:
        raise DomainError(
            "sampling-limit",
            f"phase advance per cell k*dz = {k * cell_length:.6f} rad at"
            f" {omega / (2 * math.pi):.6e} Hz reaches the sampling limit pi",
        )


@dataclass(frozen=True)
class DispersionSample:
    """One evaluated sweep point: factor and wavenumber, or a reason it failed."""

    omega: float
    lam: float | None
    k: float | None
    valid: bool
    reason: str | None


def sample(
    omega: float,
    device: DeviceParams,
    derived: DerivedConstants,
    mode: str,
) -> DispersionSample:
    """Evaluate one frequency, trapping domain failures into an invalid sample."""
    try:
        lam = lambda_factor(omega, device, derived, mode)
        k = wave_number(omega, lam, derived)
        check_sampling(k, device.cell_length, omega)
    except DomainError as exc:
        return DispersionSample(omega=omega, lam=None, k=None, valid=False, reason=exc.token)
    return DispersionSample(omega=omega, lam=lam, k=k, valid=True, reason=None)
