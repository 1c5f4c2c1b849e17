"""Loss rate and thermal occupation of the transmission-line baths."""

from __future__ import annotations

import math

from .constants import HBAR, K_B
from .device import DeviceParams, DerivedConstants
from .errors import ConfigError

# Above this argument 1/expm1(x) underflows double precision anyway.
_MAX_EXPONENT = 700.0


def damping(omega: float, device: DeviceParams, derived: DerivedConstants) -> float:
    """Energy decay rate [1/s] of a mode at omega from dielectric loss.

    gamma = omega * sqrt(c_ground/l_j0) * z0 * tan_delta, which reduces to
    omega*tan_delta when z0 is the line's own sqrt(l_j0/c_ground).  The
    dispersion engineering does not enter: the loss is set by the bare
    per-cell constants.
    """
    return (
        omega
        * math.sqrt(device.c_ground / derived.l_j0)
        * derived.z0
        * device.loss_tangent
    )


def bose_einstein(omega: float, temperature: float) -> float:
    """Mean thermal photon number 1/(exp(hbar w / k T) - 1).

    Exactly zero at zero temperature.  omega must be positive.
    """
    if temperature < 0.0:
        raise ConfigError(f"temperature must be >= 0 K, got {temperature!r}")
    if temperature == 0.0:
        return 0.0
    x = HBAR * omega / (K_B * temperature)
    if x > _MAX_EXPONENT:
        return 0.0
    return 1.0 / math.expm1(x)
