"""Gain, photon-number dynamics, and added noise of dissipative
four-wave-mixing Josephson traveling-wave parametric amplifiers."""

from .constants import HBAR, K_B, PHI0_BAR
from .device import (
    DerivedConstants,
    DeviceParams,
    ResonatorParams,
    derive_constants,
    load_device,
)
from .dispersion import (
    DispersionSample,
    lambda_bare,
    lambda_factor,
    lambda_rpm,
    rpm_impedance,
    sample,
    wave_number,
)
from .errors import (
    ConfigError,
    ConsistencyError,
    DataError,
    DomainError,
    JtwpaError,
)
from .mixing import (
    ModeCoefficients,
    PumpConfig,
    coupling_coefficients,
    gain_rate,
    make_pump,
    phase_mismatch_total,
    pump_amplitude,
    zeta_functions,
)
from .noise import (
    NoiseReport,
    PhotonFieldState,
    added_noise,
    bose_einstein,
    damping,
    f_bar,
    output_photon_number,
    power_gain,
    quantum_gain,
)
from .oracle import MomentState, drift_matrix, integrate_moments

__version__ = "0.1.0"
