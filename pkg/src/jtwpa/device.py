"""Device description: JSON loading, validation, and derived circuit constants.

A device is a chain of identical cells, each with a series Josephson
inductance shunted by a junction capacitance, plus a capacitance to ground.
Optionally every cell carries a coupled LC resonator used for dispersion
engineering of the propagating band.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .constants import PHI0_BAR
from .errors import ConfigError

# Relative tolerance for redundant parameter cross-checks (e.g. junction
# capacitance vs. an explicitly given plasma frequency).
_CONSISTENCY_RTOL = 1e-9


@dataclass(frozen=True)
class ResonatorParams:
    """Per-cell dispersion-engineering resonator (coupling C, series LC)."""

    c_coupling: float
    c_resonator: float
    l_resonator: float


@dataclass(frozen=True)
class DeviceParams:
    """Validated device description in SI units.

    Exactly one consistent way to obtain the junction plasma frequency must
    be present: a junction capacitance, an explicit plasma frequency, or
    both (cross-checked).  The per-cell series inductance defaults to the
    Josephson value PHI0_BAR / i_critical when not given explicitly.
    """

    c_ground: float
    cell_length: float
    n_cells: int
    i_critical: float
    loss_tangent: float
    c_junction: float | None = None
    l_cell: float | None = None
    omega_plasma: float | None = None
    z0_override: float | None = None
    resonator: ResonatorParams | None = None


@dataclass(frozen=True)
class DerivedConstants:
    """Circuit scales computed once per device.

    l_j0:        per-cell series inductance [H]
    c_j:         junction shunt capacitance [F]
    omega_j:     junction plasma angular frequency 1/sqrt(l_j0 c_j) [rad/s]
    v_ref:       low-frequency phase velocity cell_length/sqrt(l_j0 c_ground) [m/s]
    t_ref_total: total line delay n_cells*sqrt(l_j0 c_ground) [s]
    z0:          characteristic impedance, sqrt(l_j0/c_ground) unless overridden [ohm]
    """

    l_j0: float
    c_j: float
    omega_j: float
    v_ref: float
    t_ref_total: float
    z0: float


_TOP_KEYS = {
    "c_ground_f",
    "cell_length_m",
    "n_cells",
    "i_critical_a",
    "loss_tangent",
    "c_junction_f",
    "l_cell_h",
    "plasma_freq_hz",
    "z0_ohm",
    "rpm",
}

_RPM_KEYS = {"c_coupling_f", "c_resonator_f", "l_resonator_h"}


def _require_number(data: dict, key: str, where: str) -> float:
    if key not in data:
        raise ConfigError(f"{where}: missing required key '{key}'")
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}: key '{key}' must be a number")
    return float(value)


def _require_positive(data: dict, key: str, where: str) -> float:
    value = _require_number(data, key, where)
    if not math.isfinite(value) or value <= 0.0:
        raise ConfigError(f"{where}: key '{key}' must be finite and > 0")
    return value


def _optional_positive(data: dict, key: str, where: str) -> float | None:
    if key not in data:
        return None
    return _require_positive(data, key, where)


def load_device(path: str | Path) -> DeviceParams:
    """Load and validate a device JSON file.

    Raises ConfigError on missing files, malformed JSON (with line/column
    context), unknown keys, wrong types, or out-of-range values.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read device file '{path}': {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be a JSON object")

    where = str(path)
    unknown = sorted(set(data) - _TOP_KEYS)
    if unknown:
        raise ConfigError(f"{where}: unknown key(s) {unknown}")

    c_ground = _require_positive(data, "c_ground_f", where)
    cell_length = _require_positive(data, "cell_length_m", where)
    i_critical = _require_positive(data, "i_critical_a", where)

    if "n_cells" not in data:
        raise ConfigError(f"{where}: missing required key 'n_cells'")
    n_cells = data["n_cells"]
    if isinstance(n_cells, bool) or not isinstance(n_cells, int) or n_cells < 1:
        raise ConfigError(f"{where}: key 'n_cells' must be a positive integer")

    loss_tangent = _require_number(data, "loss_tangent", where)
    if not math.isfinite(loss_tangent) or loss_tangent < 0.0:
        raise ConfigError(f"{where}: key 'loss_tangent' must be finite and >= 0")

    c_junction = _optional_positive(data, "c_junction_f", where)
    l_cell = _optional_positive(data, "l_cell_h", where)
    plasma_hz = _optional_positive(data, "plasma_freq_hz", where)
    z0_override = _optional_positive(data, "z0_ohm", where)

    resonator = None
    if "rpm" in data:
        block = data["rpm"]
        if not isinstance(block, dict):
            raise ConfigError(f"{where}: key 'rpm' must be an object")
        unknown = sorted(set(block) - _RPM_KEYS)
        if unknown:
            raise ConfigError(f"{where}: unknown rpm key(s) {unknown}")
        resonator = ResonatorParams(
            c_coupling=_require_positive(block, "c_coupling_f", f"{where} (rpm)"),
            c_resonator=_require_positive(block, "c_resonator_f", f"{where} (rpm)"),
            l_resonator=_require_positive(block, "l_resonator_h", f"{where} (rpm)"),
        )

    if c_junction is None and plasma_hz is None:
        raise ConfigError(
            f"{where}: under-determined device; give 'c_junction_f' or"
            f" 'plasma_freq_hz' so the plasma cutoff is defined"
        )

    return DeviceParams(
        c_ground=c_ground,
        cell_length=cell_length,
        n_cells=n_cells,
        i_critical=i_critical,
        loss_tangent=loss_tangent,
        c_junction=c_junction,
        l_cell=l_cell,
        omega_plasma=None if plasma_hz is None else 2.0 * math.pi * plasma_hz,
        z0_override=z0_override,
        resonator=resonator,
    )


def derive_constants(params: DeviceParams) -> DerivedConstants:
    """Resolve the per-cell circuit scales from a validated device.

    The series inductance is l_cell when given, else the Josephson value.
    Junction capacitance and plasma frequency determine each other; when
    both are supplied they must agree to a relative 1e-9 or the device is
    rejected as inconsistent.
    """
    l_j0 = params.l_cell if params.l_cell is not None else PHI0_BAR / params.i_critical

    if params.c_junction is not None:
        c_j = params.c_junction
        omega_j = 1.0 / math.sqrt(l_j0 * c_j)
        if params.omega_plasma is not None:
            rel = abs(omega_j - params.omega_plasma) / params.omega_plasma
            if rel > _CONSISTENCY_RTOL:
                raise ConfigError(
                    "device over-determined and inconsistent: plasma frequency"
                    f" from c_junction_f is {omega_j / (2.0 * math.pi):.6e} Hz but"
                    f" plasma_freq_hz gives {params.omega_plasma / (2.0 * math.pi):.6e} Hz"
                    f" (relative difference {rel:.3e})"
                )
    else:
        omega_j = params.omega_plasma  # presence checked at load time
        assert omega_j is not None
        c_j = 1.0 / (omega_j * omega_j * l_j0)

    delay_per_cell = math.sqrt(l_j0 * params.c_ground)
    v_ref = params.cell_length / delay_per_cell
    t_ref_total = params.n_cells * delay_per_cell
    z0 = (
        params.z0_override
        if params.z0_override is not None
        else math.sqrt(l_j0 / params.c_ground)
    )
    return DerivedConstants(
        l_j0=l_j0,
        c_j=c_j,
        omega_j=omega_j,
        v_ref=v_ref,
        t_ref_total=t_ref_total,
        z0=z0,
    )
