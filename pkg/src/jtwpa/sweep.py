"""Frequency sweeps, time traces, CSV serialization, and data comparison.

Every row is a pure function of (device, pump, frequency), so sweeps are
order-independent maps over the grid.  Domain failures of individual rows
(cutoff, stopband, missing idler) become invalid rows with a reason token
instead of aborting the sweep.  Numeric cells are rendered with 9
significant digits so repeated runs are byte-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .device import DeviceParams, DerivedConstants
from .errors import DataError, DomainError
from .mixing import PumpConfig, coupling_coefficients
from .noise import PhotonFieldState, added_noise, output_photon_number

CSV_HEADER = "frequency_hz,gain_db,photon_number,added_noise,sql_limit,valid,invalid_reason"
DYNAMICS_HEADER = "t_s,photon_number"

# Signal and pump count as degenerate when within this relative distance.
_DEGENERATE_RTOL = 1e-12


@dataclass(frozen=True)
class SpectrumRow:
    """One sweep point; numeric fields are None on invalid rows."""

    frequency: float
    gain_db: float | None
    photon_number: float | None
    added_noise: float | None
    sql_limit: float | None
    valid: bool
    reason: str | None


def frequency_grid(f_min: float, f_max: float, points: int) -> np.ndarray:
    """Uniform inclusive grid in Hz, ascending."""
    return np.linspace(f_min, f_max, points)


def evaluate_row(
    device: DeviceParams,
    derived: DerivedConstants,
    pump: PumpConfig,
    frequency: float,
    mode: str,
    state: PhotonFieldState,
    total_input: bool = False,
) -> SpectrumRow:
    """Evaluate gain, output photons, and added noise at one frequency.

    The evolution time is the line's total reference delay.  The
    degenerate point (signal at the pump) is computed normally but tagged
    with an informational reason token.
    """
    omega = 2.0 * math.pi * frequency
    try:
        coeffs = coupling_coefficients(device, derived, pump, omega, mode)
        t = derived.t_ref_total
        report = added_noise(state, coeffs, t)
        photons = output_photon_number(state, coeffs, t)
    except DomainError as exc:
        return SpectrumRow(
            frequency=frequency,
            gain_db=None,
            photon_number=None,
            added_noise=None,
            sql_limit=None,
            valid=False,
            reason=exc.token,
        )
    reason = None
    if abs(omega - pump.omega_p) <= _DEGENERATE_RTOL * pump.omega_p:
        reason = "degenerate"
    noise_value = report.added_noise + 0.5 if total_input else report.added_noise
    return SpectrumRow(
        frequency=frequency,
        gain_db=10.0 * math.log10(report.gain_power),
        photon_number=photons,
        added_noise=noise_value,
        sql_limit=report.sql_bound,
        valid=True,
        reason=reason,
    )


def spectrum_rows(
    device: DeviceParams,
    derived: DerivedConstants,
    pump: PumpConfig,
    f_min: float,
    f_max: float,
    points: int,
    mode: str,
    state: PhotonFieldState | None = None,
    total_input: bool = False,
) -> list[SpectrumRow]:
    """Map evaluate_row over the frequency grid (ascending)."""
    if state is None:
        state = PhotonFieldState(n_signal=1.0)
    # Plain-float scalars keep single-point reruns bit-identical to sweeps.
    return [
        evaluate_row(device, derived, pump, float(f), mode, state, total_input)
        for f in frequency_grid(f_min, f_max, points)
    ]


def _fmt(value: float) -> str:
    return f"{value:.9g}"


def spectrum_csv(rows: list[SpectrumRow]) -> str:
    """Serialize sweep rows; invalid rows keep the frequency and the reason."""
    lines = [CSV_HEADER]
    for row in rows:
        if row.valid:
            lines.append(
                ",".join(
                    (
                        _fmt(row.frequency),
                        _fmt(row.gain_db),
                        _fmt(row.photon_number),
                        _fmt(row.added_noise),
                        _fmt(row.sql_limit),
                        "true",
                        row.reason or "",
                    )
                )
            )
        else:
            lines.append(f"{_fmt(row.frequency)},,,,,false,{row.reason}")
    return "\n".join(lines) + "\n"


def dynamics_rows(
    device: DeviceParams,
    derived: DerivedConstants,
    pump: PumpConfig,
    signal_freq: float,
    t_samples: int,
    mode: str,
    state: PhotonFieldState | None = None,
) -> list[tuple[float, float]]:
    """Signal photon number on a uniform time grid [0, t_ref_total].

    A single explicit operating point is requested, so domain failures
    propagate instead of producing invalid rows.
    """
    if state is None:
        state = PhotonFieldState(n_signal=1.0)
    omega = 2.0 * math.pi * signal_freq
    coeffs = coupling_coefficients(device, derived, pump, omega, mode)
    times = np.linspace(0.0, derived.t_ref_total, t_samples)
    return [(float(t), output_photon_number(state, coeffs, float(t))) for t in times]


def dynamics_csv(rows: list[tuple[float, float]]) -> str:
    lines = [DYNAMICS_HEADER]
    for t, n in rows:
        lines.append(f"{_fmt(t)},{_fmt(n)}")
    return "\n".join(lines) + "\n"


def read_measured_csv(path) -> tuple[list[tuple[float, float]], int]:
    """Read a measured (frequency_hz, gain_db) table.

    Blank lines and '#' comments are ignored; a non-numeric first data
    line is accepted as a header naming the two columns.  Malformed rows
    are skipped and counted.  Returns (rows, n_skipped).
    """
    try:
        with open(path) as fh:
            raw = fh.readlines()
    except OSError as exc:
        raise DataError(f"cannot read measured data '{path}': {exc}") from exc
    rows: list[tuple[float, float]] = []
    skipped = 0
    first_data = True
    for line in raw:
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        parts = [p.strip() for p in text.split(",")]
        if first_data:
            first_data = False
            header = [p.lower() for p in parts]
            if header[:2] == ["frequency_hz", "gain_db"]:
                continue
        if len(parts) != 2:
            skipped += 1
            continue
        try:
            rows.append((float(parts[0]), float(parts[1])))
        except ValueError:
            skipped += 1
            continue
    if not rows:
        raise DataError(f"no usable rows in measured data '{path}'")
    return rows, skipped


def compare_stats(
    device: DeviceParams,
    derived: DerivedConstants,
    pump: PumpConfig,
    measured: list[tuple[float, float]],
    f_min: float,
    f_max: float,
    mode: str,
) -> dict:
    """Model-vs-measurement gain residuals over the overlapping band.

    The model is evaluated at each measured frequency inside
    [f_min, f_max]; measured points where the model is invalid are
    dropped.  Raises DataError when nothing overlaps.
    """
    state = PhotonFieldState(n_signal=1.0)
    residuals = []
    for freq, measured_db in measured:
        if not f_min <= freq <= f_max:
            continue
        row = evaluate_row(device, derived, pump, freq, mode, state)
        if not row.valid:
            continue
        residuals.append(row.gain_db - measured_db)
    if not residuals:
        raise DataError(
            f"no measured points usable in [{f_min:g}, {f_max:g}] Hz"
        )
    res = np.asarray(residuals)
    return {
        "rms_db": float(f"{math.sqrt(float(np.mean(res**2))):.9g}"),
        "max_abs_db": float(f"{float(np.max(np.abs(res))):.9g}"),
        "n_points_used": len(residuals),
    }
