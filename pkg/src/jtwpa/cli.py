"""Command-line interface.

Subcommands: gain-spectrum and noise (frequency sweeps sharing one CSV
schema), dynamics (photon-number time trace at one signal frequency), and
compare (model gain vs a measured CSV).  Exit codes: 0 success, 2
configuration error, 3 physics-domain error, 4 unusable input data.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .device import derive_constants, load_device
from .errors import ConfigError, DataError, DomainError
from .mixing import make_pump
from .sweep import (
    compare_stats,
    dynamics_csv,
    dynamics_rows,
    read_measured_csv,
    spectrum_csv,
    spectrum_rows,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_DATA = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jtwpa",
        description=(
            "Gain, photon-number dynamics, and added noise of four-wave-mixing"
            " Josephson traveling-wave parametric amplifiers"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--device", required=True, help="device JSON file")
    common.add_argument(
        "--pump-freq", type=float, required=True, help="pump frequency [Hz]"
    )
    common.add_argument(
        "--pump-ratio",
        type=float,
        required=True,
        help="pump current over critical current, in [0, 1)",
    )
    common.add_argument(
        "--temp", type=float, default=0.0, help="bath temperature [K] (default 0)"
    )
    common.add_argument(
        "--dispersion",
        choices=("bare", "rpm"),
        default="bare",
        help="dispersion model (default bare)",
    )
    common.add_argument("--out", help="write output to this file instead of stdout")

    band = argparse.ArgumentParser(add_help=False)
    band.add_argument(
        "--f-min", type=float, required=True, help="sweep start frequency [Hz]"
    )
    band.add_argument(
        "--f-max", type=float, required=True, help="sweep end frequency [Hz]"
    )

    for name, summary in (
        ("gain-spectrum", "sweep gain over a frequency band"),
        ("noise", "sweep added noise over a frequency band"),
    ):
        cmd = sub.add_parser(name, parents=[common, band], help=summary)
        cmd.add_argument(
            "--points", type=int, required=True, help="number of grid points (>= 2)"
        )
        cmd.add_argument(
            "--total-input",
            action="store_true",
            help="report added noise plus the half-photon vacuum contribution",
        )

    dyn = sub.add_parser(
        "dynamics", parents=[common], help="photon number along the line over time"
    )
    dyn.add_argument(
        "--signal-freq", type=float, required=True, help="signal frequency [Hz]"
    )
    dyn.add_argument(
        "--t-samples",
        type=int,
        default=200,
        help="number of time samples on [0, t_ref_total] (default 200)",
    )

    cmp_cmd = sub.add_parser(
        "compare", parents=[common, band], help="compare model gain to measured data"
    )
    cmp_cmd.add_argument(
        "--measured", required=True, help="measured CSV with frequency_hz,gain_db"
    )
    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def _check_band(f_min: float, f_max: float) -> None:
    if not (math.isfinite(f_min) and math.isfinite(f_max)) or not 0.0 < f_min < f_max:
        raise ConfigError(
            f"need 0 < f_min < f_max, got f_min={f_min!r}, f_max={f_max!r}"
        )


def run(args: argparse.Namespace) -> None:
    device = load_device(args.device)
    derived = derive_constants(device)
    pump = make_pump(
        device,
        derived,
        2.0 * math.pi * args.pump_freq,
        args.pump_ratio,
        args.temp,
        args.dispersion,
    )

    if args.command in ("gain-spectrum", "noise"):
        _check_band(args.f_min, args.f_max)
        if args.points < 2:
            raise ConfigError(f"--points must be >= 2, got {args.points}")
        rows = spectrum_rows(
            device,
            derived,
            pump,
            args.f_min,
            args.f_max,
            args.points,
            args.dispersion,
            total_input=args.total_input,
        )
        _emit(spectrum_csv(rows), args.out)
    elif args.command == "dynamics":
        if args.t_samples < 2:
            raise ConfigError(f"--t-samples must be >= 2, got {args.t_samples}")
        rows = dynamics_rows(
            device,
            derived,
            pump,
            args.signal_freq,
            args.t_samples,
            args.dispersion,
        )
        _emit(dynamics_csv(rows), args.out)
    elif args.command == "compare":
        _check_band(args.f_min, args.f_max)
        measured, skipped = read_measured_csv(args.measured)
        if skipped:
            print(
                f"warning: skipped {skipped} malformed row(s) in {args.measured}",
                file=sys.stderr,
            )
        stats = compare_stats(
            device,
            derived,
            pump,
            measured,
            args.f_min,
            args.f_max,
            args.dispersion,
        )
        _emit(json.dumps(stats, sort_keys=True) + "\n", args.out)
    else:  # pragma: no cover - argparse enforces the choices
        raise ConfigError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        run(args)
    except ConfigError as exc:
        print(f"jtwpa: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DomainError as exc:
        print(f"jtwpa: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DataError as exc:
        print(f"jtwpa: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
