"""Command-line behavior: schemas, determinism, exit codes, and data flow."""

import json
import math

import pytest

from jtwpa.cli import main
from jtwpa.mixing import make_pump
from jtwpa.noise import PhotonFieldState
from jtwpa.sweep import CSV_HEADER, evaluate_row, spectrum_rows

from conftest import TAU, device_path, load

RPM_DEV = device_path("rpm2000")
BARE_DEV = device_path("twpa1016")
PUMP_ARGS = ["--pump-freq", "5.965e9", "--pump-ratio", "0.5"]


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def gain_args(**kw):
    args = [
        "gain-spectrum",
        "--device", kw.get("device", RPM_DEV),
        *PUMP_ARGS,
        "--f-min", kw.get("f_min", "4e9"),
        "--f-max", kw.get("f_max", "5e9"),
        "--points", kw.get("points", "11"),
        "--dispersion", kw.get("dispersion", "rpm"),
    ]
    return args


class TestSpectrumOutput:
    def test_header_and_shape(self, capsys):
        code, out, err = run(capsys, gain_args())
        assert code == 0 and err == ""
        lines = out.splitlines()
        assert lines[0] == CSV_HEADER
        assert len(lines) == 12
        assert all(line.count(",") == 6 for line in lines[1:])
        assert out.endswith("\n")

    def test_reruns_are_byte_identical(self, capsys):
        _, out1, _ = run(capsys, gain_args())
        _, out2, _ = run(capsys, gain_args())
        assert out1 == out2

    def test_out_file_matches_stdout(self, capsys, tmp_path):
        _, out, _ = run(capsys, gain_args())
        path = tmp_path / "sweep.csv"
        code, piped, _ = run(capsys, gain_args() + ["--out", str(path)])
        assert code == 0 and piped == ""
        assert path.read_text() == out

    def test_row_matches_single_point_evaluation(self, capsys, rpm2000):
        _, out, _ = run(capsys, gain_args())
        cells = out.splitlines()[4].split(",")  # grid point 4.3 GHz
        params, derived = rpm2000
        pump = make_pump(params, derived, TAU * 5.965e9, 0.5, 0.0, "rpm")
        row = evaluate_row(
            params, derived, pump, 4.3e9, "rpm", PhotonFieldState(n_signal=1.0)
        )
        assert cells[0] == f"{row.frequency:.9g}"
        assert cells[1] == f"{row.gain_db:.9g}"
        assert cells[2] == f"{row.photon_number:.9g}"
        assert cells[3] == f"{row.added_noise:.9g}"
        assert cells[4] == f"{row.sql_limit:.9g}"
        assert cells[5] == "true" and cells[6] == ""

    def test_degenerate_point_tagged_but_valid(self, capsys):
        code, out, _ = run(
            capsys,
            gain_args(f_min="5.865e9", f_max="6.065e9", points="3", dispersion="bare"),
        )
        assert code == 0
        middle = out.splitlines()[2].split(",")
        assert middle[0] == "5.965e+09"
        assert middle[5] == "true"
        assert middle[6] == "degenerate"
        assert middle[1] != ""

    def test_invalid_rows_keep_frequency_and_reason(self, capsys):
        code, out, _ = run(
            capsys, gain_args(f_min="5.996e9", f_max="5.999e9", points="4")
        )
        assert code == 0
        for line, freq in zip(
            out.splitlines()[1:], ("5.996e+09", "5.997e+09", "5.998e+09", "5.999e+09")
        ):
            assert line == f"{freq},,,,,false,rpm-stopband"

    def test_resonator_pole_row(self, capsys):
        code, out, _ = run(
            capsys,
            gain_args(f_min="5995823116.884809", f_max="5996823116.884809", points="2"),
        )
        assert code == 0
        rows = [line.split(",") for line in out.splitlines()[1:]]
        assert rows[0][5] == "false" and rows[0][6] == "rpm-pole"
        assert rows[1][5] == "false" and rows[1][6] == "rpm-stopband"

    def test_noise_matches_gain_spectrum_without_total_input(self, capsys):
        _, out_gain, _ = run(capsys, gain_args())
        noise_argv = ["noise"] + gain_args()[1:]
        _, out_noise, _ = run(capsys, noise_argv)
        assert out_noise == out_gain

    def test_total_input_adds_half_photon(self, capsys):
        noise_argv = ["noise"] + gain_args()[1:]
        _, plain, _ = run(capsys, noise_argv)
        _, total, _ = run(capsys, noise_argv + ["--total-input"])
        for a, b in zip(plain.splitlines()[1:], total.splitlines()[1:]):
            ca, cb = a.split(","), b.split(",")
            assert ca[1] == cb[1]  # gain unchanged
            assert ca[4] == cb[4]  # quantum limit unchanged
            assert float(cb[3]) - float(ca[3]) == pytest.approx(0.5, abs=1e-7)


class TestDynamics:
    def test_endpoints(self, capsys, rpm2000):
        _, derived = rpm2000
        code, out, _ = run(
            capsys,
            [
                "dynamics", "--device", RPM_DEV, *PUMP_ARGS,
                "--signal-freq", "4e9", "--t-samples", "2",
                "--dispersion", "bare",
            ],
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "t_s,photon_number"
        assert lines[1] == "0,1"
        assert lines[2].startswith(f"{derived.t_ref_total:.9g},")
        assert len(lines) == 3

    def test_sample_count(self, capsys):
        code, out, _ = run(
            capsys,
            [
                "dynamics", "--device", RPM_DEV, *PUMP_ARGS,
                "--signal-freq", "4e9", "--t-samples", "50",
                "--dispersion", "rpm",
            ],
        )
        assert code == 0
        assert len(out.splitlines()) == 51


class TestCompare:
    def write_measured(self, tmp_path, pairs, header=True, extra_lines=()):
        lines = ["# synthetic comparison data"]
        if header:
            lines.append("frequency_hz,gain_db")
        lines += [f"{f!r},{g!r}" for f, g in pairs]
        lines += list(extra_lines)
        path = tmp_path / "measured.csv"
        path.write_text("\n".join(lines) + "\n")
        return path

    def model_pairs(self):
        params, derived = load("rpm2000")
        pump = make_pump(params, derived, TAU * 5.965e9, 0.5, 0.0, "rpm")
        rows = spectrum_rows(params, derived, pump, 4e9, 5e9, 11, "rpm")
        return [(float(r.frequency), float(r.gain_db)) for r in rows if r.valid]

    def compare_argv(self, path):
        return [
            "compare", "--device", RPM_DEV, *PUMP_ARGS,
            "--f-min", "3e9", "--f-max", "6e9",
            "--dispersion", "rpm", "--measured", str(path),
        ]

    def test_self_comparison_is_exact(self, capsys, tmp_path):
        path = self.write_measured(tmp_path, self.model_pairs())
        code, out, err = run(capsys, self.compare_argv(path))
        assert code == 0 and err == ""
        assert out == '{"max_abs_db": 0.0, "n_points_used": 11, "rms_db": 0.0}\n'

    def test_json_keys_sorted(self, capsys, tmp_path):
        path = self.write_measured(tmp_path, self.model_pairs())
        _, out, _ = run(capsys, self.compare_argv(path))
        stats = json.loads(out)
        assert list(stats) == ["max_abs_db", "n_points_used", "rms_db"]

    def test_malformed_rows_warned_and_skipped(self, capsys, tmp_path):
        path = self.write_measured(
            tmp_path,
            self.model_pairs(),
            extra_lines=["4.2e9,1.0,extra", "not-a-number,3.0"],
        )
        code, out, err = run(capsys, self.compare_argv(path))
        assert code == 0
        assert f"skipped 2 malformed row(s) in {path}" in err
        assert json.loads(out)["n_points_used"] == 11

    def test_header_is_optional(self, capsys, tmp_path):
        pairs = self.model_pairs()
        with_header = self.write_measured(tmp_path, pairs, header=True)
        _, out1, _ = run(capsys, self.compare_argv(with_header))
        no_header = tmp_path / "bare.csv"
        no_header.write_text("\n".join(f"{f!r},{g!r}" for f, g in pairs) + "\n")
        _, out2, _ = run(capsys, self.compare_argv(no_header))
        assert out1 == out2


class TestExitCodes:
    def test_missing_device_is_config_error(self, capsys):
        code, _, err = run(capsys, gain_args(device="/no/such.json"))
        assert code == 2
        assert err.startswith("jtwpa: config error:")

    def test_rpm_without_resonator_is_config_error(self, capsys):
        code, _, err = run(capsys, gain_args(device=BARE_DEV, dispersion="rpm"))
        assert code == 2
        assert "no resonator block" in err

    def test_nonpositive_f_min_is_config_error(self, capsys):
        code, _, err = run(capsys, gain_args(f_min="0"))
        assert code == 2
        assert "f_min" in err

    def test_inverted_band_is_config_error(self, capsys):
        code, _, _ = run(capsys, gain_args(f_min="6e9", f_max="5e9"))
        assert code == 2

    def test_too_few_points_is_config_error(self, capsys):
        code, _, _ = run(capsys, gain_args(points="1"))
        assert code == 2

    def test_pump_ratio_out_of_range_is_config_error(self, capsys):
        argv = gain_args()
        argv[argv.index("0.5")] = "1.0"
        code, _, err = run(capsys, argv)
        assert code == 2
        assert "pump_ratio" in err

    def test_pump_in_stopband_is_domain_error(self, capsys):
        argv = gain_args()
        argv[argv.index("5.965e9")] = "5.997e9"
        code, _, err = run(capsys, argv)
        assert code == 3
        assert err.startswith("jtwpa: domain error:")
        assert "stopband" in err

    def test_dynamics_signal_without_idler_is_domain_error(self, capsys):
        code, _, err = run(
            capsys,
            [
                "dynamics", "--device", RPM_DEV, *PUMP_ARGS,
                "--signal-freq", "12e9", "--dispersion", "bare",
            ],
        )
        assert code == 3
        assert "idler" in err

    def test_compare_missing_file_is_data_error(self, capsys):
        code, _, err = run(
            capsys,
            [
                "compare", "--device", RPM_DEV, *PUMP_ARGS,
                "--f-min", "4e9", "--f-max", "5e9",
                "--measured", "/no/such.csv",
            ],
        )
        assert code == 4
        assert err.startswith("jtwpa: data error:")

    def test_compare_empty_overlap_is_data_error(self, capsys, tmp_path):
        path = tmp_path / "far.csv"
        path.write_text("1e9,3.0\n")
        code, _, err = run(
            capsys,
            [
                "compare", "--device", RPM_DEV, *PUMP_ARGS,
                "--f-min", "4e9", "--f-max", "5e9",
                "--measured", str(path),
            ],
        )
        assert code == 4
        assert "no measured points" in err

    def test_help_exits_cleanly(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--help"])
        assert exc.value.code == 0

    def test_missing_required_flag_uses_config_exit_code(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["gain-spectrum", "--device", RPM_DEV])
        assert exc.value.code == 2
