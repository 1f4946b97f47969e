import json

from photoncat import cli


def run_cli(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestExitCodes:
    def test_config_error_is_two(self, capsys):
        code, _, err = run_cli(
            ["sweep", "--family", "Psi2", "--gamma-start", "0"], capsys
        )
        assert code == 2
        assert "gamma start" in err

    def test_unknown_family_is_config_error(self, capsys):
        code, _, err = run_cli(["sweep", "--family", "Psi9"], capsys)
        assert code == 2

    def test_partial_sweep_is_four(self, capsys):
        code, out, _ = run_cli(
            [
                "sweep", "--family", "Psi2", "--gamma-start", "1e-6",
                "--gamma-stop", "1.0", "--gamma-count", "2", "--spacing", "log",
                "--witness", "mandel_q", "--order", "2", "--engine", "analytic",
            ],
            capsys,
        )
        assert code == 4
        assert "DegenerateState" in out

    def test_clean_sweep_is_zero(self, capsys):
        code, out, _ = run_cli(
            [
                "sweep", "--family", "Psi1", "--gamma-start", "0.5",
                "--gamma-stop", "1.0", "--gamma-count", "2",
                "--witness", "antibunching", "--order", "2",
                "--engine", "analytic",
            ],
            capsys,
        )
        assert code == 0
        assert out.startswith("family,m,n,gamma,witness,l,value")


class TestSweepOutput:
    def test_csv_written_to_file(self, tmp_path, capsys):
        out_file = tmp_path / "rows.csv"
        code, _, _ = run_cli(
            [
                "sweep", "--family", "Psi1", "--gamma-count", "2",
                "--gamma-start", "0.5", "--gamma-stop", "1.0",
                "--witness", "mandel_q", "--order", "2",
                "--engine", "analytic", "--out", str(out_file),
            ],
            capsys,
        )
        assert code == 0
        lines = out_file.read_text().strip().split("\n")
        assert len(lines) == 3
        assert (tmp_path / "rows.csv.meta.json").exists()

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            [
                "sweep", "--family", "Psi3", "--gamma-count", "1",
                "--gamma-start", "0.8", "--gamma-stop", "0.8",
                "--witness", "subpoissonian", "--order", "2",
                "--engine", "analytic", "--format", "json",
            ],
            capsys,
        )
        assert code == 0
        rows = json.loads(out)
        assert rows[0]["witness"] == "subpoissonian"
        assert rows[0]["nonclassical"] is True

    def test_threads_flag_preserves_output(self, capsys):
        argv = [
            "sweep", "--family", "Psi1,Psi2", "--gamma-start", "0.3",
            "--gamma-stop", "1.5", "--gamma-count", "4",
            "--witness", "mandel_q,antibunching", "--order", "2,3",
            "--engine", "analytic",
        ]
        code1, out1, _ = run_cli(argv + ["--threads", "1"], capsys)
        code4, out4, _ = run_cli(argv + ["--threads", "4"], capsys)
        assert code1 == code4 == 0
        assert out1 == out4


class TestConfigFile:
    def test_file_values_used_and_flags_override(self, tmp_path, capsys):
        config = tmp_path / "sweep.json"
        config.write_text(
            json.dumps(
                {
                    "family": "Psi1",
                    "gamma_start": 0.4,
                    "gamma_stop": 0.8,
                    "gamma_count": 3,
                    "witness": "mandel_q",
                    "order": "2",
                    "engine": "analytic",
                }
            )
        )
        code, out, _ = run_cli(["sweep", "--config", str(config)], capsys)
        assert code == 0
        assert len(out.strip().split("\n")) == 4  # header + 3 rows

        code, out, _ = run_cli(
            ["sweep", "--config", str(config), "--gamma-count", "2"], capsys
        )
        assert code == 0
        assert len(out.strip().split("\n")) == 3  # flag overrides file

    def test_missing_config_file(self, capsys):
        code, _, err = run_cli(["sweep", "--config", "/nonexistent.json"], capsys)
        assert code == 2
        assert "config" in err


class TestWitnessCommand:
    def test_single_point_output(self, capsys):
        code, out, _ = run_cli(
            [
                "witness", "--family", "Psi1", "--gamma-start", "1.0",
                "--m", "1", "--n", "3", "--witness", "mandel_q",
                "--order", "2", "--engine", "both",
            ],
            capsys,
        )
        assert code == 0
        assert "mandel_q l=2:" in out
        assert "nonclassical" in out
        assert "discrepancy" in out

    def test_json_artifact(self, tmp_path, capsys):
        out_file = tmp_path / "witness.json"
        code, _, _ = run_cli(
            [
                "witness", "--family", "Psi4", "--gamma-start", "0.7",
                "--m", "2", "--n", "6", "--witness", "squeezing",
                "--order", "squeezing=2,4", "--engine", "analytic",
                "--out", str(out_file),
            ],
            capsys,
        )
        assert code == 0
        payload = json.loads(out_file.read_text())
        assert [entry["l"] for entry in payload] == [2, 4]


class TestVerifyCommand:
    def test_verify_passes_and_writes_json(self, tmp_path, capsys):
        out_file = tmp_path / "verify.json"
        code, out, _ = run_cli(["verify", "--out", str(out_file)], capsys)
        assert code == 0
        assert "verdict: PASS" in out
        payload = json.loads(out_file.read_text())
        assert payload["passed"] is True
        assert {c["name"] for c in payload["checks"]} >= {
            "norm_const_sq_inv",
            "moment_family_antinormal",
            "moment_table_analytic",
            "quadrature_central_moment",
        }
