import json
import math
import subprocess
import sys

import pytest

from besselstruve import (
    DomainError,
    REPORT_COLUMNS,
    audit_point,
    render_report,
    write_report,
)


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "besselstruve", *args],
                          capture_output=True, text=True)


@pytest.fixture(scope="module")
def one_record():
    return audit_point("T3", mu=1.0, lam=2.5, a=1.0, y=0.5)


@pytest.fixture(scope="module")
def t2_records():
    # stated form unevaluable -> exercises the absent-value encoding
    return [audit_point("T2", mu=1.0, lam=2.0, a=1.0, y=0.5, alpha=0.0),
            audit_point("T2", mu=1.0, lam=2.0, a=1.0, y=0.8, alpha=0.0)]


class TestCsv:
    def test_header_and_row_count(self, one_record):
        lines = render_report([one_record], "csv").splitlines()
        assert lines[0] == ",".join(REPORT_COLUMNS)
        assert len(lines) == 2

    def test_verdict_verbatim(self, one_record):
        assert render_report([one_record], "csv").splitlines()[1].endswith("VERIFIED")

    def test_absent_values_are_empty_cells(self, t2_records):
        row = render_report(t2_records, "csv").splitlines()[1].split(",")
        cols = dict(zip(REPORT_COLUMNS, row))
        assert cols["rhs_stated"] == ""
        assert cols["rel_err_stated"] == ""
        assert cols["verdict"] == "REFUTED"

    def test_17_digit_round_trip(self, one_record):
        row = render_report([one_record], "csv").splitlines()[1].split(",")
        cols = dict(zip(REPORT_COLUMNS, row))
        assert float(cols["lhs_value"]) == one_record.lhs.value
        assert float(cols["rel_err_derived"]) == one_record.rel_err_derived

    def test_empty_report_rejected(self):
        with pytest.raises(DomainError):
            render_report([], "csv")


class TestJson:
    def test_round_trip_bit_exact(self, one_record, t2_records):
        records = [one_record] + t2_records
        parsed = json.loads(render_report(records, "json"))
        assert len(parsed) == 3
        for rec, row in zip(records, parsed):
            assert list(row) == list(REPORT_COLUMNS)
            assert row["lhs_value"] == rec.lhs.value
            assert row["rhs_derived"] == rec.rhs_derived.value
            assert row["rel_err_derived"] == rec.rel_err_derived
            assert row["mu"] == rec.mu and row["lambda"] == rec.lam
        assert parsed[1]["rhs_stated"] is None
        assert parsed[1]["rel_err_stated"] is None
        assert parsed[0]["verdict"] == "VERIFIED"

    def test_rendering_deterministic(self, one_record):
        a = render_report([one_record], "json")
        assert a == render_report([one_record], "json")


class TestWriteReport:
    def test_write_and_read_back(self, tmp_path, one_record):
        path = tmp_path / "out.csv"
        write_report([one_record], "csv", str(path))
        assert path.read_text().startswith("identity_id,")

    def test_io_error_names_path(self, one_record):
        with pytest.raises(OSError) as exc:
            write_report([one_record], "csv", "/nonexistent-dir/report.csv")
        assert "/nonexistent-dir/report.csv" in str(exc.value)

    def test_unknown_format(self, one_record):
        with pytest.raises(DomainError):
            render_report([one_record], "xml")


class TestCli:
    def test_eval_kernel_exponential(self):
        res = run_cli("eval-kernel", "--alpha", "-0.5", "--z", "1")
        assert res.returncode == 0
        assert "2.71828182846" in res.stdout

    def test_eval_kernel_json(self):
        res = run_cli("eval-kernel", "--alpha", "-0.5", "--z", "1",
                      "--format", "json")
        payload = json.loads(res.stdout)
        assert payload["value"] == pytest.approx(math.e, rel=1e-12)
        assert payload["converged"] is True
        assert "terms_used" in payload

    def test_oberhettinger(self):
        res = run_cli("oberhettinger", "--mu", "1", "--lambda", "2", "--a", "1")
        assert res.returncode == 0
        assert "0.333333333333" in res.stdout

    def test_audit_reports_verdict(self):
        res = run_cli("audit", "--id", "T3", "--mu", "1", "--lambda", "2.5",
                      "--a", "1", "--y", "0.5", "--gamma", "1")
        assert res.returncode == 0
        assert "VERIFIED" in res.stdout

    def test_eval_wright(self):
        res = run_cli("eval-wright", "--upper", "1,1", "--lower", "1,1",
                      "--z", "1", "--format", "json")
        assert json.loads(res.stdout)["value"] == pytest.approx(math.e, rel=1e-12)

    def test_eval_pfq(self):
        res = run_cli("eval-pfq", "--upper", "1", "--z", "0.5", "--format", "json")
        assert json.loads(res.stdout)["value"] == pytest.approx(2.0, rel=1e-11)

    def test_quad_command(self):
        res = run_cli("quad", "--mu", "1", "--lambda", "2", "--a", "1")
        assert res.returncode == 0
        assert "0.333333333333" in res.stdout

    def test_domain_error_exit_2(self):
        res = run_cli("oberhettinger", "--mu", "1", "--lambda", "1", "--a", "1")
        assert res.returncode == 2
        assert "0 < mu < lam" in res.stderr

    def test_tol_range_enforced(self):
        res = run_cli("eval-kernel", "--alpha", "0", "--z", "1", "--tol", "1e-20")
        assert res.returncode == 2

    def test_nonconvergence_exit_3(self):
        res = run_cli("eval-kernel", "--alpha", "0", "--z", "700")
        assert res.returncode == 3

    def test_sweep_deterministic_files(self, tmp_path):
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        for out in (out1, out2):
            res = run_cli("sweep", "--id", "T4", "--format", "csv",
                          "--output", str(out))
            assert res.returncode == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_sweep_custom_grid(self, tmp_path):
        grid = tmp_path / "grid.json"
        grid.write_text('{"mu": [0.8], "dlam": [1.0], "a": [1.0], "gy": [0.3]}')
        out = tmp_path / "sweep.csv"
        res = run_cli("sweep", "--id", "T3", "--grid", str(grid),
                      "--format", "csv", "--output", str(out))
        assert res.returncode == 0
        assert len(out.read_text().splitlines()) == 2  # header + 1 point

    def test_sweep_unknown_grid_axis(self, tmp_path):
        grid = tmp_path / "grid.json"
        grid.write_text('{"nu": [1.0]}')
        res = run_cli("sweep", "--id", "T3", "--grid", str(grid))
        assert res.returncode == 2
        assert "unknown grid axes" in res.stderr

    def test_config_file_run(self, tmp_path):
        cfg = tmp_path / "run.json"
        out = tmp_path / "report.csv"
        cfg.write_text(json.dumps({
            "command": "audit",
            "params": {"id": "T1", "mu": 1, "lambda": 2.5, "a": 1,
                       "y": 0.5, "alpha": 1},
            "tol": 1e-10,
            "output_format": "csv",
            "output_path": str(out),
        }))
        res = run_cli("--config", str(cfg))
        assert res.returncode == 0
        assert "REFUTED" in out.read_text()

    def test_config_unknown_key_rejected(self, tmp_path):
        cfg = tmp_path / "run.json"
        cfg.write_text('{"command": "oberhettinger", "params": {"mu": 1, '
                       '"lambda": 2, "a": 1}, "seed": 7}')
        res = run_cli("--config", str(cfg))
        assert res.returncode == 2
        assert "unknown config keys" in res.stderr

    def test_unknown_param_key_rejected(self, tmp_path):
        cfg = tmp_path / "run.json"
        cfg.write_text('{"command": "oberhettinger", '
                       '"params": {"mu": 1, "lambda": 2, "a": 1, "b": 4}}')
        res = run_cli("--config", str(cfg))
        assert res.returncode == 2
        assert "unknown parameter keys" in res.stderr

    def test_no_command_exit_2(self):
        res = run_cli()
        assert res.returncode == 2


class TestCliErrorMapping:
    def test_divergent_series_exit_2(self):
        # p = q+1 on the unit circle is a precondition violation, not a
        # numerical failure
        res = run_cli("eval-pfq", "--upper", "1", "--upper", "2",
                      "--lower", "3", "--z", "1.0")
        assert res.returncode == 2
        assert "|z| < 1" in res.stderr

    def test_wright_numerator_pole_exit_2(self):
        # equals form: argparse would otherwise read "-2,1" as a flag
        res = run_cli("eval-wright", "--upper=-2,1", "--lower", "1,1",
                      "--z", "0.5")
        assert res.returncode == 2
        assert "pole" in res.stderr
