import csv
import io

import pytest

from g2u_tradeoff import cli
from g2u_tradeoff.params import builtin_config, serialize


def _run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _rows(text):
    lines = text.splitlines()
    assert lines[0].startswith("# ")
    return list(csv.DictReader(io.StringIO("\n".join(lines[1:]))))


def test_circular_pareto_csv(capsys):
    code, out, err = _run(capsys, "circular-pareto", "--pc", "0.01", "--q-bits", "600e6", "--points", "16")
    assert code == 0
    assert "UAV-min" in err and "GT-min" in err
    rows = _rows(out)
    assert list(rows[0]) == list(cli.CIRCULAR_COLUMNS)
    assert len(rows) == 16
    E2 = [float(r["E2_J"]) for r in rows]
    E1 = [float(r["E1_J"]) for r in rows]
    assert E2 == sorted(E2)
    assert all(b <= a for a, b in zip(E1, E1[1:]))
    assert "geometric" in out.splitlines()[0]


def test_straight_pareto_fast_branch_at_30mb(capsys):
    code, out, _ = _run(capsys, "straight-pareto", "--q-bits", "30e6", "--pc", "0.05", "--points", "16")
    assert code == 0
    rows = _rows(out)
    assert list(rows[0]) == list(cli.STRAIGHT_COLUMNS)
    # the first row is the leg-floor point where both roots coincide
    assert all(r["branch"] == "fast" for r in rows[1:])


def test_extremes_to_file(tmp_path, capsys):
    out_path = tmp_path / "ext.csv"
    code, out, _ = _run(capsys, "straight-extremes", "--out", str(out_path))
    assert code == 0
    assert "wrote 2 rows" in out
    assert len(_rows(out_path.read_text())) == 2
    code, _, _ = _run(capsys, "circular-extremes", "--preset", "nominal")
    assert code == 0


def test_csv_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        assert cli.main(["circular-pareto", "--points", "12", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_ten_significant_digits(capsys):
    _, out, _ = _run(capsys, "circular-extremes", "--preset", "nominal", "--pc", "0.05")
    row = _rows(out)[1]
    assert row["E1_J"] == "3.606215463"


def test_validate_passes(capsys):
    code, out, _ = _run(capsys, "validate")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4 and all(l.startswith("PASS") for l in lines)


def test_validation_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli.oracle, "brute_pareto_circular", lambda E2, params: 1.0)
    code, out, _ = _run(capsys, "validate")
    assert code == cli.EXIT_VALIDATION
    assert "FAIL" in out


def test_config_errors(tmp_path, capsys):
    code, _, err = _run(capsys, "circular-pareto", "--config", str(tmp_path / "missing.conf"))
    assert code == cli.EXIT_CONFIG and "config error" in err
    code, _, _ = _run(capsys, "circular-pareto", "--points", "1")
    assert code == cli.EXIT_CONFIG
    bad = tmp_path / "bad.conf"
    bad.write_text(serialize(builtin_config()).replace("P2max_W = 1500.0", "P2max_W = 50"))
    assert cli.main(["circular-extremes", "--config", str(bad)]) == cli.EXIT_CONFIG


def test_straight_without_endpoints(tmp_path, capsys):
    path = tmp_path / "circle_only.conf"
    path.write_text(serialize(builtin_config().replace(qA=None, qB=None)))
    code, _, err = _run(capsys, "straight-extremes", "--config", str(path))
    assert code == cli.EXIT_CONFIG
    assert "qA_m" in err


def test_infeasible_exit_code(capsys):
    code, _, err = _run(capsys, "circular-extremes", "--pc", "0")
    assert code == cli.EXIT_INFEASIBLE
    assert "infeasible" in err


def test_bad_subcommand():
    with pytest.raises(SystemExit):
        cli.main(["plot"])


def test_numerical_exit_code(capsys, monkeypatch):
    from g2u_tradeoff.errors import NumericalError

    def boom(*args, **kwargs):
        raise NumericalError("solver diverged")

    monkeypatch.setattr(cli.circular, "pareto_curve", boom)
    code, _, err = _run(capsys, "circular-pareto")
    assert code == cli.EXIT_NUMERICAL
    assert "diverged" in err
