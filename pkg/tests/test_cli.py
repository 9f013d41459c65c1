import csv
import json

import pytest

from copmaint.cli import main

SERIES_YAML = """
system:
  topology: series
  components:
    - {family: weibull, lambda: 0.4, alpha: 2.5}
    - {family: weibull, lambda: 0.4, alpha: 2.5}
  copula: {family: gumbel-hougaard, theta: 2.0}
costs: {c_f: 100, c_p: 5}
policy: {kind: age}
mc: {cycles: 50000, seed: 7}
"""

FGM_YAML = SERIES_YAML.replace(
    "{family: gumbel-hougaard, theta: 2.0}", "{family: fgm, theta: 0.5}")

GB_YAML = SERIES_YAML.replace(
    "{family: gumbel-hougaard, theta: 2.0}", "{family: gumbel-barnett, theta: 0.5}")


@pytest.fixture
def scenario(tmp_path):
    p = tmp_path / "s.yaml"
    p.write_text(SERIES_YAML)
    return str(p)


def test_optimize(scenario, capsys):
    assert main(["optimize", scenario]) == 0
    out = capsys.readouterr().out
    assert "optimal T*: 0.771687" in out
    assert "21.827781" in out


def test_optimize_json(scenario, capsys):
    assert main(["optimize", scenario, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["optimum"] == pytest.approx(0.7717, abs=1e-4)
    assert doc["uniqueness_guaranteed"] is True


def test_periodic_alias_with_tau(scenario, capsys):
    assert main(["periodic", scenario, "--tau", "0.1"]) == 0
    out = capsys.readouterr().out
    assert "optimal K*: 8" in out


def test_dump_config_round_trips(scenario, capsys, tmp_path):
    assert main(["optimize", scenario, "--dump-config"]) == 0
    dumped = tmp_path / "echo.yaml"
    dumped.write_text(capsys.readouterr().out)
    assert main(["optimize", str(dumped)]) == 0


def test_check(scenario, capsys):
    assert main(["check", scenario]) == 0
    assert "overall: PASS" in capsys.readouterr().out


def test_missing_file_exit_1(capsys):
    assert main(["optimize", "/nonexistent/x.yaml"]) == 1
    assert "error" in capsys.readouterr().err


def test_invalid_scenario_exit_1(tmp_path, capsys):
    p = tmp_path / "bad.yaml"
    p.write_text("system: {}\n")
    assert main(["optimize", str(p)]) == 1


def test_strict_condition_failure_exit_2(tmp_path, capsys):
    p = tmp_path / "fgm.yaml"
    p.write_text(FGM_YAML)
    assert main(["check", str(p), "--strict"]) == 2
    assert main(["optimize", str(p), "--strict"]) == 2
    # non-strict still optimizes, with a warning note
    assert main(["optimize", str(p)]) == 0


def test_capability_exit_3(tmp_path, capsys):
    # Gumbel-Barnett has no sampler -> simulate exits 3
    p = tmp_path / "gb.yaml"
    p.write_text(GB_YAML)
    assert main(["simulate", str(p)]) == 3
    assert "capability" in capsys.readouterr().err


def test_table_csv(tmp_path, capsys):
    out = tmp_path / "t7.csv"
    assert main(["table", "7", "-o", str(out), "--compare"]) == 0
    with open(out) as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 7
    first = rows[0]
    assert first["n"] == "2"
    assert int(first["K_star[cd0_0]"]) == 8
    assert float(first["abs_diff_cost[cd0_0]"]) < 1e-2
    # the unreadable published cell is emitted blank
    bad = [r for r in rows if r["n"] == "7"][0]
    assert bad["published_cost[cd2_1]"] == ""


def test_curve_csv(scenario, tmp_path):
    out = tmp_path / "c.csv"
    assert main(["curve", scenario, "--var", "T", "--from", "0.3", "--to", "2.0",
                 "--steps", "10", "--theta", "1", "2", "5", "-o", str(out)]) == 0
    with open(out) as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 30
    assert {r["theta"] for r in rows} == {"1.0", "2.0", "5.0"}
    # stronger dependence lowers the series cost rate at fixed T
    at_t = {r["theta"]: float(r["cost_rate"]) for r in rows if abs(float(r["T"]) - 2.0) < 1e-9}
    assert at_t["5.0"] < at_t["2.0"] < at_t["1.0"]


def test_curve_k_sweep(tmp_path):
    p = tmp_path / "p.yaml"
    p.write_text(SERIES_YAML.replace("{kind: age}", "{kind: periodic, tau: 0.1}"))
    out = tmp_path / "k.csv"
    assert main(["curve", str(p), "--var", "K", "--from", "1", "--to", "20",
                 "--steps", "20", "-o", str(out)]) == 0
    with open(out) as fh:
        rows = list(csv.DictReader(fh))
    costs = [float(r["cost_rate"]) for r in rows]
    assert min(costs) == pytest.approx(21.8480, abs=1e-3)


def test_simulate(scenario, capsys):
    assert main(["simulate", scenario]) == 0
    out = capsys.readouterr().out
    assert "z-score" in out
    z = float(out.split("z-score:")[1])
    assert abs(z) < 5
