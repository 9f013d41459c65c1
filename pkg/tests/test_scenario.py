import pytest
import yaml

from copmaint.cost_models import PolicyKind
from copmaint.scenario import (Scenario, ScenarioError, dump_scenario,
                               load_scenario, parse_scenario)

GOOD = """
system:
  topology: series
  components:
    - {family: weibull, lambda: 0.4, alpha: 2.5}
    - {family: exponential, lambda: 0.8}
  copula: {family: clayton, theta: 1.5}
costs: {c_f: 100, c_p: [5, 3], c_d1: 2, c_d2: 1}
policy: {kind: age, deviation: true}
mc: {cycles: 5000, seed: 3}
"""


def test_parse_good():
    sc = parse_scenario(yaml.safe_load(GOOD))
    assert sc.system.n == 2
    assert sc.costs.c_p == (5.0, 3.0)
    assert sc.policy.kind is PolicyKind.AGE and sc.policy.deviation
    assert sc.mc.cycles == 5000


def test_scalar_cp_broadcasts():
    doc = yaml.safe_load(GOOD)
    doc["costs"]["c_p"] = 4
    sc = parse_scenario(doc)
    assert sc.costs.c_p == (4.0, 4.0)


@pytest.mark.parametrize("mutate,fragment", [
    (lambda d: d.pop("system"), "system"),
    (lambda d: d["system"].pop("copula"), "system.copula"),
    (lambda d: d["system"]["components"][0].pop("lambda"), "components[0]"),
    (lambda d: d["system"]["components"][0].update(family="gamma"), "family"),
    (lambda d: d["costs"].update(c_p=[5]), "costs.c_p"),
    (lambda d: d["costs"].update(c_f=-1), "c_f"),
    (lambda d: d["policy"].update(kind="periodic"), "policy.tau"),
    (lambda d: d["system"]["copula"].update(theta=-3), "system.copula"),
])
def test_field_errors_name_the_field(mutate, fragment):
    doc = yaml.safe_load(GOOD)
    mutate(doc)
    with pytest.raises(ScenarioError, match=fragment.replace("[", r"\[")):
        parse_scenario(doc)


def test_round_trip():
    sc = parse_scenario(yaml.safe_load(GOOD))
    assert parse_scenario(yaml.safe_load(dump_scenario(sc))) == sc


def test_round_trip_periodic():
    doc = yaml.safe_load(GOOD)
    doc["policy"] = {"kind": "periodic", "tau": 0.1, "K": 7}
    sc = parse_scenario(doc)
    assert parse_scenario(yaml.safe_load(dump_scenario(sc))) == sc


def test_load_from_file(tmp_path):
    p = tmp_path / "s.yaml"
    p.write_text(GOOD)
    assert load_scenario(str(p)).system.n == 2


def test_invalid_yaml(tmp_path):
    p = tmp_path / "bad.yaml"
    p.write_text("system: [unclosed")
    with pytest.raises(ScenarioError):
        load_scenario(str(p))
