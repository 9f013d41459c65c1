"""Scenario files: one YAML document describing system, costs, policy and
optional Monte Carlo settings.

Example::

    system:
      topology: series
      components:
        - {family: weibull, lambda: 0.4, alpha: 2.5}
        - {family: weibull, lambda: 0.4, alpha: 2.5}
      copula: {family: gumbel-hougaard, theta: 2.0}
    costs: {c_f: 100, c_p: 5, c_d1: 2, c_d2: 1}   # scalar c_p broadcasts
    policy: {kind: age, deviation: true}           # periodic adds tau (and
                                                   # optionally K); age may
                                                   # pin T for simulation
    mc: {cycles: 100000, seed: 42}                 # optional

Parse failures raise ScenarioError with the offending field path in the
message.
"""

from __future__ import annotations

from dataclasses import dataclass

import yaml

from .copulas import CopulaFamily, CopulaModel
from .cost_models import CostParams, PolicyKind
from .errors import CopmaintError, ParameterError
from .lifetimes import Family, LifetimeModel
from .systems import SystemSpec, Topology


class ScenarioError(CopmaintError, ValueError):
    """A scenario file failed validation; the message names the field."""


@dataclass(frozen=True)
class PolicySpec:
    kind: PolicyKind
    deviation: bool = False
    tau: float | None = None
    T: float | None = None
    K: int | None = None


@dataclass(frozen=True)
class McSpec:
    cycles: int
    seed: int


@dataclass(frozen=True)
class Scenario:
    system: SystemSpec
    costs: CostParams
    policy: PolicySpec
    mc: McSpec | None = None


_LIFETIME_FAMILIES = {
    "exponential": Family.EXPONENTIAL,
    "weibull": Family.WEIBULL,
}
_COPULA_FAMILIES = {f.value: f for f in CopulaFamily}
_TOPOLOGIES = {t.value: t for t in Topology}
_POLICY_KINDS = {k.value: k for k in PolicyKind}


def _need(mapping, key, where, kind=None, choices=None):
    if not isinstance(mapping, dict) or key not in mapping:
        raise ScenarioError(f"missing field '{where}.{key}'")
    val = mapping[key]
    if choices is not None and val not in choices:
        raise ScenarioError(
            f"field '{where}.{key}': expected one of {sorted(choices)}, got {val!r}")
    if kind is not None:
        try:
            val = kind(val)
        except (TypeError, ValueError):
            raise ScenarioError(f"field '{where}.{key}': cannot read {val!r}") from None
    return val


def _component(entry, where) -> LifetimeModel:
    fam = _need(entry, "family", where, choices=set(_LIFETIME_FAMILIES))
    lam = _need(entry, "lambda", where, float)
    try:
        if _LIFETIME_FAMILIES[fam] is Family.EXPONENTIAL:
            return LifetimeModel.exponential(lam)
        return LifetimeModel.weibull(lam, _need(entry, "alpha", where, float))
    except ParameterError as e:
        raise ScenarioError(f"field '{where}': {e}") from None


def parse_scenario(doc: dict) -> Scenario:
    if not isinstance(doc, dict):
        raise ScenarioError("scenario document must be a mapping")

    sys_doc = _need(doc, "system", "")
    topo = _TOPOLOGIES[_need(sys_doc, "topology", "system", choices=set(_TOPOLOGIES))]
    comp_doc = _need(sys_doc, "components", "system")
    if not isinstance(comp_doc, list) or not comp_doc:
        raise ScenarioError("field 'system.components': expected a non-empty list")
    comps = tuple(_component(e, f"system.components[{i}]")
                  for i, e in enumerate(comp_doc))
    cop_doc = _need(sys_doc, "copula", "system")
    fam = _COPULA_FAMILIES[_need(cop_doc, "family", "system.copula",
                                 choices=set(_COPULA_FAMILIES))]
    theta = float(cop_doc.get("theta", 0.0))
    try:
        copula = CopulaModel(fam, theta, len(comps))
        system = SystemSpec(topo, comps, copula)
    except ParameterError as e:
        raise ScenarioError(f"field 'system.copula': {e}") from None

    cost_doc = _need(doc, "costs", "")
    c_f = _need(cost_doc, "c_f", "costs", float)
    c_p = _need(cost_doc, "c_p", "costs")
    if isinstance(c_p, (int, float)):
        c_p = (float(c_p),) * len(comps)
    elif isinstance(c_p, list):
        if len(c_p) != len(comps):
            raise ScenarioError(
                f"field 'costs.c_p': expected {len(comps)} entries, got {len(c_p)}")
        c_p = tuple(float(x) for x in c_p)
    else:
        raise ScenarioError("field 'costs.c_p': expected a number or a list")
    try:
        costs = CostParams(c_f, c_p, float(cost_doc.get("c_d1", 0.0)),
                           float(cost_doc.get("c_d2", 0.0)))
    except ParameterError as e:
        raise ScenarioError(f"field 'costs': {e}") from None

    pol_doc = _need(doc, "policy", "")
    kind = _POLICY_KINDS[_need(pol_doc, "kind", "policy", choices=set(_POLICY_KINDS))]
    tau = pol_doc.get("tau")
    if kind is PolicyKind.PERIODIC and tau is None:
        raise ScenarioError("field 'policy.tau': required for periodic policies")
    if tau is not None and float(tau) <= 0:
        raise ScenarioError("field 'policy.tau': must be positive")
    policy = PolicySpec(
        kind=kind,
        deviation=bool(pol_doc.get("deviation", False)),
        tau=None if tau is None else float(tau),
        T=None if pol_doc.get("T") is None else float(pol_doc["T"]),
        K=None if pol_doc.get("K") is None else int(pol_doc["K"]),
    )

    mc = None
    if "mc" in doc and doc["mc"] is not None:
        mc_doc = doc["mc"]
        mc = McSpec(_need(mc_doc, "cycles", "mc", int), _need(mc_doc, "seed", "mc", int))

    return Scenario(system, costs, policy, mc)


def load_scenario(path: str) -> Scenario:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = yaml.safe_load(fh)
        except yaml.YAMLError as e:
            raise ScenarioError(f"cannot parse {path}: {e}") from None
    return parse_scenario(doc)


def dump_scenario(sc: Scenario) -> str:
    """Emit YAML that re-parses to the identical scenario (round-trip)."""
    doc = {
        "system": {
            "topology": sc.system.topology.value,
            "components": [
                ({"family": "exponential", "lambda": m.rate}
                 if m.family is Family.EXPONENTIAL else
                 {"family": "weibull", "lambda": m.rate, "alpha": m.shape})
                for m in sc.system.components
            ],
            "copula": {"family": sc.system.copula.family.value,
                       "theta": sc.system.copula.theta},
        },
        "costs": {"c_f": sc.costs.c_f, "c_p": list(sc.costs.c_p),
                  "c_d1": sc.costs.c_d1, "c_d2": sc.costs.c_d2},
        "policy": {"kind": sc.policy.kind.value, "deviation": sc.policy.deviation},
    }
    for key in ("tau", "T", "K"):
        val = getattr(sc.policy, key)
        if val is not None:
            doc["policy"][key] = val
    if sc.mc is not None:
        doc["mc"] = {"cycles": sc.mc.cycles, "seed": sc.mc.seed}
    return yaml.safe_dump(doc, sort_keys=False)
