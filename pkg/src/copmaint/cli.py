"""Command-line interface.

Subcommands: optimize, periodic, table, curve, check, simulate.
Exit codes: 0 success, 1 input/runtime error, 2 strict condition failure,
3 sampler capability error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from . import benchmarks, systems
from .cost_models import (CostParams, PolicyKind, PolicyQuery, age_cost_rate,
                          periodic_cost_rate)
from .errors import CapabilityError, CopmaintError
from .mc_oracle import SimConfig, estimate_cost_rate
from .optimizers import (PolicyResult, ThresholdStatus, check_conditions,
                         optimize_age, optimize_periodic)
from .reference_tables import DEVIATION_SCENARIOS, TABLES
from .scenario import Scenario, ScenarioError, dump_scenario, load_scenario

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_STRICT = 2
EXIT_CAPABILITY = 3


def _condition_lines(report) -> list[str]:
    mono = report.monotonicity
    lines = [
        f"components IFR:      {'all' if all(report.components_ifr) else report.components_ifr}",
        f"copula monotonicity: {mono.verdict.value}"
        + (f" (worst violation {mono.worst_violation:.3g})"
           if mono.grid_resolution else ""),
    ]
    if report.threshold_satisfied is ThresholdStatus.NOT_REQUIRED:
        lines.append("hazard threshold:    not required (deviation model)")
    elif report.threshold_satisfied is ThresholdStatus.TRIVIALLY_INFINITE_HAZARD:
        lines.append("hazard threshold:    trivially satisfied (h(inf) = inf)")
    else:
        lines.append(
            f"hazard threshold:    {report.threshold_satisfied.value} "
            f"(lhs={report.threshold_lhs:.6g}, rhs={report.threshold_rhs:.6g})")
    return lines


def _result_json(result: PolicyResult, kind: str) -> dict:
    rep = result.condition_report
    return {
        "policy": kind,
        "optimum": result.optimum,
        "cost_rate": result.cost_rate,
        "uniqueness_guaranteed": result.uniqueness_guaranteed,
        "conditions": {
            "components_ifr": list(rep.components_ifr),
            "monotonicity": rep.monotonicity.verdict.value,
            "threshold": rep.threshold_satisfied.value,
            "threshold_lhs": None if np.isnan(rep.threshold_lhs) else rep.threshold_lhs,
            "threshold_rhs": None if np.isnan(rep.threshold_rhs) else rep.threshold_rhs,
        },
        "trace": {
            "bracket": list(result.method_trace.bracket),
            "iterations": result.method_trace.iterations,
            "residual": result.method_trace.residual,
            "notes": list(result.method_trace.notes),
        },
    }


def _run_scenario_optimization(sc: Scenario, force_periodic: bool = False) -> tuple[PolicyResult, str]:
    kind = sc.policy.kind
    if force_periodic:
        kind = PolicyKind.PERIODIC
        if sc.policy.tau is None:
            raise ScenarioError("field 'policy.tau': required for periodic policies")
    if kind is PolicyKind.AGE:
        return optimize_age(sc.system, sc.costs, sc.policy.deviation), "age"
    return optimize_periodic(sc.system, sc.costs, sc.policy.tau,
                             sc.policy.deviation), "periodic"


def cmd_optimize(args) -> int:
    sc = load_scenario(args.scenario)
    if args.tau is not None:
        sc = Scenario(sc.system, sc.costs,
                      type(sc.policy)(sc.policy.kind, sc.policy.deviation,
                                      args.tau, sc.policy.T, sc.policy.K),
                      sc.mc)
    if args.dump_config:
        print(dump_scenario(sc), end="")
        return EXIT_OK
    result, kind = _run_scenario_optimization(sc, force_periodic=args.force_periodic)
    if args.json:
        print(json.dumps(_result_json(result, kind)))
    else:
        label = "T*" if kind == "age" else "K*"
        print(f"optimal {label}: {result.optimum:.6g}")
        if kind == "periodic":
            print(f"replacement time K*tau: {result.optimum * sc.policy.tau:.6g}")
        print(f"minimal expected cost rate: {result.cost_rate:.6f}")
        for line in _condition_lines(result.condition_report):
            print(line)
        for note in result.method_trace.notes:
            print(f"note: {note}")
    if args.strict and not result.uniqueness_guaranteed:
        print("strict mode: uniqueness conditions not satisfied", file=sys.stderr)
        return EXIT_STRICT
    return EXIT_OK


def cmd_check(args) -> int:
    sc = load_scenario(args.scenario)
    report = check_conditions(sc.system, sc.costs, sc.policy.deviation)
    for line in _condition_lines(report):
        print(line)
    print(f"overall: {'PASS' if report.satisfied else 'FAIL'}")
    if args.strict and not report.satisfied:
        return EXIT_STRICT
    return EXIT_OK


def cmd_table(args) -> int:
    spec = TABLES[args.table_id]
    sweep = spec.sweep
    header = [sweep]
    opt_name = "T_star" if spec.policy == "age" else "K_star"
    for c_d1, c_d2 in DEVIATION_SCENARIOS:
        tag = f"cd{c_d1:g}_{c_d2:g}"
        header += [f"{opt_name}[{tag}]", f"cost[{tag}]"]
        if args.compare:
            header += [f"published_{opt_name}[{tag}]", f"published_cost[{tag}]",
                       f"abs_diff_{opt_name}[{tag}]", f"abs_diff_cost[{tag}]"]
    rows_out = []
    for sweep_value in spec.sweep_values:
        row = [sweep_value]
        for j in range(len(DEVIATION_SCENARIOS)):
            result = benchmarks.compute_cell(spec, sweep_value, j)
            row += [result.optimum, round(result.cost_rate, 6)]
            if args.compare:
                pub_opt, pub_cost = spec.rows[sweep_value][j]
                row += [pub_opt, pub_cost,
                        "" if pub_opt is None else abs(result.optimum - pub_opt),
                        "" if pub_cost is None else abs(result.cost_rate - pub_cost)]
        rows_out.append(row)
    with open(args.output, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows_out)
    print(f"wrote table {args.table_id} ({len(rows_out)} rows) to {args.output}")
    return EXIT_OK


def cmd_curve(args) -> int:
    sc = load_scenario(args.scenario)
    thetas = args.theta if args.theta else [sc.system.copula.theta]
    if args.steps < 1:
        raise ScenarioError("curve requires at least one step")
    if args.steps == 1:
        values = np.array([args.sweep_from])
    else:
        if args.sweep_to <= args.sweep_from:
            raise ScenarioError("degenerate sweep range: 'to' must exceed 'from'")
        values = np.linspace(args.sweep_from, args.sweep_to, args.steps)

    from dataclasses import replace as dc_replace
    header = ["theta", args.var, "cost_rate"]
    rows = []
    for theta in thetas:
        copula = dc_replace(sc.system.copula, theta=float(theta))
        system = dc_replace(sc.system, copula=copula)
        for v in values:
            if args.var == "T":
                cost = age_cost_rate(system, sc.costs, float(v), sc.policy.deviation)
            else:
                tau = sc.policy.tau
                if tau is None:
                    raise ScenarioError("field 'policy.tau': required for K sweeps")
                cost = periodic_cost_rate(system, sc.costs, int(v), tau,
                                          sc.policy.deviation)
            rows.append([theta, float(v) if args.var == "T" else int(v), cost])
    with open(args.output, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    print(f"wrote {len(rows)} curve points to {args.output}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    sc = load_scenario(args.scenario)
    if sc.mc is None and (args.cycles is None or args.seed is None):
        raise ScenarioError("field 'mc': required for simulate "
                            "(or pass --cycles and --seed)")
    cycles = args.cycles if args.cycles is not None else sc.mc.cycles
    seed = args.seed if args.seed is not None else sc.mc.seed

    if sc.policy.kind is PolicyKind.AGE and sc.policy.T is not None:
        t_policy = sc.policy.T
        query = PolicyQuery(PolicyKind.AGE, sc.policy.deviation, T=t_policy)
        analytic = age_cost_rate(sc.system, sc.costs, t_policy, sc.policy.deviation)
    elif sc.policy.kind is PolicyKind.PERIODIC and sc.policy.K is not None:
        query = PolicyQuery(PolicyKind.PERIODIC, sc.policy.deviation,
                            K=sc.policy.K, tau=sc.policy.tau)
        analytic = periodic_cost_rate(sc.system, sc.costs, sc.policy.K,
                                      sc.policy.tau, sc.policy.deviation)
    else:
        # no explicit policy point: simulate at the optimum
        result, kind = _run_scenario_optimization(sc)
        if kind == "age":
            query = PolicyQuery(PolicyKind.AGE, sc.policy.deviation, T=result.optimum)
        else:
            query = PolicyQuery(PolicyKind.PERIODIC, sc.policy.deviation,
                                K=int(result.optimum), tau=sc.policy.tau)
        analytic = result.cost_rate

    est = estimate_cost_rate(sc.system, sc.costs, SimConfig(cycles, seed, query))
    z = (est.cost_rate_mean - analytic) / est.std_error if est.std_error > 0 else float("inf")
    print(f"analytic cost rate:  {analytic:.6f}")
    print(f"simulated cost rate: {est.cost_rate_mean:.6f} +/- {est.std_error:.6f} "
          f"({est.cycles_run} cycles)")
    print(f"z-score: {z:+.3f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="copmaint",
        description="Optimal preventive replacement for series/parallel systems "
                    "with copula-dependent components")
    sub = p.add_subparsers(dest="command", required=True)

    def scenario_cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("scenario", help="path to a YAML scenario file")
        return sp

    sp = scenario_cmd("optimize", "find the optimal replacement policy")
    sp.add_argument("--json", action="store_true", help="machine-readable output")
    sp.add_argument("--strict", action="store_true",
                    help="exit 2 if uniqueness conditions fail")
    sp.add_argument("--dump-config", action="store_true",
                    help="print the parsed scenario as YAML and exit")
    sp.add_argument("--tau", type=float, default=None,
                    help="override the period length")
    sp.set_defaults(func=cmd_optimize, force_periodic=False)

    sp = scenario_cmd("periodic", "optimize with the periodic policy (alias)")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--strict", action="store_true")
    sp.add_argument("--dump-config", action="store_true")
    sp.add_argument("--tau", type=float, default=None)
    sp.set_defaults(func=cmd_optimize, force_periodic=True)

    sp = scenario_cmd("check", "report the existence/uniqueness conditions")
    sp.add_argument("--strict", action="store_true")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("table", help="recompute a benchmark table as CSV")
    sp.add_argument("table_id", type=int, choices=sorted(TABLES))
    sp.add_argument("-o", "--output", required=True)
    sp.add_argument("--compare", action="store_true",
                    help="include published values and absolute differences")
    sp.set_defaults(func=cmd_table)

    sp = scenario_cmd("curve", "emit cost-rate curve data as CSV")
    sp.add_argument("--var", choices=["T", "K"], default="T")
    sp.add_argument("--from", dest="sweep_from", type=float, required=True)
    sp.add_argument("--to", dest="sweep_to", type=float, default=None)
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--theta", type=float, nargs="+", default=None,
                    help="overlay curves for several dependence parameters")
    sp.add_argument("-o", "--output", required=True)
    sp.set_defaults(func=cmd_curve)

    sp = scenario_cmd("simulate", "Monte Carlo check of the analytic cost rate")
    sp.add_argument("--cycles", type=int, default=None)
    sp.add_argument("--seed", type=int, default=None)
    sp.set_defaults(func=cmd_simulate)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ScenarioError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except CapabilityError as e:
        print(f"capability error: {e}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (CopmaintError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
