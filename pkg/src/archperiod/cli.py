"""Command line interface: archperiod <command> [options].

Scenario records are read with --file (a JSON list, or a single object) or built from
--field/--mu/--nu/--chi.  Output is JSON with sorted keys unless --format table.
Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

import jsonschema

from .characters import COMPLEX, REAL
from .exact import MonomialConstant
from .gamma import MeromorphicScalar
from .geometry import VARIANTS, determinant, open_orbit_check, z_matrix
from .periods import c_eps_constants, omega_main, verify_period_identity
from .rankin import (
    MINUS,
    PLUS,
    PM,
    Scenario,
    ScenarioError,
    balanced_box,
    bc_relations_check,
    case_of,
    crit_closed,
    crit_pole,
    is_balanced,
    rs_lfactor,
)
from .repdata import Weight

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

_ROW = {"type": "array", "items": {"type": "integer"}}
SCENARIO_SCHEMA = {
    "type": "object",
    "required": ["field", "mu", "nu", "chi"],
    "properties": {
        "field": {"enum": [REAL, COMPLEX]},
        "n": {"type": "integer", "minimum": 1},
        "nprime": {"type": "integer", "minimum": 0},
        "mu": {"type": "array", "items": _ROW, "minItems": 1, "maxItems": 2},
        "nu": {"type": "array", "items": _ROW, "minItems": 1, "maxItems": 2},
        "chi": {"type": "array", "items": {"type": "integer"}, "minItems": 1, "maxItems": 2},
        "eps_mu": {"enum": [0, 1]},
        "eps_nu": {"enum": [0, 1]},
        "chi_delta": {"enum": [0, 1]},
        "psi": {"enum": ["+1", "-1", "formal"]},
    },
}


class InputError(Exception):
    pass


# ---------------------------------------------------------------- input


def load_records(path: str) -> List[dict]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise InputError(f"{path}: expected a list of scenario records")
    return data


def parse_record(rec, index: int) -> Scenario:
    where = f"record {index}"
    try:
        jsonschema.validate(rec, SCENARIO_SCHEMA)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "(root)"
        raise InputError(f"{where}, field {path}: {exc.message}") from exc
    E = 1 if rec["field"] == REAL else 2
    for key in ("mu", "nu", "chi"):
        if len(rec[key]) != E:
            raise InputError(f"{where}, field {key}: expected {E} entries for field {rec['field']}")
    try:
        return Scenario.from_json(rec)
    except (ScenarioError, ValueError) as exc:
        raise InputError(f"{where}: {exc}") from exc


def _rows(text: str) -> list:
    """'1,0;0,-1' -> [[1, 0], [0, -1]]."""
    try:
        return [[int(x) for x in part.split(",") if x.strip()] for part in text.split(";")]
    except ValueError as exc:
        raise InputError(f"cannot parse weight {text!r}") from exc


def scenario_records(args) -> List[tuple]:
    """(scenario, psi) pairs; a record's own psi overrides --psi."""
    if getattr(args, "file", None):
        recs = load_records(args.file)
        return [(parse_record(r, i), _psi_value(r.get("psi", args.psi))) for i, r in enumerate(recs)]
    return [(sc, _psi_value(args.psi)) for sc in scenarios_from_args(args)]


def scenarios_from_args(args) -> List[Scenario]:
    if getattr(args, "file", None):
        return [parse_record(r, i) for i, r in enumerate(load_records(args.file))]
    if args.field is None or args.mu is None or args.nu is None:
        raise InputError("give --file or all of --field, --mu, --nu")
    chi = [int(x) for x in (args.chi or ",".join(["0"] * (1 if args.field == REAL else 2))).split(",")]
    rec = {
        "field": args.field,
        "mu": _rows(args.mu),
        "nu": _rows(args.nu),
        "chi": chi,
        "eps_mu": args.eps_mu,
        "eps_nu": args.eps_nu,
        "chi_delta": args.chi_delta,
    }
    return [parse_record(rec, 0)]


# ---------------------------------------------------------------- rendering


def _psi_value(psi: str) -> Optional[int]:
    return None if psi == "formal" else int(psi)


def render_value(x, psi: Optional[int] = None):
    """JSON-ready rendering of exact values; monomials carry both a string and fields."""
    if isinstance(x, MonomialConstant):
        if psi is not None:
            x = x.at_psi(psi)
        return {"value": str(x), **x.to_json()}
    if isinstance(x, MeromorphicScalar):
        c = x.const.at_psi(psi) if psi is not None else x.const
        y = MeromorphicScalar(c, x.atoms, x.rational)
        return {"value": str(y), **y.to_json()}
    if isinstance(x, dict):
        return {k: render_value(v, psi) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [render_value(v, psi) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return x


def _cell(v) -> str:
    if isinstance(v, dict) and "value" in v:
        return str(v["value"])
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, ensure_ascii=False)
    return "" if v is None else str(v)


def render_table(rows: List[dict]) -> str:
    if not rows:
        return "OK (0 rows)"
    cols: List[str] = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    cells = [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    line = lambda vals: "  ".join(v.ljust(w) for v, w in zip(vals, widths)).rstrip()
    out = [line(cols), line(["-" * w for w in widths])]
    out += [line(row) for row in cells]
    return "\n".join(out)


def render_report(report, fmt: str = "json") -> str:
    """Deterministic text for a report: a dict with optional 'rows' list, or a list of rows."""
    if fmt == "table":
        if isinstance(report, dict) and "rows" in report:
            head = [f"{k}: {_cell(v)}" for k, v in report.items() if k != "rows"]
            body = render_table(report["rows"])
            return "\n".join(head + ([body] if report["rows"] else []))
        if isinstance(report, dict) and "counterexamples" in report and not report["counterexamples"]:
            return "OK (0 counterexamples)"
        if isinstance(report, list):
            return render_table(report)
        return render_table([report])
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)


# ---------------------------------------------------------------- commands


def cmd_lfactor(args) -> tuple:
    rows = []
    for sc, psi in scenario_records(args):
        rows.append({"scenario": sc.to_json(), "lfactor": render_value(rs_lfactor(sc), psi)})
    return EXIT_OK, {"rows": rows}


def cmd_balanced(args) -> tuple:
    if args.field is None or args.mu is None or args.nu is None:
        raise InputError("balanced needs --field, --mu and --nu")
    try:
        mu = Weight(args.field, tuple(tuple(r) for r in _rows(args.mu)))
        nu = Weight(args.field, tuple(tuple(r) for r in _rows(args.nu)))
        case = None if args.case in (None, "nm1") else args.case
        if nu.k == mu.k and case is None:
            raise InputError("--case is required when n' = n")
        box = balanced_box(args.field, mu, nu, case)
    except (ScenarioError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    empty = any(lo is not None and hi is not None and lo > hi for lo, hi in box)
    return EXIT_OK, {
        "field": args.field,
        "case": args.case or "nm1",
        "box": [[lo, hi] for lo, hi in box],
        "empty": empty,
    }


def cmd_crit(args) -> tuple:
    rows, bad = [], 0
    for sc in scenarios_from_args(args):
        a, b = crit_pole(sc), crit_closed(sc)
        bad += a != b
        rows.append({"scenario": sc.to_json(), "critical": a, "closed_form": b, "agree": a == b})
    return (EXIT_FAIL if bad else EXIT_OK), {"rows": rows}


def cmd_bc_check(args) -> tuple:
    rows, bad = [], 0
    for sc in scenarios_from_args(args):
        m = max([abs(x) for r in sc.mu.weight.rows + sc.nu.weight.rows for x in r] + [0])
        M = m + sc.n + args.window_margin
        rep = bc_relations_check(sc, -M, M)
        case = None
        if rep["balanced"] and sc.nprime == sc.n:
            case = case_of(sc.with_chi(rep["balanced"][0]).oriented())
        bad += not rep["ok"]
        rows.append(
            {
                "scenario": sc.to_json(),
                "case": case,
                "window": [-M, M],
                "box": [c.to_json() for c in rep["balanced"]],
                "counterexamples": [[why, c.to_json()] for why, c in rep["violations"]],
                "diagonal_equal": rep["diagonal_equal"],
                "ok": rep["ok"],
            }
        )
    return (EXIT_FAIL if bad else EXIT_OK), {"rows": rows}


def cmd_omega(args) -> tuple:
    rows = []
    for sc, psi in scenario_records(args):
        try:
            om = omega_main(sc)
            consts = c_eps_constants(sc)
        except (ScenarioError, ArithmeticError) as exc:
            raise InputError(f"{sc}: {exc}") from exc
        rows.append({"scenario": sc.to_json(), "omega": render_value(om, psi), **render_value(consts, psi)})
    if len(rows) == 1:
        return EXIT_OK, rows[0]
    return EXIT_OK, {"rows": rows}


def _verify_one(sc: Scenario) -> dict:
    return verify_period_identity(sc).to_json()


def _report_ok(r: dict) -> bool:
    if r["error"] is not None or not all(r["checks"].values()):
        return False
    return r["match"] or r["omega_prime_inverse"] is None


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get("ARCH_PERIOD_THREADS", "1")))
    except ValueError:
        return 1


def _map(fn, items: list) -> list:
    workers = _thread_count()
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=32))


def cmd_verify(args) -> tuple:
    from .sweep import period_buckets

    if args.exhaustive:
        buckets = period_buckets(args.n_max, args.entry_max, args.complex_limit, args.seed)
        summary, failures = [], []
        for b in buckets:
            reps = _map(_verify_one, b.scenarios)
            bad = [r for r in reps if not _report_ok(r)]
            summary.append(
                {
                    "bucket": b.label(),
                    "scenarios": len(reps),
                    "failures": len(bad),
                    "status": "PASS" if not bad else "FAIL",
                }
            )
            failures += bad[: args.show_failures]
        status = "PASS" if all(s["failures"] == 0 for s in summary) else "FAIL"
        out = {"status": status, "rows": summary}
        if failures:
            out["first_failures"] = failures
        return (EXIT_OK if status == "PASS" else EXIT_FAIL), out
    reps = _map(_verify_one, scenarios_from_args(args))
    bad = sum(not _report_ok(r) for r in reps)
    if len(reps) == 1:
        return (EXIT_FAIL if bad else EXIT_OK), reps[0]
    return (EXIT_FAIL if bad else EXIT_OK), {"rows": reps}


def cmd_zmatrix(args) -> tuple:
    if args.k < 0:
        raise InputError("k must be nonnegative")
    z = z_matrix(args.k)
    return EXIT_OK, {"k": args.k, "matrix": [list(r) for r in z], "det": determinant(z)}


def cmd_orbit_check(args) -> tuple:
    rows = []
    variants = VARIANTS if args.variant == "all" else (args.variant,)
    for n in range(1, args.n_max + 1):
        for v in variants:
            rows.append(open_orbit_check(n, v).to_json())
    ok = all(r["open"] for r in rows)
    return (EXIT_OK if ok else EXIT_FAIL), {"all_open": ok, "rows": rows}


def cmd_selftest(args) -> tuple:
    from .selftest import run_selftest

    rows = run_selftest()
    ok = all(r["ok"] for r in rows)
    return (EXIT_OK if ok else EXIT_FAIL), {"status": "PASS" if ok else "FAIL", "rows": rows}


COMMANDS = {
    "lfactor": cmd_lfactor,
    "balanced": cmd_balanced,
    "crit": cmd_crit,
    "bc-check": cmd_bc_check,
    "omega": cmd_omega,
    "verify": cmd_verify,
    "zmatrix": cmd_zmatrix,
    "orbit-check": cmd_orbit_check,
    "selftest": cmd_selftest,
}


def _scenario_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--file", help="JSON file with scenario records")
    p.add_argument("--field", choices=[REAL, COMPLEX])
    p.add_argument("--mu", help="weight rows, e.g. '1,0;0,-1' (one row per embedding)")
    p.add_argument("--nu")
    p.add_argument("--chi", help="differential of chi, comma separated")
    p.add_argument("--eps-mu", type=int, default=0, choices=[0, 1])
    p.add_argument("--eps-nu", type=int, default=0, choices=[0, 1])
    p.add_argument("--chi-delta", type=int, default=0, choices=[0, 1])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="archperiod", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="json")
    common.add_argument("--psi", choices=["formal", "+1", "-1"], default="formal")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("lfactor", "crit", "omega"):
        _scenario_flags(sub.add_parser(name, parents=[common]))
    p = sub.add_parser("balanced", parents=[common])
    _scenario_flags(p)
    p.add_argument("--n", type=int, help="accepted for clarity; n is read from --mu")
    p.add_argument("--case", choices=[MINUS, PLUS, PM, "nm1"])
    p = sub.add_parser("bc-check", parents=[common])
    _scenario_flags(p)
    p.add_argument("--window-margin", type=int, default=2)
    p = sub.add_parser("verify", parents=[common])
    _scenario_flags(p)
    p.add_argument("--exhaustive", action="store_true", help="sweep all balanced scenarios (see README for the scope)")
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--entry-max", type=int, default=2)
    p.add_argument("--complex-limit", type=int, default=2000, help="sample size per complex bucket beyond which sampling starts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--show-failures", type=int, default=3)
    p = sub.add_parser("zmatrix", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p = sub.add_parser("orbit-check", parents=[common])
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--variant", choices=list(VARIANTS) + ["all"], default="all")
    sub.add_parser("selftest", parents=[common])
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.command == "bc-check" and args.window_margin < 1:
        print("error: --window-margin must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        code, report = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(render_report(report, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
