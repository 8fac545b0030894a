"""Command-line entry point: ``eqgenus genus|equivariant|verify|replay``.

Reports go to stdout as JSON (or CSV), diagnostics to stderr.  Exit codes:
0 success, 1 check failure, 2 malformed input, 3 violated precondition.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import Optional, Sequence

from .errors import InconsistentDataError, PreconditionError, ScenarioError
from .scenario import DEFAULT_Q_ORDER, parse_scenario, read_document, run_equivariant, run_genus
from .suites import DEFAULT_SEED, SUITES, run_checks, suite_checks

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eqgenus", description="Exact genera and circle-action checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "csv"), default="json")

    for name, help_ in (("genus", "non-equivariant genus or q-series"),
                        ("equivariant", "equivariant character of a circle action")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("scenario", help="scenario file path or inline JSON")
        sp.add_argument("--q-order", type=int, default=None,
                        help=f"q-order for series (default {DEFAULT_Q_ORDER})")
        common(sp)
    sp = sub.add_parser("verify", help="run a named verification suite")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED,
                    help=f"seed for randomized checks (default {DEFAULT_SEED})")
    common(sp)
    sp = sub.add_parser("replay", help="re-run a counterexample emitted by verify")
    sp.add_argument("check", help="counterexample file path or inline JSON")
    common(sp)
    return p


def _emit(report: dict, fmt: str, rows=None):
    if fmt == "json":
        json.dump(report, sys.stdout, indent=2, sort_keys=False)
        sys.stdout.write("\n")
        return
    w = csv.writer(sys.stdout, lineterminator="\n")
    for row in rows if rows is not None else _flatten(report["result"]):
        w.writerow(row)


def _flatten(obj, prefix="") -> list[list[str]]:
    if isinstance(obj, dict):
        out = []
        for k, v in obj.items():
            out += _flatten(v, f"{prefix}.{k}" if prefix else str(k))
        return out
    if isinstance(obj, list):
        out = []
        for i, v in enumerate(obj):
            out += _flatten(v, f"{prefix}[{i}]")
        return out
    return [[prefix, "" if obj is None else str(obj)]]


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _dispatch(args)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, InconsistentDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def _dispatch(args) -> int:
    if args.command in ("genus", "equivariant"):
        doc = read_document(args.scenario)
        sc = parse_scenario(doc, args.q_order)
        run = run_genus if args.command == "genus" else run_equivariant
        if args.command == "genus" and (sc.action is not None or sc.eq_class is not None):
            raise ScenarioError("the genus command takes a scenario without an action")
        report = {"command": args.command, "scenario": doc, "q_order": sc.q_order, "result": run(sc)}
        _emit(report, args.format)
        return EXIT_OK
    if args.command == "verify":
        t0 = time.perf_counter()
        outcome = run_checks(suite_checks(args.suite, args.seed))
        report = {"command": "verify", "suite": args.suite, "seed": args.seed,
                  "seconds": round(time.perf_counter() - t0, 3), **outcome}
        rows = [["id", "criterion", "status", "seconds"]] + [
            [c["id"], c.get("criterion", ""), c["status"], c["seconds"]] for c in outcome["checks"]
        ]
        _emit(report, args.format, rows)
        for c in outcome["checks"]:
            if c["status"] != "pass":
                print(f"FAILED {c['id']}: {json.dumps(c['detail'])}", file=sys.stderr)
        return EXIT_OK if outcome["passed"] else EXIT_FAIL
    if args.command == "replay":
        check = read_document(args.check)
        if isinstance(check, dict) and "counterexample" in check:
            check = check["counterexample"]
        if not isinstance(check, dict) or "kind" not in check or "id" not in check:
            raise ScenarioError("a replayable check needs 'id' and 'kind'")
        outcome = run_checks([check])
        report = {"command": "replay", **outcome}
        rows = [["id", "status"]] + [[c["id"], c["status"]] for c in outcome["checks"]]
        _emit(report, args.format, rows)
        return EXIT_OK if outcome["passed"] else EXIT_FAIL
    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
