"""Command-line front end.

Subcommands mirror the library: maximals, gaps, pure-gaps, member, dim,
sigma, superset and verify.  Curve parameters come either from --a/--b
or from a preset (--preset norm-trace --ell L --r R, or --preset
hermitian --q Q).  Output formats json, csv and text carry the same
information inside a versioned envelope; payloads are sorted so that
identical inputs print identical payload bytes (the timing field in the
envelope is the only varying part).

Exit codes: 0 success, 1 domain error (message on standard error),
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from . import __version__
from . import gapsets as gs
from . import maximals as mx
from . import oracle
from . import verify
from .core import (
    Box,
    CurveParams,
    WsgapError,
    check_tuple,
    curve_params,
    hermitian_params,
    norm_trace_params,
)

SCHEMA = "wsgap/1"
BOX_CELL_LIMIT = 10**8

ENVELOPE_SCHEMA = {
    "type": "object",
    "required": ["schema", "tool_version", "command", "params", "payload", "timing_ms"],
    "properties": {
        "schema": {"const": SCHEMA},
        "tool_version": {"type": "string"},
        "command": {"type": "string"},
        "params": {
            "type": "object",
            "required": ["a", "b", "m", "genus"],
            "properties": {
                "a": {"type": ["integer", "null"]},
                "b": {"type": ["integer", "null"]},
                "m": {"type": ["integer", "null"]},
                "genus": {"type": ["integer", "null"]},
                "field_size": {"type": ["integer", "null"]},
            },
        },
        "payload": {"type": "object"},
        "timing_ms": {"type": "number"},
    },
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wsgap",
        description="Weierstrass gaps and pure gaps at several points on "
                    "curves f(y) = g(x) with coprime degrees",
    )
    parser.add_argument("--version", action="version", version=f"wsgap {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    grp = common.add_argument_group("curve parameters")
    grp.add_argument("--preset", choices=["norm-trace", "hermitian"],
                     help="derive a and b from a named curve family")
    grp.add_argument("--ell", type=int, help="prime power for --preset norm-trace")
    grp.add_argument("--r", type=int, help="extension degree for --preset norm-trace")
    grp.add_argument("--q", type=int, help="prime power for --preset hermitian")
    grp.add_argument("--a", type=int, help="degree of f (generic curve)")
    grp.add_argument("--b", type=int, help="degree of g (generic curve)")
    grp.add_argument("--m", type=int, default=2, help="number of points (default 2)")
    grp.add_argument("--field-size", type=int, default=None,
                     help="optional field size metadata for generic curves")
    out = common.add_argument_group("output")
    out.add_argument("--format", choices=["json", "csv", "text"], default="text")
    out.add_argument("--threads", type=int, default=None,
                     help="worker cap for sweeps (default WSGAP_THREADS or 1)")
    out.add_argument("--force", action="store_true",
                     help="allow sweeps above the cell-count guard")

    p = sub.add_parser("maximals", parents=[common],
                       help="absolute or relative maximal elements")
    p.add_argument("--kind", choices=["absolute", "relative"], required=True)
    p.add_argument("--scope", choices=["region", "nonneg", "positive", "box"],
                   default="region")
    p.add_argument("--box-positive", action="store_true",
                   help="shorthand for --scope positive")
    p.add_argument("--lo", type=str, help="box lower corner, e.g. 0,0,0")
    p.add_argument("--hi", type=str, help="box upper corner, e.g. 11,11,11")
    p.add_argument("--include-zero-family", action="store_true",
                   help="add the zero-coordinate translate family in nonneg scope")

    p = sub.add_parser("gaps", parents=[common], help="the Weierstrass gap set")
    p.add_argument("--method", choices=["complement", "union-nabla", "explicit-s"],
                   default="complement")

    p = sub.add_parser("pure-gaps", parents=[common], help="the pure gap set")
    p.add_argument("--method", choices=["profile", "intersection"], default="profile")

    p = sub.add_parser("member", parents=[common], help="semigroup membership")
    p.add_argument("--tuple", required=True, help="comma-separated coordinates")

    p = sub.add_parser("dim", parents=[common],
                       help="dimension of the space attached to a tuple")
    p.add_argument("--tuple", required=True, help="comma-separated coordinates")

    sub.add_parser("sigma", parents=[common],
                   help="two-point gap pairing, its permutation and inversions")

    sub.add_parser("superset", parents=[common],
                   help="the candidate index sets containing all pure gaps")

    p = sub.add_parser("verify", parents=[common],
                       help="fixture replay and property sweeps")
    p.add_argument("--what", choices=["fixtures", "sweep", "all"], default="all")
    p.add_argument("--max-a", type=int, default=5)
    p.add_argument("--max-b", type=int, default=9)
    p.add_argument("--max-m", type=int, default=4)
    p.add_argument("--trials", type=int, default=200,
                   help="random trials per parameter cell in the oracle battery")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)

    return parser


def _resolve_params(args: argparse.Namespace) -> CurveParams:
    if args.preset == "norm-trace":
        if args.ell is None or args.r is None:
            raise WsgapError("--preset norm-trace needs --ell and --r")
        return norm_trace_params(args.ell, args.r, args.m)
    if args.preset == "hermitian":
        if args.q is None:
            raise WsgapError("--preset hermitian needs --q")
        return hermitian_params(args.q, args.m)
    if args.a is None or args.b is None:
        raise WsgapError("give --a and --b, or choose a --preset")
    return curve_params(args.a, args.b, args.m, field_size=args.field_size)


def _parse_tuple(params: CurveParams, text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise WsgapError(f"could not parse tuple {text!r}") from exc
    return check_tuple(params, values)


def _resolve_threads(args: argparse.Namespace) -> int:
    value = args.threads
    if value is None:
        value = int(os.environ.get("WSGAP_THREADS", "1"))
    if value < 1:
        raise WsgapError("--threads must be at least 1")
    return value


def _guard_cells(cells: int, force: bool) -> None:
    if cells > BOX_CELL_LIMIT and not force:
        raise WsgapError(
            f"sweep of {cells} cells exceeds the {BOX_CELL_LIMIT} guard; "
            f"pass --force to run it anyway"
        )


def _guard_params(params: CurveParams, force: bool) -> None:
    _guard_cells((2 * params.genus) ** params.m, force)


# ---------------------------------------------------------------------------
# payload builders

def _tuples_payload(key: str, tuples) -> dict:
    return {key: [list(t) for t in tuples], "count": len(tuples)}


def _run_maximals(params: CurveParams, args: argparse.Namespace) -> dict:
    ms = (mx.absolute_maximals_region(params) if args.kind == "absolute"
          else mx.relative_maximals_region(params))
    scope = "positive" if args.box_positive else args.scope
    if scope == "region":
        tuples = ms.region_reps
    elif scope == "nonneg":
        if args.kind == "relative" and not args.include_zero_family:
            tuples = mx.lambda_nonneg(params)
        elif args.kind == "relative":
            tuples = mx.lambda_nonneg(params, include_zero_family=True)
        else:
            tuples = mx.expand_nonneg(ms)
    elif scope == "positive":
        tuples = mx.expand_positive(ms)
    else:
        if args.lo is None or args.hi is None:
            raise WsgapError("--scope box needs --lo and --hi")
        box = Box(lo=_parse_tuple(params, args.lo), hi=_parse_tuple(params, args.hi))
        _guard_cells(box.cell_count(), args.force)
        tuples = mx.expand_in_box(ms, box)
    payload = _tuples_payload("tuples", tuples)
    payload.update({"kind": args.kind, "scope": scope})
    return payload


def _run_gaps(params: CurveParams, args: argparse.Namespace) -> dict:
    _guard_params(params, args.force)
    report = gs.gaps(params, method=args.method.replace("-", "_"))
    payload = _tuples_payload("gaps", report.gaps)
    payload.update({"method": report.method, "stats": report.stats})
    return payload


def _run_pure_gaps(params: CurveParams, args: argparse.Namespace) -> dict:
    _guard_params(params, args.force)
    report = gs.pure_gaps(params, method=args.method)
    payload = _tuples_payload("pure_gaps", report.pure_gaps)
    payload.update({"method": report.method, "stats": report.stats})
    return payload


def _run_member(params: CurveParams, args: argparse.Namespace) -> dict:
    t = _parse_tuple(params, args.tuple)
    return {"tuple": list(t), "member": oracle.is_member(params, t)}


def _run_dim(params: CurveParams, args: argparse.Namespace) -> dict:
    t = _parse_tuple(params, args.tuple)
    return {"tuple": list(t), "dim": oracle.dim_L(params, t)}


def _run_sigma(params: CurveParams, args: argparse.Namespace) -> dict:
    table = gs.sigma_pair(params)
    return {
        "gaps_q1": list(table.gaps_q1),
        "gaps_q2": list(table.gaps_q2),
        "sigma": list(table.sigma),
        "gamma_pairs": [list(t) for t in table.gamma_pairs],
        "inversions": [list(t) for t in table.inversions],
        "genus": params.genus,
        "pure_gap_count": len(table.inversions),
    }


def _run_superset(params: CurveParams, args: argparse.Namespace) -> dict:
    a_star, a_set = gs.candidate_superset(params)
    return {"a_star": list(a_star), "a": list(a_set)}


def _run_verify(args: argparse.Namespace) -> dict:
    workers = _resolve_threads(args)
    report = verify.ConformanceReport()
    if args.what in ("fixtures", "all"):
        report.extend(verify.run_fixtures())
    if args.what in ("sweep", "all"):
        report.extend(verify.run_property_sweep(args.max_a, args.max_b, args.max_m,
                                                workers=workers))
        report.extend(verify.run_oracle_invariants(args.max_a, args.max_b, args.max_m,
                                                   trials=args.trials, seed=args.seed))
    payload = report.sorted().to_payload()
    payload["what"] = args.what
    payload["bounds"] = {"max_a": args.max_a, "max_b": args.max_b, "max_m": args.max_m}
    return payload


# ---------------------------------------------------------------------------
# output formatting

def _params_echo(params: CurveParams) -> dict:
    return {"a": params.a, "b": params.b, "m": params.m,
            "genus": params.genus, "field_size": params.field_size}


def _emit_json(envelope: dict) -> str:
    return json.dumps(envelope, sort_keys=True, indent=2) + "\n"


_TUPLE_KEYS = ("tuples", "gaps", "pure_gaps", "gamma_pairs", "inversions")
_LIST_KEYS = ("gaps_q1", "gaps_q2", "sigma", "a_star", "a")


def _scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, (int, float, str)):
        return str(value)
    return json.dumps(value, sort_keys=True)


def _emit_text(envelope: dict) -> str:
    lines = [f"# {envelope['schema']} tool_version={envelope['tool_version']}"]
    p = envelope["params"]
    lines.append("# command: " + envelope["command"])
    lines.append(f"# params: a={p['a']} b={p['b']} m={p['m']} genus={p['genus']}"
                 f" field_size={p['field_size']}")
    payload = envelope["payload"]
    for key, value in sorted(payload.items()):
        if key in _TUPLE_KEYS:
            lines.append(f"{key} ({len(value)}):")
            lines.extend("(" + ", ".join(str(c) for c in t) + ")" for t in value)
        elif key in _LIST_KEYS:
            lines.append(f"{key}: " + " ".join(str(v) for v in value))
        elif key == "checks":
            for chk in value:
                status = "PASS" if chk["passed"] else "FAIL"
                detail = f" {chk['detail']}" if chk["detail"] else ""
                lines.append(f"{status} {chk['name']}{detail}")
        else:
            lines.append(f"{key}: {_scalar(value)}")
    lines.append(f"# timing_ms: {envelope['timing_ms']}")
    return "\n".join(lines) + "\n"


def _semi(t) -> str:
    return ";".join(str(c) for c in t)


def _emit_csv(envelope: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["kind", "name", "tuple", "value"])
    writer.writerow(["meta", "schema", "", envelope["schema"]])
    writer.writerow(["meta", "tool_version", "", envelope["tool_version"]])
    writer.writerow(["meta", "command", "", envelope["command"]])
    for key in ("a", "b", "m", "genus", "field_size"):
        value = envelope["params"][key]
        writer.writerow(["meta", key, "", "" if value is None else value])
    payload = envelope["payload"]
    for key, value in sorted(payload.items()):
        if key in _TUPLE_KEYS:
            for t in value:
                writer.writerow([key, "", _semi(t), ""])
        elif key in _LIST_KEYS:
            for idx, v in enumerate(value, start=1):
                writer.writerow([key, idx, "", v])
        elif key == "checks":
            for chk in value:
                writer.writerow(["check", chk["name"], "",
                                 "pass" if chk["passed"] else "fail"])
                if chk["detail"]:
                    writer.writerow(["check-detail", chk["name"], "", chk["detail"]])
        else:
            writer.writerow([key, "", "", _scalar(value)])
    writer.writerow(["meta", "timing_ms", "", envelope["timing_ms"]])
    return buf.getvalue()


_EMITTERS = {"json": _emit_json, "text": _emit_text, "csv": _emit_csv}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        if args.command == "verify":
            params = None
            payload = _run_verify(args)
        else:
            params = _resolve_params(args)
            _resolve_threads(args)  # validated even when unused by the command
            runner = {
                "maximals": _run_maximals,
                "gaps": _run_gaps,
                "pure-gaps": _run_pure_gaps,
                "member": _run_member,
                "dim": _run_dim,
                "sigma": _run_sigma,
                "superset": _run_superset,
            }[args.command]
            payload = runner(params, args)
    except WsgapError as exc:
        print(f"wsgap: error: {exc}", file=sys.stderr)
        return 1
    envelope = {
        "schema": SCHEMA,
        "tool_version": __version__,
        "command": args.command,
        "params": _params_echo(params) if params is not None else
                  {"a": None, "b": None, "m": None, "genus": None, "field_size": None},
        "payload": payload,
        "timing_ms": round((time.perf_counter() - t0) * 1000, 3),
    }
    sys.stdout.write(_EMITTERS[args.format](envelope))
    if args.command == "verify" and not payload["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
