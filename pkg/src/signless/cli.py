"""Command-line entry point: ``signless <command> ...``.

Every command except ``enumerate`` prints one JSON record::

    {"command": ..., "params": {...}, "result": ..., "version": ..., "timestamp": ...}

``timestamp`` (and ``elapsed`` inside verify results) are the only fields
that differ between identical invocations.  Exit codes: 0 success / no
violations, 1 violations or failed audit checks, 2 usage or input error,
3 eigensolver did not converge.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from datetime import datetime, timezone

from . import __version__
from . import bounds as B
from .enumeration import EnumSpec, iter_cert_chunks, cert_to_graph6
from .graphcore import Graph6Error, from_graph6
from .spectral import ConvergenceError, spectrum
from .verify import audit_proof, check_graph, extremal_slack, verify_bound

VERIFY_CSV_COLUMNS = ["n", "bound_kind", "connected_only", "m_min", "m_max", "count",
                      "min_slack", "argmin_graph6", "violations", "tol", "elapsed"]
BOUNDS_CSV_COLUMNS = ["graph6", "n", "m", "r", "k", "qn", "q1", "conj_bound", "thm_bound",
                      "conj_slack", "thm_slack", "merris_upper", "lemma23_lower",
                      "lemma24_applicable", "lemma24_lower"]
AUDIT_CSV_COLUMNS = ["graph6", "n", "m", "r", "k", "check_id", "lhs", "rhs", "passed"]


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"6"`` -> [6]; ``"6..9"`` -> [6, 7, 8, 9]."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _record(command: str, params: dict, result) -> dict:
    return {
        "command": command,
        "params": params,
        "result": result,
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }


def _emit_json(obj, out) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


def _graph_inputs(arg: str, stdin) -> list[tuple[str, object]]:
    lines = stdin.read().splitlines() if arg == "-" else [arg]
    return [(line.strip(), from_graph6(line)) for line in lines if line.strip()]


def cmd_spectrum(args, out, stdin) -> int:
    results = []
    for g6, g in _graph_inputs(args.graph6, stdin):
        d = spectrum(g).to_dict(vectors=args.vectors)
        results.append({"graph6": g6, **d})
    result = results if args.graph6 == "-" else results[0]
    _emit_json(_record("spectrum", {"graph6": args.graph6, "vectors": args.vectors}, result), out)
    return 0


def cmd_bounds(args, out, stdin) -> int:
    reports = []
    for g6, g in _graph_inputs(args.graph6, stdin):
        if g.n < 3:
            raise UsageError(f"{g6}: bound report needs n >= 3")
        reports.append({"graph6": g6, **check_graph(g).to_dict()})
    if args.out == "csv":
        w = csv.DictWriter(out, BOUNDS_CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        w.writerows(reports)
        return 0
    result = reports if args.graph6 == "-" else reports[0]
    _emit_json(_record("bounds", {"graph6": args.graph6}, result), out)
    return 0


def cmd_verify(args, out, stdin) -> int:
    min_n = 3 if args.bound == "theorem" else 2
    runs = []
    for n in args.n:
        if not min_n <= n <= 10:
            raise UsageError(f"--bound {args.bound} needs {min_n} <= n <= 10, got {n}")
        spec = EnumSpec(n, args.connected, args.m_min, args.m_max)
        runs.append(verify_bound(spec, args.bound, args.tol, args.jobs))
    if args.out == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(VERIFY_CSV_COLUMNS)
        for r in runs:
            w.writerow([r.spec.n, r.bound_kind, r.spec.connected_only, r.spec.m_min, r.spec.m_max,
                        r.count, repr(r.min_slack), r.argmin_graph6, len(r.violations),
                        r.tol, f"{r.elapsed:.3f}"])
    else:
        params = {"bound": args.bound, "n": args.n, "connected": args.connected,
                  "tol": args.tol, "m_min": args.m_min, "m_max": args.m_max, "jobs": args.jobs}
        _emit_json(_record("verify", params, [r.to_dict() for r in runs]), out)
    return 0 if all(r.ok for r in runs) else 1


def cmd_audit(args, out, stdin) -> int:
    if not 6 <= args.n <= 9:
        raise UsageError("audit supports 6 <= n <= 9")
    audits = audit_proof(args.n, args.tol)
    ok = all(a.passed for a in audits)
    if args.out == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(AUDIT_CSV_COLUMNS)
        for a in audits:
            for c in a.checks:
                w.writerow([a.graph6, a.n, a.m, a.r, a.k, c.check_id, repr(c.lhs), repr(c.rhs), c.passed])
    else:
        result = {"n": args.n, "classes": len(audits), "all_passed": ok,
                  "audits": [a.to_dict() for a in audits]}
        _emit_json(_record("audit", {"n": args.n, "tol": args.tol}, result), out)
    return 0 if ok else 1


def cmd_enumerate(args, out, stdin) -> int:
    spec = EnumSpec(args.n, args.connected, args.m_min, args.m_max)
    count = 0
    for certs in iter_cert_chunks(spec, args.jobs):
        count += len(certs)
        if not args.count_only:
            for c in certs:
                out.write(cert_to_graph6(int(c), spec.n) + "\n")
    if args.count_only:
        out.write(f"{count}\n")
    return 0


def cmd_extremal(args, out, stdin) -> int:
    slack, witness = extremal_slack(args.n, args.m, args.bound)
    result = {"n": args.n, "m": args.m, "bound_kind": args.bound,
              "min_slack": slack, "witness_graph6": witness}
    _emit_json(_record("extremal", {"n": args.n, "m": args.m, "bound": args.bound}, result), out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="signless", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spectrum", help="signless Laplacian spectrum of a graph6 graph")
    s.add_argument("graph6", help="graph6 string, or - for one per line on stdin")
    s.add_argument("--vectors", action="store_true")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("bounds", help="every bound evaluated on one graph")
    s.add_argument("graph6")
    s.add_argument("--out", choices=["json", "csv"], default="json")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("verify", help="exhaustive bound check over isomorphism classes")
    s.add_argument("--bound", choices=["theorem", "conjecture"], default="theorem")
    s.add_argument("--n", type=parse_range, required=True, help="N or A..B")
    s.add_argument("--connected", action="store_true")
    s.add_argument("--tol", type=float, default=B.TOL)
    s.add_argument("--m-min", type=int)
    s.add_argument("--m-max", type=int)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out", choices=["json", "csv"], default="json")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("audit", help="numeric audit of the proof inequalities")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--tol", type=float, default=B.TOL)
    s.add_argument("--out", choices=["json", "csv"], default="json")
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("enumerate", help="graph6 stream of isomorphism classes")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--connected", action="store_true")
    s.add_argument("--m-min", type=int)
    s.add_argument("--m-max", type=int)
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("extremal", help="least slack among connected classes with m edges")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--bound", choices=["theorem", "conjecture"], default="theorem")
    s.set_defaults(func=cmd_extremal)
    return p


def main(argv=None, out=None, stdin=None) -> int:
    out = sys.stdout if out is None else out
    stdin = sys.stdin if stdin is None else stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out, stdin)
    except (UsageError, Graph6Error, ValueError) as e:
        print(f"signless {args.command}: error: {e}", file=sys.stderr)
        return 2
    except ConvergenceError as e:
        print(f"signless {args.command}: {e}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        # downstream closed early (``| head``); keep the interpreter quiet on exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
