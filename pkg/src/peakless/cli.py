"""Command-line interface.

Subcommands: count, bounded, dist, enumerate, verify, asympt, export.
Text output is for humans; --format csv and --format json are stable
machine formats whose bytes depend only on the flags.  Exit codes:
0 success, 1 verification failure, 2 usage error, 3 resource-cap error.
"""
import argparse
import json
import sys
import time

from . import asymptotics, counting, paths, verify
from .errors import OracleLimitError, ResourceLimitError

CROSS_CHECK_LIMIT = 200  # count engines are cross-checked up to here


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload):
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def cmd_count(args):
    n = args.order
    values = counting.peakless_recurrence(n)
    check_to = min(n, CROSS_CHECK_LIMIT)
    series = counting.peakless_series(check_to)
    mismatches = [
        (i, series[i], values[i]) for i in range(check_to + 1) if series[i] != values[i]
    ]
    if mismatches:
        i, a, b = mismatches[0]
        sys.stderr.write(
            f"engine disagreement at n={i}: functional equation {a}, recurrence {b} "
            f"({len(mismatches)} mismatching terms)\n"
        )
        return 1
    if args.format == "csv":
        lines = ["n,count"] + [f"{i},{v}" for i, v in enumerate(values)]
        _emit("\n".join(lines) + "\n", args.out)
    elif args.format == "json":
        _emit(_json_text({"n_max": n, "counts": values}), args.out)
    else:
        _emit(" ".join(str(v) for v in values) + "\n", args.out)
    return 0


def cmd_bounded(args):
    n, bound = args.order, args.bound
    cf = counting.bounded_series_cf(bound, n)
    if bound >= 1:
        det = counting.bounded_series_det(bound, n)
        if det != cf:
            bad = next(i for i in range(n + 1) if det[i] != cf[i])
            sys.stderr.write(
                f"engine disagreement at n={bad}, bound={bound}: "
                f"ladder {cf[bad]}, determinant {det[bad]}\n"
            )
            return 1
    if args.table:
        rows = counting.bounded_count_table(n, bound)
        if args.format == "csv":
            _emit(counting.bounded_table_csv(rows), args.out)
        elif args.format == "json":
            _emit(
                _json_text(
                    {
                        "n_max": n,
                        "l_max": bound,
                        "rows": [{"n": r[0], "ell": r[1], "count": r[2]} for r in rows],
                    }
                ),
                args.out,
            )
        else:
            lines = []
            for l in range(bound + 1):
                row = [str(c) for (rn, rl, c) in rows if rl == l]
                lines.append(f"l={l}: " + " ".join(row))
            _emit("\n".join(lines) + "\n", args.out)
        return 0
    values = list(cf.coeffs)
    if args.format == "csv":
        lines = ["n,ell,count"] + [f"{i},{bound},{v}" for i, v in enumerate(values)]
        _emit("\n".join(lines) + "\n", args.out)
    elif args.format == "json":
        _emit(_json_text({"n_max": n, "bound": bound, "counts": values}), args.out)
    else:
        _emit(" ".join(str(v) for v in values) + "\n", args.out)
    return 0


def cmd_dist(args):
    stats = counting.height_distribution(args.order)
    if args.format == "csv":
        lines = ["height,count"] + [
            f"{h},{c}" for h, c in enumerate(stats.distribution)
        ]
        _emit("\n".join(lines) + "\n", args.out)
    elif args.format == "json":
        _emit(
            _json_text(
                {
                    "n": stats.n,
                    "distribution": list(stats.distribution),
                    "expected_height": str(stats.expected_height),
                    "expected_height_float": stats.expected_height_float,
                }
            ),
            args.out,
        )
    else:
        pairs = " ".join(f"{h}:{c}" for h, c in enumerate(stats.distribution))
        _emit(f"{pairs}  E[H]={stats.expected_height}\n", args.out)
    return 0


def cmd_enumerate(args):
    constraints = paths.PathConstraints(
        peakless=args.peakless,
        max_height=args.bound,
        end_level=args.end_level,
    )
    walked = list(paths.enumerate_paths(args.order, constraints, cap=args.oracle_cap))
    if args.format == "json":
        _emit(_json_text({"n": args.order, "paths": walked}), args.out)
    else:
        _emit("\n".join(walked) + "\n" if walked else "", args.out)
    return 0


def cmd_verify(args):
    start = time.perf_counter()
    results = verify.run_checks(args.level)
    elapsed = time.perf_counter() - start
    failures = [r for r in results if not r["ok"]]
    if args.format == "json":
        # no timing here: json output is byte-stable for identical flags
        _emit(
            _json_text(
                {"level": args.level, "results": results, "failures": failures}
            ),
            args.out,
        )
    else:
        lines = []
        for r in results:
            mark = "PASS" if r["ok"] else "FAIL"
            suffix = f": {r['detail']}" if r["detail"] else ""
            lines.append(f"{mark} {r['check']}{suffix}")
        lines.append(
            f"{len(results) - len(failures)}/{len(results)} checks passed "
            f"({args.level}) in {elapsed:.2f}s"
        )
        text = "\n".join(lines) + "\n"
        if failures:
            # machine-readable failure list on top of the human summary
            text += _json_text({"failures": failures})
        _emit(text, args.out)
    return 1 if failures else 0


def _report(args):
    return asymptotics.convergence_report(
        args.kind,
        args.order,
        count_cap=args.count_cap,
        height_cap=args.height_cap,
    )


def cmd_asympt(args):
    report = _report(args)
    if args.format == "csv":
        _emit(report.to_csv(), args.out)
    elif args.format == "json":
        _emit(report.to_json(), args.out)
    else:
        lines = [f"kind={report.kind} tolerance={report.tolerance}"]
        for row in report.rows:
            lines.append(
                f"n={row.n} exact={row.exact} predicted={row.predicted} ratio={row.ratio:.6f}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_export(args):
    if args.what == "bounded":
        rows = counting.bounded_count_table(args.order, args.bound, method=args.method)
        if args.format == "json":
            payload = {
                "n_max": args.order,
                "l_max": args.bound,
                "method": args.method,
                "rows": [{"n": r[0], "ell": r[1], "count": r[2]} for r in rows],
            }
            _emit(_json_text(payload), args.out)
        else:
            _emit(counting.bounded_table_csv(rows), args.out)
    else:
        report = _report(args)
        _emit(report.to_json() if args.format == "json" else report.to_csv(), args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="peakless",
        description="Exact enumeration of peakless Motzkin paths and their height statistics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order_help, default_format="text"):
        p.add_argument("-n", "--order", type=int, required=True, help=order_help)
        p.add_argument(
            "--format",
            choices=("text", "csv", "json"),
            default=default_format,
            help="output format (default %(default)s)",
        )
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("count", help="peakless Motzkin counts m(0..n)")
    common(p, "largest length n")
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("bounded", help="height-bounded counts A(n, l)")
    common(p, "largest length n")
    p.add_argument("-l", "--bound", type=int, required=True, help="height bound")
    p.add_argument(
        "--table", action="store_true", help="print all bounds 0..l, not just l"
    )
    p.set_defaults(handler=cmd_bounded)

    p = sub.add_parser("dist", help="height distribution and expected height")
    common(p, "path length n")
    p.set_defaults(handler=cmd_dist)

    p = sub.add_parser("enumerate", help="list paths in the U/D/F text format")
    common(p, "path length n")
    p.add_argument("--peakless", action="store_true", help="forbid UD factors")
    p.add_argument("-l", "--bound", type=int, default=None, help="height bound")
    p.add_argument("--end-level", type=int, default=0, help="required final level")
    p.add_argument(
        "--oracle-cap",
        type=int,
        default=None,
        help="override the brute-force length cap (default 16 or "
        "PEAKLESS_ORACLE_CAP)",
    )
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("verify", help="run the cross-engine agreement suite")
    p.add_argument(
        "--level", choices=("quick", "full"), default="quick", help="suite size"
    )
    p.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("asympt", help="exact versus predicted convergence report")
    p.add_argument(
        "--kind", choices=("count", "avg_height"), required=True, help="report kind"
    )
    p.add_argument(
        "-n",
        "--order",
        type=int,
        action="append",
        required=True,
        help="length to report (repeatable)",
    )
    p.add_argument("--count-cap", type=int, default=None, help="budget for count rows")
    p.add_argument(
        "--height-cap", type=int, default=None, help="budget for avg_height rows"
    )
    p.add_argument(
        "--format", choices=("text", "csv", "json"), default="text", help="output format"
    )
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.set_defaults(handler=cmd_asympt)

    p = sub.add_parser("export", help="write a table in its stable schema")
    p.add_argument("what", choices=("bounded", "report"), help="which table")
    p.add_argument("-n", "--order", type=int, action="append", required=True)
    p.add_argument("-l", "--bound", type=int, default=None)
    p.add_argument("--method", choices=("cf", "det", "dp"), default="cf")
    p.add_argument("--kind", choices=("count", "avg_height"), default="count")
    p.add_argument("--count-cap", type=int, default=None)
    p.add_argument("--height-cap", type=int, default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.set_defaults(handler=cmd_export)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "export" and args.what == "bounded":
        if args.bound is None:
            parser.error("export bounded requires -l/--bound")
        if len(args.order) != 1:
            parser.error("export bounded takes exactly one -n")
        args.order = args.order[0]
    try:
        return args.handler(args)
    except (OracleLimitError, ResourceLimitError) as exc:
        sys.stderr.write(f"resource cap: {exc}\n")
        return 3
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
