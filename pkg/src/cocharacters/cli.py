"""Command-line front end.

Four subcommands: ``multiplicities`` and ``colength`` print tables,
``hilbert`` dumps a truncated series, ``verify`` runs the oracle suite.
Standard output is deterministic for a fixed invocation; progress and
timing go to standard error.  Exit codes: 0 on success, 1 on usage errors,
and the number of failed checks for ``verify``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import closedform, cochar
from .partitions import weight


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="cochar", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_d=True):
        p.add_argument("--k", type=int, required=True, help="matrix size, k >= 1")
        if with_d:
            p.add_argument(
                "--d",
                type=int,
                default=None,
                help="number of variables (default 2k-1)",
            )
        p.add_argument(
            "--max-degree",
            type=int,
            default=None,
            help="truncation bound (default 10 for k<=3, 8 otherwise)",
        )
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("multiplicities", help="table of (partition, multiplicity)")
    common(p)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("colength", help="colength coefficients with oracle deltas")
    common(p, with_d=False)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("hilbert", help="dump the truncated Hilbert series")
    common(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="run the verification suite")
    common(p, with_d=False)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument(
        "--checks",
        default=None,
        help="comma-separated subset of checks (default: all applicable)",
    )

    return parser


def _resolve(args):
    if args.k < 1:
        raise SystemExit(_usage_error("--k must be >= 1"))
    d = getattr(args, "d", None)
    if d is None:
        d = cochar.default_var_count(args.k)
    elif d < 1:
        raise SystemExit(_usage_error("--d must be >= 1"))
    bound = args.max_degree
    if bound is None:
        bound = cochar.default_degree_bound(args.k)
    elif bound < 0:
        raise SystemExit(_usage_error("--max-degree must be >= 0"))
    return d, bound


def _usage_error(message) -> int:
    sys.stderr.write(f"error: {message}\n")
    return 1


def _emit(text: str, out_path) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as handle:
            handle.write(text)


def _partition_str(lam) -> str:
    return "(" + ",".join(str(p) for p in lam) + ")"


def cmd_multiplicities(args) -> int:
    d, bound = _resolve(args)
    if d < cochar.default_var_count(args.k):
        sys.stderr.write(
            f"note: d={d} < {cochar.default_var_count(args.k)}; results are "
            f"restricted to partitions with at most {d} parts\n"
        )
    started = time.perf_counter()
    table = cochar.multiplicity_table(args.k, d, bound)
    sys.stderr.write(f"computed in {time.perf_counter() - started:.2f}s\n")
    if args.format == "json":
        m = cochar.multiplicity_series_Uk(args.k, d, bound)
        payload = m.to_json_dict()
        payload["k"] = args.k
        v_form = cochar.to_v_variables(m)
        payload["v_terms"] = [
            {"v_exponents": list(exps), "coeff": coeff}
            for exps, coeff in v_form.items()
        ]
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        oracle = args.k <= 3
        header = ["partition", "weight", "multiplicity"]
        if oracle:
            header.append("closed_form")
        writer.writerow(header)
        for lam, coeff in table.entries:
            row = [" ".join(str(p) for p in lam), weight(lam), coeff]
            if oracle:
                row.append(closedform.closed_multiplicity(lam, args.k))
            writer.writerow(row)
        text = buffer.getvalue()
    else:
        lines = [f"# multiplicities k={args.k} d={d} max-degree={bound}"]
        for lam, coeff in table.entries:
            lines.append(f"{_partition_str(lam)} : {coeff}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_colength(args) -> int:
    _, bound = _resolve(args)
    started = time.perf_counter()
    computed = cochar.colength_series(args.k, bound)
    sys.stderr.write(f"computed in {time.perf_counter() - started:.2f}s\n")
    coefficients = [computed.coefficient((n,)) for n in range(bound + 1)]
    oracle = None
    if args.k <= 4:
        closed = closedform.colength_closed(args.k, bound)
        oracle = [closed.coefficient((n,)) for n in range(bound + 1)]
    if args.format == "json":
        payload = {"k": args.k, "degree_bound": bound, "coefficients": coefficients}
        if oracle is not None:
            payload["oracle"] = oracle
            payload["delta"] = [c - o for c, o in zip(coefficients, oracle)]
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        header = ["n", "colength"] + (["oracle", "delta"] if oracle else [])
        writer.writerow(header)
        for n, c in enumerate(coefficients):
            row = [n, c]
            if oracle is not None:
                row += [oracle[n], c - oracle[n]]
            writer.writerow(row)
        text = buffer.getvalue()
    else:
        lines = [f"# colength k={args.k} max-degree={bound}"]
        for n, c in enumerate(coefficients):
            if oracle is not None:
                lines.append(f"{n} : {c} (oracle {oracle[n]}, delta {c - oracle[n]})")
            else:
                lines.append(f"{n} : {c}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_hilbert(args) -> int:
    d, bound = _resolve(args)
    started = time.perf_counter()
    binomial_sum, telescoped = cochar.hilbert_series_two_forms(args.k, d, bound)
    agree = binomial_sum == telescoped
    sys.stderr.write(f"computed in {time.perf_counter() - started:.2f}s\n")
    if args.format == "json":
        payload = {
            "k": args.k,
            "d": d,
            "degree_bound": bound,
            "closed_forms_agree": agree,
            "terms": [
                {"exponents": list(exps), "coeff": coeff}
                for exps, coeff in binomial_sum.items()
            ],
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [
            f"# hilbert k={args.k} d={d} max-degree={bound}",
            f"# closed forms agree: {str(agree).lower()}",
            binomial_sum.dump(),
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    _, bound = _resolve(args)
    checks = None
    if args.checks:
        checks = [name.strip() for name in args.checks.split(",") if name.strip()]
        unknown = [name for name in checks if name not in closedform.CHECKS]
        if unknown:
            return _usage_error(f"unknown checks: {', '.join(unknown)}")
    reports = closedform.run_verification(args.k, bound, checks)
    for report in reports:
        sys.stderr.write(f"{report.check}: {report.seconds:.2f}s\n")
    if args.format == "json":
        payload = {
            "k": args.k,
            "degree_bound": bound,
            "reports": [r.to_json_dict() for r in reports],
            "summary": closedform.summary_line(reports),
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [f"# verify k={args.k} max-degree={bound}"]
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            lines.append(
                f"{status} {r.check} ({r.subject}): {r.computed}/{r.expected}"
            )
        lines.append(closedform.summary_line(reports))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return sum(1 for r in reports if not r.passed)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    handlers = {
        "multiplicities": cmd_multiplicities,
        "colength": cmd_colength,
        "hilbert": cmd_hilbert,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    except ValueError as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
