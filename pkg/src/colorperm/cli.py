"""Command line interface.

Subcommands:

* stats      statistics of one element given in window notation
* dist       distribution of a statistic over a whole group
* joint      joint (csum, exc_A) table over a whole group
* poly       generating polynomial of exc_A
* bijection  apply the complementing involution to one element
* check      run invariant suites over parameter sweeps

Output is deterministic for fixed inputs.  JSON output renders counts as
decimal strings.  Exit status: 0 on success, 1 when a check finds a
violated invariant, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import closed, dist, oracle, properties
from .perm import (
    GroupParams,
    WindowParseError,
    enumerate_group,
    format_window,
    parse_window,
)
from .stats import summarize

#: Brute-force suites skip parameter points with more elements than this.
BRUTE_SUITE_CAP = 10**6
#: Elementwise involution suites use a tighter cap.
ELEMENTWISE_SUITE_CAP = 10**5

SUITE_NAMES = ("lemma", "recursion", "closed", "eq2", "symmetry", "logconcave")


class UsageError(Exception):
    """A bad flag combination; reported on stderr with exit status 2."""


def _emit(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _kv_text(pairs) -> str:
    return "".join(f"{key}: {value}\n" for key, value in pairs)


def _kv_csv(pairs) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["stat", "value"])
    for key, value in pairs:
        writer.writerow([key, value])
    return buf.getvalue()


def cmd_stats(args) -> int:
    p = parse_window(args.window, args.r)
    s = summarize(p)
    letters = ",".join(str(x) for x in sorted(s.exc_set))
    positions = ",".join(str(i) for i in sorted(s.exc_A_set))
    if args.format == "json":
        obj = {
            "window": format_window(p),
            "r": p.r,
            "n": p.n,
            "exc": s.exc,
            "exc_A": s.exc_A,
            "csum": s.csum,
            "exc_letters": [str(x) for x in sorted(s.exc_set)],
            "exc_A_positions": sorted(s.exc_A_set),
        }
        _emit(args, _json_text(obj))
        return 0
    pairs = [
        ("window", format_window(p)),
        ("r", p.r),
        ("n", p.n),
        ("exc", s.exc),
        ("exc_A", s.exc_A),
        ("csum", s.csum),
        ("exc_letters", letters if args.format == "text" else letters.replace(",", ";")),
        ("exc_A_positions", positions if args.format == "text" else positions.replace(",", ";")),
    ]
    _emit(args, _kv_text(pairs) if args.format == "text" else _kv_csv(pairs))
    return 0


def _dist_row(args) -> list[int]:
    r, n = args.r, args.n
    if args.method == "brute":
        report = oracle.brute_tables(r, n, workers=args.threads)
        if args.target == "exc":
            return report.exc_row
        return report.joint_by_csum.d_row()
    if args.method == "dp":
        if args.target == "exc":
            return dist.exc_dist(r, n)
        return dist.excA_dist(r, n, method="recurrence")
    if args.method == "closed":
        poly = closed.D_closed(r, n)
        return [poly.coeff(k) for k in range(n)]
    return [closed.d_explicit(r, n, k) for k in range(n)]


def cmd_dist(args) -> int:
    if args.method in ("closed", "explicit") and args.target == "exc":
        raise UsageError(
            f"method {args.method!r} computes the exc_A distribution only; "
            "use --target excA"
        )
    row = _dist_row(args)
    if args.format == "json":
        obj = {
            "r": args.r,
            "n": args.n,
            "target": args.target,
            "method": args.method,
            "counts": [str(c) for c in row],
        }
        _emit(args, _json_text(obj))
    elif args.format == "csv":
        lines = ["k,count"] + [f"{k},{c}" for k, c in enumerate(row)]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, ",".join(str(c) for c in row) + "\n")
    return 0


def cmd_joint(args) -> int:
    if args.method == "brute":
        table = oracle.brute_tables(args.r, args.n, workers=args.threads).joint_by_csum
    else:
        table = dist.joint_table(args.r, args.n)
    if args.format == "json":
        _emit(args, table.to_json())
    else:
        _emit(args, table.to_csv())
    return 0


def cmd_poly(args) -> int:
    poly = closed.D_closed(args.r, args.n)
    if args.format == "json":
        obj = {
            "r": args.r,
            "n": args.n,
            "coefficients": [str(poly.coeff(k)) for k in range(args.n)],
        }
        _emit(args, _json_text(obj))
    elif args.format == "csv":
        lines = ["k,coefficient"] + [
            f"{k},{poly.coeff(k)}" for k in range(args.n)
        ]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, poly.render() + "\n")
    return 0


def cmd_bijection(args) -> int:
    p = parse_window(args.window, args.r)
    q = properties.symmetry_map(p)
    pairs = [
        ("window", format_window(p)),
        ("image", format_window(q)),
        ("exc", summarize(p).exc),
        ("image_exc", summarize(q).exc),
        ("expected_sum", p.r * p.n - 1),
    ]
    if args.format == "json":
        _emit(args, _json_text(dict(pairs)))
    elif args.format == "csv":
        _emit(args, _kv_csv(pairs))
    else:
        _emit(args, _kv_text(pairs))
    return 0


def _sweep(r_max: int, n_max: int):
    for r in range(1, r_max + 1):
        for n in range(1, n_max + 1):
            yield r, n


def suite_lemma(r_max, n_max, workers=None) -> list:
    """exc = r*exc_A + csum on every element of every feasible group."""
    verdicts = []
    for r, n in _sweep(r_max, n_max):
        params = GroupParams(r, n)
        if params.size > BRUTE_SUITE_CAP:
            continue
        failure = None
        for p in enumerate_group(params):
            try:
                summarize(p)
            except AssertionError as exc:
                failure = str(exc)
                break
        verdicts.append(
            properties.PropertyVerdict(
                name="lemma_exc_decomposition",
                passed=failure is None,
                r=r,
                n=n,
                counterexample=failure,
            )
        )
    return verdicts


def suite_recursion(r_max, n_max, workers=None) -> list:
    """DP joint table and exc row against full enumeration."""
    verdicts = []
    for r, n in _sweep(r_max, n_max):
        if GroupParams(r, n).size > BRUTE_SUITE_CAP:
            continue
        report = oracle.brute_tables(r, n, workers=workers)
        diffs = oracle.compare(dist.joint_table(r, n), report.joint_by_csum)
        counterexample = None
        if diffs:
            d = diffs[0]
            counterexample = (
                f"cell (i={d.i}, k={d.k}): dp={d.left} enumeration={d.right}"
            )
        verdicts.append(
            properties.PropertyVerdict(
                name="dp_joint_matches_enumeration",
                passed=not diffs,
                r=r,
                n=n,
                counterexample=counterexample,
            )
        )
        dp_exc = dist.exc_dist(r, n)
        counterexample = None
        if dp_exc != report.exc_row:
            k = next(
                k for k in range(r * n) if dp_exc[k] != report.exc_row[k]
            )
            counterexample = (
                f"exc={k}: dp={dp_exc[k]} enumeration={report.exc_row[k]}"
            )
        verdicts.append(
            properties.PropertyVerdict(
                name="dp_exc_matches_enumeration",
                passed=counterexample is None,
                r=r,
                n=n,
                counterexample=counterexample,
            )
        )
    return verdicts


def suite_closed(r_max, n_max, workers=None) -> list:
    """Recurrence, joint-sum, closed form and explicit sum all agree."""
    verdicts = []
    for r in range(1, r_max + 1):
        for n, table in zip(
            range(1, n_max + 1), dist.iter_joint_tables(r, n_max)
        ):
            rows = {
                "recurrence": dist.excA_dist(r, n, method="recurrence"),
                "sum-joint": table.d_row(),
                "closed": [closed.D_closed(r, n).coeff(k) for k in range(n)],
                "explicit": [closed.d_explicit(r, n, k) for k in range(n)],
            }
            baseline = rows["recurrence"]
            bad = next(
                (name for name, row in rows.items() if row != baseline), None
            )
            verdicts.append(
                properties.PropertyVerdict(
                    name="excA_distribution_agreement",
                    passed=bad is None,
                    r=r,
                    n=n,
                    counterexample=(
                        None
                        if bad is None
                        else f"{bad} row {rows[bad]} != recurrence row {baseline}"
                    ),
                )
            )
    return verdicts


def suite_eq2(r_max, n_max, workers=None) -> list:
    """Derivative recurrence for the generating polynomial."""
    verdicts = []
    for r in range(1, r_max + 1):
        report = closed.check_eq2(r, max(n_max, 2))
        verdicts.append(
            properties.PropertyVerdict(
                name="polynomial_derivative_recurrence",
                passed=report.passed,
                r=r,
                n=report.first_failure_n if not report.passed else report.n_max,
                counterexample=report.detail,
            )
        )
    return verdicts


def suite_symmetry(r_max, n_max, workers=None) -> list:
    """Palindromic exc distribution, plus the involution elementwise."""
    verdicts = []
    for r, n in _sweep(r_max, n_max):
        row = dist.exc_dist(r, n)
        verdict = properties.check_symmetry_dist(row, r, n)
        verdicts.append(verdict)
        if GroupParams(r, n).size <= ELEMENTWISE_SUITE_CAP:
            verdicts.append(properties.check_exc_complement(r, n))
            verdicts.append(properties.check_involution(r, n))
    return verdicts


def suite_logconcave(r_max, n_max, workers=None) -> list:
    """Log-concavity (and hence unimodality) of the exc_A distribution.

    For r <= 2 this always holds; for larger r the verdicts carry an
    "empirical" suffix because they only certify the swept range.
    """
    verdicts = []
    for r, n in _sweep(r_max, n_max):
        row = dist.excA_dist(r, n)
        suffix = "" if r <= 2 else "_empirical"
        for verdict in (
            properties.is_log_concave(row, r, n),
            properties.is_unimodal(row, r, n),
        ):
            verdicts.append(
                properties.PropertyVerdict(
                    name=f"excA_{verdict.name}{suffix}",
                    passed=verdict.passed,
                    r=r,
                    n=n,
                    counterexample=verdict.counterexample,
                )
            )
    return verdicts


_SUITES = {
    "lemma": suite_lemma,
    "recursion": suite_recursion,
    "closed": suite_closed,
    "eq2": suite_eq2,
    "symmetry": suite_symmetry,
    "logconcave": suite_logconcave,
}


def run_suites(suite: str, r_max: int, n_max: int, workers=None) -> list:
    names = SUITE_NAMES if suite == "all" else (suite,)
    verdicts = []
    for name in names:
        verdicts.extend(_SUITES[name](r_max, n_max, workers=workers))
    return verdicts


def cmd_check(args) -> int:
    verdicts = run_suites(args.suite, args.r_max, args.n_max, workers=args.threads)
    failed = [v for v in verdicts if not v.passed]
    if args.format == "json":
        obj = {
            "suite": args.suite,
            "r_max": args.r_max,
            "n_max": args.n_max,
            "verdicts": [v.to_json_obj() for v in verdicts],
            "pass": not failed,
        }
        _emit(args, _json_text(obj))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["property", "r", "n", "pass", "counterexample"])
        for v in verdicts:
            writer.writerow(
                [
                    v.name,
                    "" if v.r is None else v.r,
                    "" if v.n is None else v.n,
                    "true" if v.passed else "false",
                    v.counterexample or "",
                ]
            )
        _emit(args, buf.getvalue())
    else:
        lines = []
        for v in verdicts:
            line = ("PASS " if v.passed else "FAIL ") + v.name
            if v.r is not None:
                line += f" r={v.r}"
            if v.n is not None:
                line += f" n={v.n}"
            if not v.passed and v.counterexample:
                line += f": {v.counterexample}"
            lines.append(line)
        lines.append(
            f"{len(verdicts)} checks, {len(verdicts) - len(failed)} passed, "
            f"{len(failed)} failed"
        )
        _emit(args, "\n".join(lines) + "\n")
    return 1 if failed else 0


def _add_output_options(parser):
    parser.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default text)",
    )
    parser.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorperm",
        description="Excedance statistics and distributions on colored permutation groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="statistics of one element")
    p.add_argument("--r", type=int, required=True, help="number of colors")
    p.add_argument("window", help="window notation, e.g. 3,1^1,2^2")
    _add_output_options(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("dist", help="distribution of a statistic over a group")
    p.add_argument("--r", type=int, required=True, help="number of colors")
    p.add_argument("--n", type=int, required=True, help="degree")
    p.add_argument(
        "--target",
        choices=("exc", "excA"),
        required=True,
        help="which statistic to distribute",
    )
    p.add_argument(
        "--method",
        choices=("brute", "dp", "closed", "explicit"),
        default="dp",
        help="brute enumeration, insertion recursions, closed form or explicit sum",
    )
    p.add_argument("--threads", type=int, help="worker processes for brute enumeration")
    _add_output_options(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("joint", help="joint (csum, exc_A) table over a group")
    p.add_argument("--r", type=int, required=True, help="number of colors")
    p.add_argument("--n", type=int, required=True, help="degree")
    p.add_argument(
        "--method",
        choices=("brute", "dp"),
        default="dp",
        help="brute enumeration or insertion recursions",
    )
    p.add_argument("--threads", type=int, help="worker processes for brute enumeration")
    _add_output_options(p)
    p.set_defaults(func=cmd_joint)

    p = sub.add_parser("poly", help="generating polynomial of exc_A")
    p.add_argument("--r", type=int, required=True, help="number of colors")
    p.add_argument("--n", type=int, required=True, help="degree")
    _add_output_options(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("bijection", help="apply the complementing involution")
    p.add_argument("--r", type=int, required=True, help="number of colors")
    p.add_argument("window", help="window notation, e.g. 2^1,1^2,4^1,3")
    _add_output_options(p)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("check", help="run invariant suites over parameter sweeps")
    p.add_argument("--r-max", type=int, default=3, help="largest r (default 3)")
    p.add_argument("--n-max", type=int, default=5, help="largest n (default 5)")
    p.add_argument(
        "--suite",
        choices=SUITE_NAMES + ("all",),
        default="all",
        help="which suite to run (default all)",
    )
    p.add_argument("--threads", type=int, help="worker processes for brute enumeration")
    _add_output_options(p)
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WindowParseError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
