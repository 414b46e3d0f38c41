"""Command-line front end: ``qcong list | verify | scan | gr``.

Exit codes: 0 all pass, 1 a genuine failure, 2 usage error or inapplicable instance.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .suite import (
    CATALOG, DEFAULT_SEED, DEFAULT_SERIES_ORDER, DEFAULT_SPECIALIZATIONS, MUTATIONS,
    Report, ScanConfig, Verdict, get_claim, run, scan,
)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"environment variable {name} must be an integer, got {raw!r}") from None


def _primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=None, help=f"sampling seed (env QCONG_SEED, default {DEFAULT_SEED})")
    p.add_argument("--series-order", type=int, default=None,
                   help=f"truncation order for series identities (env QCONG_SERIES_ORDER, default {DEFAULT_SERIES_ORDER})")
    p.add_argument("--specializations", type=int, default=DEFAULT_SPECIALIZATIONS,
                   help="parameter specializations per parametric instance")
    p.add_argument("--json", metavar="PATH", help="write the JSON report here")
    p.add_argument("--md", metavar="PATH", help="write a markdown report here")
    p.add_argument("--format", choices=("json", "markdown", "plain"), default="plain",
                   help="stdout format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcong", description="Exact checks of q-supercongruences.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="print the claim catalog")

    v = sub.add_parser("verify", help="check one claim instance")
    v.add_argument("--claim", required=True)
    v.add_argument("--n", type=int)
    v.add_argument("--p", type=int)
    v.add_argument("--r", type=int, default=None)
    v.add_argument("--mutant", action="store_true",
                   help="run the registered mutation instead; exit 0 when it is caught")
    _add_common(v)

    s = sub.add_parser("scan", help="check every applicable instance within bounds")
    s.add_argument("--n-max", type=int, default=19)
    s.add_argument("--primes", type=_primes, default=())
    s.add_argument("--r-max", type=int, default=1)
    s.add_argument("--workers", type=int, default=1, help="worker processes")
    _add_common(s)

    g = sub.add_parser("gr", help="check both Gasper-Rahman identities as power series")
    g.add_argument("--order", type=int, default=None, help="alias of --series-order")
    g.add_argument("--trials", type=int, default=None, help="alias of --specializations")
    _add_common(g)
    return parser


# -- rendering ---------------------------------------------------------------

def render_plain(report: Report, *, details: bool = False) -> str:
    lines = []
    for v in report.verdicts:
        lines.append(v.describe())
        if details or v.status == "fail":
            for s in v.subchecks:
                lines.append(f"    [{'ok' if s.passed else 'FAIL'}] {s.name}: {s.detail}")
            for note in v.notes:
                lines.append(f"    note: {note}")
    sm = report.summary
    lines.append(f"summary: {sm['pass']} pass, {sm['fail']} fail, {sm['inapplicable']} inapplicable")
    return "\n".join(lines)


def render_markdown(report: Report) -> str:
    out = [f"# qcong report", "", f"version {report.version}, seed {report.seed}", ""]
    kinds: dict[str, list[Verdict]] = {}
    for v in report.verdicts:
        kinds.setdefault(get_claim(v.claim).kind, []).append(v)
    for kind, vs in kinds.items():
        out += [f"## {kind}", "", "| claim | instance | status | checks | ms |", "|---|---|---|---|---|"]
        for v in vs:
            inst = ", ".join(f"{k}={x}" for k, x in v.instance.items())
            ok = sum(s.passed for s in v.subchecks)
            out.append(f"| {v.claim} | {inst} | {v.status} | {ok}/{len(v.subchecks)} | {v.elapsed_ms:.0f} |")
        out.append("")
    sm = report.summary
    out.append(f"**{sm['pass']} pass, {sm['fail']} fail, {sm['inapplicable']} inapplicable**")
    return "\n".join(out) + "\n"


def _emit(report: Report, args, *, details: bool = False) -> None:
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    if args.md:
        with open(args.md, "w", encoding="utf-8") as fh:
            fh.write(render_markdown(report))
    if args.format == "json":
        print(report.to_json())
    elif args.format == "markdown":
        print(render_markdown(report), end="")
    else:
        print(render_plain(report, details=details))


# -- commands ------------------------------------------------------------------

def cmd_list(args) -> int:
    for c in CATALOG:
        mut = "  [mutation: " + MUTATIONS[c.id][0] + "]" if c.id in MUTATIONS else ""
        print(f"{c.id:9s} {c.kind:24s} {c.anchor}: {c.quote}{mut}")
    return EXIT_PASS


def _settings(args) -> tuple[int, int]:
    seed = args.seed if args.seed is not None else _env_int("QCONG_SEED", DEFAULT_SEED)
    order = args.series_order
    if getattr(args, "order", None) is not None:
        order = args.order
    if order is None:
        order = _env_int("QCONG_SERIES_ORDER", DEFAULT_SERIES_ORDER)
    if order < 0:
        raise UsageError("series order must be nonnegative")
    return seed, order


def cmd_verify(args) -> int:
    try:
        claim = get_claim(args.claim)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    seed, order = _settings(args)
    if claim.params == "n":
        if args.n is None:
            raise UsageError(f"{claim.id} needs --n")
        instance = {"n": args.n}
    elif claim.params == "pr":
        if args.p is None:
            raise UsageError(f"{claim.id} needs --p (and optionally --r)")
        instance = {"p": args.p, "r": args.r if args.r is not None else 1}
    else:
        instance = {"order": order}
    if args.mutant and claim.id not in MUTATIONS:
        raise UsageError(f"no mutation registered for {claim.id}")
    verdict = run(claim.id, instance, seed, specializations=args.specializations,
                  series_order=order, mutant=args.mutant)
    report = Report(__version__, seed, {"command": "verify", "mutant": args.mutant,
                                        "specializations": args.specializations,
                                        "series_order": order}, [verdict])
    _emit(report, args, details=True)
    if verdict.status == "inapplicable":
        return EXIT_USAGE
    if args.mutant:
        if verdict.status == "fail":
            print(f"mutation '{MUTATIONS[claim.id][0]}' detected")
            return EXIT_PASS
        print(f"mutation '{MUTATIONS[claim.id][0]}' NOT detected", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_PASS if verdict.passed else EXIT_FAIL


def cmd_scan(args) -> int:
    seed, order = _settings(args)
    cfg = ScanConfig(args.n_max, tuple(args.primes), args.r_max, seed, order,
                     args.specializations, max(1, args.workers))
    report = scan(cfg)
    _emit(report, args)
    return EXIT_PASS if report.ok else EXIT_FAIL


def cmd_gr(args) -> int:
    seed, order = _settings(args)
    trials = args.trials if args.trials is not None else args.specializations
    verdicts = [run(c, {"order": order}, seed, specializations=trials, series_order=order)
                for c in ("gr", "gr_a")]
    report = Report(__version__, seed, {"command": "gr", "series_order": order, "trials": trials}, verdicts)
    _emit(report, args, details=True)
    return EXIT_PASS if report.ok else EXIT_FAIL


COMMANDS = {"list": cmd_list, "verify": cmd_verify, "scan": cmd_scan, "gr": cmd_gr}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"qcong: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"qcong: error: cannot write report: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
