"""Command-line surface: encoding, constructions, claim verification, reports.

Exit codes: 0 success / all claims pass (below-threshold regimes included),
1 at least one claim failed, 2 usage error.  Output is byte-deterministic
for identical arguments; big integers always print in decimal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .claims import ALL_CLAIMS, REGISTRY, run_all, run_claim
from .constructions import FAMILY_IDS, family_member
from .experiments import (
    STATUS_FAIL,
    ClaimReport,
    count_large_ratio,
    count_small_ratio,
    ratio_table,
    reports_to_csv,
    reports_to_json,
    scan_ratio_bounds,
)
from .fib_core import digit_index_estimate, lucas
from .zeckendorf import digit_sum, encode, minimal_count_oracle, to_digits


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("expected a rational like 1/2 or 4, got %r" % text)


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got %r" % text)
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zeckpow",
        description="Zeckendorf numeration and exact digit-sum claim verification.",
        epilog="Claim ids for `verify`: %s, or `all`." % ", ".join(ALL_CLAIMS),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="Zeckendorf digits of a non-negative integer")
    p.add_argument("x", type=int)

    p = sub.add_parser("sf", help="Zeckendorf digit sum (minimal Fibonacci summands)")
    p.add_argument("x", type=int)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the coin-change oracle (x <= 100000)")

    p = sub.add_parser("lucas", help="Lucas number L_k")
    p.add_argument("k", type=int)
    p.add_argument("--allow-negative", action="store_true")

    p = sub.add_parser("construct", help="members of the extremal families")
    p.add_argument("family", choices=FAMILY_IDS)
    p.add_argument("--k-min", type=_positive, default=1)
    p.add_argument("--k-max", type=_positive, default=10)
    p.add_argument("--m", type=_positive, default=1)
    p.add_argument("--h", action="append", type=_positive, default=None,
                   help="also report digit sums of these powers (repeatable)")
    _output_flags(p)

    p = sub.add_parser("verify", help="run one named claim, or `all`")
    p.add_argument("claim", help="claim id or `all`")
    p.add_argument("--k-min", type=_positive, default=None)
    p.add_argument("--k-max", type=_positive, default=None)
    p.add_argument("--h", type=_positive, default=None)
    p.add_argument("--m", type=_positive, default=None,
                   help="largest multiplier to test (lucasmulti)")
    p.add_argument("--n-max", type=_positive, default=None)
    p.add_argument("--eps", type=_fraction, default=None)
    p.add_argument("--delta", type=_fraction, default=None)
    p.add_argument("--jobs", type=_positive, default=1)
    _output_flags(p)

    p = sub.add_parser("scan", help="parameterized range scans")
    p.add_argument("what", choices=("thm2", "ratio", "count-small", "count-large"))
    p.add_argument("--n-max", type=_positive, default=1000)
    p.add_argument("--h", type=_positive, default=2)
    p.add_argument("--eps", type=_fraction, default=Fraction(1, 2))
    p.add_argument("--delta", type=_fraction, default=Fraction(4))
    p.add_argument("--jobs", type=_positive, default=1)
    _output_flags(p)

    p = sub.add_parser("report", help="full claim suite + CSV tables + figures")
    p.add_argument("--out", default="reports", help="output directory")
    p.add_argument("--n-max", type=_positive, default=3000,
                   help="prefix for the ratio table and scatter figure")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--quick", action="store_true",
                   help="small ranges only (smoke-test the report path)")
    return parser


def _output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable JSON")
    p.add_argument("--csv", action="store_true", help="CSV rows")
    p.add_argument("--out", default=None, help="write output to FILE instead of stdout")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _report_lines(reports: list[ClaimReport]) -> str:
    lines = []
    for r in reports:
        rng = r.range_tested
        lines.append("claim %-24s [%s %s..%s] %s" % (
            r.claim_id, rng.get("var", "?"), rng.get("lo", "?"), rng.get("hi", "?"),
            r.status))
        for key in sorted(r.discovered_thresholds)[:8]:
            lines.append("  discovered %s = %s" % (key, r.discovered_thresholds[key]))
        for w in r.witnesses[:5]:
            inp = ";".join("%s=%s" % kv for kv in sorted(w["input"].items()))
            lines.append("  witness %s expected=%s actual=%s" % (inp, w["expected"], w["actual"]))
    return "\n".join(lines) + "\n"


def _emit_reports(reports: list[ClaimReport], args) -> int:
    if args.json:
        _emit(reports_to_json(reports) + "\n", args.out)
    elif args.csv:
        _emit(reports_to_csv(reports), args.out)
    else:
        _emit(_report_lines(reports), args.out)
    return 1 if any(r.status == STATUS_FAIL for r in reports) else 0


def _cmd_encode(args) -> int:
    rep = encode(args.x)
    if rep.indices:
        print(to_digits(rep))
        print("indices (high to low): {%s}" % ", ".join(str(j) for j in reversed(rep.indices)))
    else:
        print("(empty)")
        print("indices (high to low): {}")
    print("%d terms" % len(rep))
    if args.x >= 1:
        lo, hi = digit_index_estimate(args.x)
        print("top index bracket: [%d, %d]" % (lo, hi))
    return 0


def _cmd_sf(args) -> int:
    s = digit_sum(args.x)
    print(s)
    if args.oracle and args.x >= 1:
        o = minimal_count_oracle(args.x)
        print("oracle: %d (%s)" % (o, "agrees" if o == s else "DISAGREES"))
        return 0 if o == s else 1
    return 0


def _cmd_lucas(args) -> int:
    print(lucas(args.k, allow_negative=args.allow_negative))
    return 0


def _cmd_construct(args) -> int:
    powers = tuple(sorted(set(args.h))) if args.h else ()
    records = [family_member(args.family, k, args.m).record(powers)
               for k in range(args.k_min, args.k_max + 1)]
    if args.json:
        _emit(json.dumps(records, indent=2) + "\n", args.out)
    elif args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header = list(records[0].keys())
        w.writerow(header)
        for rec in records:
            w.writerow([rec[key] for key in header])
        _emit(buf.getvalue(), args.out)
    else:
        lines = []
        for rec in records:
            extras = " ".join("%s=%s" % (key, rec[key]) for key in rec
                              if key.startswith("sF_n") and key != "sF_n")
            lines.append("%s k=%-3d m=%-3d sF(n)=%-4d %s n=%s" % (
                rec["family"], rec["k"], rec["m"], rec["sF_n"], extras, rec["n"]))
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_verify(args) -> int:
    overrides = {}
    for cli_name, kw in (("k_min", "k_min"), ("k_max", "k_max"), ("n_max", "n_max"),
                         ("eps", "eps"), ("delta", "delta")):
        v = getattr(args, cli_name)
        if v is not None:
            overrides[kw] = v
    if args.h is not None:
        overrides["h"] = args.h
    if args.m is not None:
        overrides["m_max"] = args.m
    if args.claim == "all":
        if overrides:
            print("error: `verify all` runs pinned default ranges; "
                  "override individual claims instead", file=sys.stderr)
            return 2
        reports = run_all(jobs=args.jobs)
    else:
        if args.claim not in REGISTRY:
            print("error: unknown claim %r; known claims: %s, all"
                  % (args.claim, ", ".join(ALL_CLAIMS)), file=sys.stderr)
            return 2
        allowed = REGISTRY[args.claim][1]
        if "jobs" in allowed:
            overrides["jobs"] = args.jobs
        unknown = set(overrides) - set(allowed)
        if unknown:
            print("error: claim %r does not accept %s"
                  % (args.claim, ", ".join("--" + u.replace("_", "-") for u in sorted(unknown))),
                  file=sys.stderr)
            return 2
        reports = run_claim(args.claim, **overrides)
    return _emit_reports(reports, args)


def _cmd_scan(args) -> int:
    if args.what == "thm2":
        return _emit_reports([scan_ratio_bounds(args.n_max, args.h, jobs=args.jobs)], args)
    if args.what == "ratio":
        rows = ratio_table(args.n_max, args.h)
        if args.json:
            payload = [{"n": n, "sF_n": s1, "sF_nh": s2, "ratio": "%d/%d" % (r.numerator, r.denominator)}
                       for n, s1, s2, r in rows]
            _emit(json.dumps(payload, indent=2) + "\n", args.out)
        else:
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["n", "sF_n", "sF_nh", "ratio_num", "ratio_den"])
            for n, s1, s2, r in rows:
                w.writerow([n, s1, s2, r.numerator, r.denominator])
            _emit(buf.getvalue(), args.out)
        return 0
    counter = count_small_ratio if args.what == "count-small" else count_large_ratio
    thr = args.eps if args.what == "count-small" else args.delta
    count, constructed = counter(args.n_max, args.h, thr, jobs=args.jobs)
    if args.json:
        payload = {
            "scan": args.what, "n_max": args.n_max, "h": args.h,
            "threshold": "%d/%d" % (thr.numerator, thr.denominator),
            "count": count, "constructed": constructed,
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit("%s n_max=%d h=%d threshold=%s: count=%d constructed=%d\n"
              % (args.what, args.n_max, args.h, thr, count, constructed), args.out)
    return 0


def _cmd_report(args) -> int:
    from . import plots  # matplotlib import deferred to the report path

    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    if args.quick:
        reports = (run_claim("linear", k_max=12)
                   + run_claim("squares", k_max=12, blocks_k_max=12)
                   + run_claim("thm2-bounds", n_max=500)
                   + run_claim("io-witnesses"))
        n_max, k_max, m_max = min(args.n_max, 500), 12, 30
    else:
        reports = run_all(jobs=args.jobs)
        n_max, k_max, m_max = args.n_max, 30, 120
    (outdir / "claims.json").write_text(reports_to_json(reports) + "\n", encoding="utf-8")
    (outdir / "witnesses.csv").write_text(reports_to_csv(reports), encoding="utf-8")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "sF_n", "sF_nh", "ratio_num", "ratio_den"])
    for n, s1, s2, r in ratio_table(n_max, 2):
        w.writerow([n, s1, s2, r.numerator, r.denominator])
    (outdir / "ratio_h2.csv").write_text(buf.getvalue(), encoding="utf-8")
    figures = plots.render_all(outdir / "figures", n_max=n_max, k_max=k_max, m_max=m_max)
    sys.stdout.write(_report_lines(reports))
    for name in ("claims.json", "witnesses.csv", "ratio_h2.csv"):
        print("wrote %s" % (outdir / name))
    for fig in figures:
        print("wrote %s" % fig)
    return 1 if any(r.status == STATUS_FAIL for r in reports) else 0


_COMMANDS = {
    "encode": _cmd_encode,
    "sf": _cmd_sf,
    "lucas": _cmd_lucas,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 on --help
        return int(e.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, KeyError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
