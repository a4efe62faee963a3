"""Command-line front end.

Emits machine-readable tables (CSV with a schema comment line, JSON for the
limit constants) reproducing the counting tables, the distribution data,
the identity check, and the asymptotics at desk scale.

Exit codes: 0 success / verification passed, 1 verification mismatch,
2 invalid input, 3 size cap exceeded.  Output is deterministic: fixed
column order, fixed row order, reals printed to the --precision digits
(default 12), integers always in full decimal.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from mpmath import mp

from . import counting, limits, oracle, series

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_CAP = 3

COUNT_CAP = 1000
DIST_CAP = 1000
ORACLE_CAP = oracle.DEFAULT_CAP

DEFAULT_PRECISION = 12


def _real(x, digits: int) -> str:
    with mp.workprec(limits.PREC_BITS):
        return mp.nstr(x, digits)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _invalid(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_INVALID


def _capped(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_CAP


def _parse_rational(text: str) -> Fraction:
    return Fraction(text)


def cmd_count(args) -> int:
    if args.k < 2:
        return _invalid("k must be at least 2")
    if args.n < 0:
        return _invalid("n must be nonnegative")
    if args.n > COUNT_CAP:
        return _capped(f"n={args.n} exceeds the count cap {COUNT_CAP}")
    table = counting.count_table(args.k, args.n)
    if args.format == "json":
        doc = {
            "schema": "kcross-count v1",
            "k": args.k,
            "n": args.n,
            "by_arcs": {str(h): table.by_arcs[h] for h in sorted(table.by_arcs)},
            "total": table.total,
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
        return EXIT_OK
    lines = ["# schema: kcross-count v1", "n,h,structures,total"]
    for h in sorted(table.by_arcs):
        lines.append(f"{args.n},{h},{table.by_arcs[h]},{table.total}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_dist(args) -> int:
    if args.k not in (2, 3):
        return _invalid("dist covers k=2 and k=3")
    if args.n < 1:
        return _invalid("n must be at least 1")
    if args.n > DIST_CAP:
        return _capped(f"n={args.n} exceeds the dist cap {DIST_CAP}")
    p = args.precision
    d = limits.distribution(args.n, args.k)
    consts = limits.limit_constants(args.k)
    with mp.workprec(limits.PREC_BITS):
        mean_n = consts.mu * args.n
        var_n = consts.sigma2 * args.n
        sd = mp.sqrt(var_n)
        lines = [
            "# schema: kcross-dist v1",
            f"# k={args.k} n={args.n}"
            f" exact_mean={_real(d.mean, p)} exact_variance={_real(d.variance, p)}"
            f" asymptotic_mean={_real(mean_n, p)} asymptotic_variance={_real(var_n, p)}",
            "h,probability,gaussian_density_at_h,cdf,gaussian_cdf",
        ]
        cum = Fraction(0)
        for h, prob in enumerate(d.probs):
            cum += prob
            x = (h - mean_n) / sd
            density = mp.npdf(x) / sd
            gauss_cdf = mp.ncdf((h + mp.mpf(1) / 2 - mean_n) / sd)
            lines.append(
                ",".join(
                    [
                        str(h),
                        _real(limits.as_mpf(prob), p),
                        _real(density, p),
                        _real(limits.as_mpf(cum), p),
                        _real(gauss_cdf, p),
                    ]
                )
            )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify_identity(args) -> int:
    if args.k not in (2, 3):
        return _invalid("verify-identity covers k=2 and k=3")
    if args.order < 0:
        return _invalid("order must be nonnegative")
    try:
        w = _parse_rational(args.w)
    except (ValueError, ZeroDivisionError):
        return _invalid(f"cannot parse rational weight {args.w!r}")
    check = series.verify_identity(args.k, w, args.order)
    lines = ["# schema: kcross-verify-identity v1", "k,w,order,status,mismatch_n,lhs,rhs"]
    if check.ok:
        lines.append(f"{args.k},{w},{args.order},ok,,,")
        _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK
    lines.append(
        f"{args.k},{w},{args.order},mismatch,"
        f"{check.mismatch_order},{check.lhs_coeff},{check.rhs_coeff}"
    )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_MISMATCH


def cmd_limits(args) -> int:
    if args.k not in (2, 3):
        return _invalid("limits covers k=2 and k=3")
    p = args.precision
    c = limits.limit_constants(args.k)
    with mp.workprec(limits.PREC_BITS):
        doc = {
            "schema": "kcross-limits v1",
            "k": args.k,
            "mu": float(_real(c.mu, p)),
            "sigma2": float(_real(c.sigma2, p)),
            "gamma": float(_real(c.gamma, p)),
            "paired_fraction": float(_real(2 * c.mu, p)),
            "unpaired_fraction": float(_real(1 - 2 * c.mu, p)),
            "subexp_exponent": c.subexp_exponent,
            "amplitude": None if c.amplitude is None else float(_real(c.amplitude, p)),
        }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_asympt(args) -> int:
    if args.n_from < 5:
        return _invalid("asymptotic formula needs n >= 5")
    if args.n_to < args.n_from:
        return _invalid("empty range")
    if args.n_to > COUNT_CAP:
        return _capped(f"n={args.n_to} exceeds the count cap {COUNT_CAP}")
    if args.step < 1:
        return _invalid("step must be positive")
    p = args.precision
    lines = ["# schema: kcross-asympt v1", "n,exact,asymptotic,ratio,implied_amplitude"]
    with mp.workprec(limits.PREC_BITS):
        for n in range(args.n_from, args.n_to + 1, args.step):
            exact = counting.structure_total(3, n)
            approx, _ = limits.asymptotic_count_k3(n)
            ratio = limits.as_mpf(exact) / approx
            lines.append(
                ",".join(
                    [
                        str(n),
                        str(exact),
                        _real(approx, p),
                        _real(ratio, p),
                        _real(limits.implied_amplitude_k3(n), p),
                    ]
                )
            )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    if args.k < 2:
        return _invalid("k must be at least 2")
    if args.n_max < 0:
        return _invalid("n-max must be nonnegative")
    if args.n_max > ORACLE_CAP:
        return _capped(f"n-max={args.n_max} exceeds the oracle cap {ORACLE_CAP}")
    lines = ["# schema: kcross-oracle-check v1", "n,oracle_total,table_total,match"]
    failed = False
    for n in range(args.n_max + 1):
        hist = oracle.histogram_by_arcs(n, args.k)
        table = counting.count_table(args.k, n)
        expected = {h: c for h, c in table.by_arcs.items() if c}
        ok = hist == expected
        failed = failed or not ok
        lines.append(
            f"{n},{sum(hist.values())},{table.total},{'match' if ok else 'MISMATCH'}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_figures(args) -> int:
    p = args.precision
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    n = 100
    with mp.workprec(limits.PREC_BITS):
        # arc-count law against the Gaussian density, k=3 then both k
        for fname, ks in [("clt_k3_n100.csv", (3,)), ("clt_k2_k3_n100.csv", (2, 3))]:
            lines = ["# schema: kcross-clt v1", "k,h,probability,gaussian_density_at_h"]
            for k in ks:
                d = limits.distribution(n, k)
                c = limits.limit_constants(k)
                mean_n = c.mu * n
                sd = mp.sqrt(c.sigma2 * n)
                for h, prob in enumerate(d.probs):
                    density = mp.npdf((h - mean_n) / sd) / sd
                    lines.append(
                        f"{k},{h},{_real(limits.as_mpf(prob), p)},{_real(density, p)}"
                    )
            (out_dir / fname).write_text("\n".join(lines) + "\n")
        # pointwise local-limit comparison, k=3
        lines = [
            "# schema: kcross-llt v1",
            "h,x,scaled_probability,gaussian_density,difference",
        ]
        for h, x, scaled, density in limits.llt_profile(n, 3):
            lines.append(
                ",".join(
                    [
                        str(h),
                        _real(x, p),
                        _real(scaled, p),
                        _real(density, p),
                        _real(scaled - density, p),
                    ]
                )
            )
        (out_dir / "llt_delta_k3_n100.csv").write_text("\n".join(lines) + "\n")
    print(f"wrote 3 files under {out_dir}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kcross",
        description="Exact k-noncrossing RNA structure counts and their Gaussian limit laws",
    )
    parser.add_argument(
        "--precision",
        type=int,
        default=DEFAULT_PRECISION,
        help="significant digits for real-valued output (default 12)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="arc-count table for one n")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--format", choices=("csv", "json"), default="csv")
    c.add_argument("--out")
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("dist", help="exact arc-count distribution with Gaussian columns")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--out")
    c.set_defaults(func=cmd_dist)

    c = sub.add_parser("verify-identity", help="coefficientwise series identity check")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--w", required=True, help="rational weight, e.g. 1 or 3/2")
    c.add_argument("--order", type=int, required=True)
    c.add_argument("--out")
    c.set_defaults(func=cmd_verify_identity)

    c = sub.add_parser("limits", help="limit constants as JSON")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--out")
    c.set_defaults(func=cmd_limits)

    c = sub.add_parser("asympt", help="exact vs asymptotic totals for k=3")
    c.add_argument("--n-from", type=int, required=True)
    c.add_argument("--n-to", type=int, required=True)
    c.add_argument("--step", type=int, default=1)
    c.add_argument("--out")
    c.set_defaults(func=cmd_asympt)

    c = sub.add_parser("oracle-check", help="fast counts vs brute-force enumeration")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n-max", type=int, required=True)
    c.add_argument("--out")
    c.set_defaults(func=cmd_oracle_check)

    c = sub.add_parser("figures", help="write the distribution datasets at n=100")
    c.add_argument("--out-dir", default=".")
    c.set_defaults(func=cmd_figures)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
