"""Command line frontend.

Subcommands: bounds, sweep-theta, bsc, pairwise, exponent, verify. Outputs
are machine readable (JSON, or CSV where the schema is tabular); every
probability is emitted as an exact rational string, with decimal
approximations in display-only fields. Exit codes: 0 when all checked
inequalities hold, 1 when a check fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bounds import (
    asymptotic_pv_bound,
    bound_report,
    generalized_pv_bound,
    map_error_probability,
)
from .bsc import bsc_joint, pairwise_bound, theorem1_gap_check, tie_report
from .codes import BlockCode, BscParams, parse_code_file
from .errors import AlphaTooLarge, PvlabError
from .exponent import (
    FamilySpec,
    exponent_series,
    rate_gap_series,
    series_to_csv,
    zero_rate_exponent_reference,
)
from .joint import JointDistribution, dump_distribution, load_distribution
from .rationals import format_rational, parse_probability, parse_rational


def _frac(v: Fraction) -> str:
    return format_rational(v)


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_probability(text)
    except PvlabError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_list_arg(text: str) -> list[Fraction]:
    try:
        return [parse_probability(part) for part in text.split(",")]
    except PvlabError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _theta_list_arg(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        try:
            t = int(part)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad exponent {part!r}") from None
        if t < 1:
            raise argparse.ArgumentTypeError("exponents must be >= 1")
        out.append(t)
    return out


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj: object) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_bounds(args: argparse.Namespace) -> int:
    joint = load_distribution(args.dist)
    rep = bound_report(joint)
    obj: dict = {
        "p_e": _frac(rep.p_e),
        "asymptotic_pv": _frac(rep.asymptotic_pv),
        "vh": {"value": _frac(rep.vh_value), "gamma_star": _frac(rep.vh_gamma_star)},
        "gvh": {
            "value": _frac(rep.gvh_value),
            "gamma_star": _frac(rep.gvh_gamma_star),
            "q_star": {
                joint.y_alphabet[yi]: _frac(q) for yi, q in sorted(rep.gvh_q_star.items())
            },
        },
    }
    checks = {
        "asymptotic_le_pe": rep.asymptotic_pv <= rep.p_e,
        "vh_le_pe": rep.vh_value <= rep.p_e,
        "gvh_eq_pe": rep.gvh_value == rep.p_e,
    }
    if args.alpha is not None:
        thetas = args.theta if args.theta is not None else [1]
        rows = []
        ok = True
        for alpha in args.alpha:
            for theta in thetas:
                value = generalized_pv_bound(joint, theta, alpha)
                ok = ok and value <= rep.p_e
                rows.append(
                    {"theta": theta, "alpha": _frac(alpha), "value": _frac(value)}
                )
        obj["generalized_pv"] = rows
        checks["generalized_le_pe"] = ok
    elif args.theta is not None:
        raise PvlabError("--theta needs --alpha to evaluate the tilted bound")
    obj["checks"] = checks
    obj["approx"] = {
        "p_e": float(rep.p_e),
        "asymptotic_pv": float(rep.asymptotic_pv),
        "vh_value": float(rep.vh_value),
        "gvh_value": float(rep.gvh_value),
    }
    _emit(_json_text(obj), args.out)
    return 0 if all(checks.values()) else 1


def cmd_sweep_theta(args: argparse.Namespace) -> int:
    joint = load_distribution(args.dist)
    alpha = args.alpha
    if alpha * joint.support_size >= 1:
        raise AlphaTooLarge(alpha, joint.support_size)
    thetas = list(range(1, args.theta_max + 1))
    bounds = [generalized_pv_bound(joint, t, alpha) for t in thetas]
    asym = asymptotic_pv_bound(joint)
    if args.format == "csv":
        lines = ["theta,bound"]
        lines += [f"{t},{_frac(b)}" for t, b in zip(thetas, bounds)]
        lines.append(f"asymptotic,{_frac(asym)}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        obj = {
            "alpha": _frac(alpha),
            "rows": [
                {"theta": t, "bound": _frac(b), "bound_approx": float(b)}
                for t, b in zip(thetas, bounds)
            ],
            "asymptotic": _frac(asym),
            "asymptotic_approx": float(asym),
        }
        _emit(_json_text(obj), args.out)
    if args.plot:
        from .plots import render_theta_sweep

        render_theta_sweep(args.plot, joint, alpha, thetas, bounds, asym)
    return 0


def _tie_report_obj(code: BlockCode, params: BscParams) -> tuple[dict, bool]:
    rep = tie_report(code, params)
    gap = theorem1_gap_check(code, params, report=rep)
    sandwich = rep.b_n <= rep.a_n <= rep.b_n + rep.delta_n
    obj = {
        "n": rep.n,
        "M": rep.m,
        "p": _frac(rep.p),
        "a_n": _frac(rep.a_n),
        "b_n": _frac(rep.b_n),
        "delta_n": _frac(rep.delta_n),
        "per_codeword": [
            {"word": code.word_str(i), "tie": _frac(t), "no_tie": _frac(l)}
            for i, (t, l) in enumerate(rep.per_codeword)
        ],
        "checks": {
            "sandwich_holds": sandwich,
            "bd_holds": gap.holds,
            "bd_rhs": _frac(gap.rhs),
            "bd_slack": _frac(gap.slack),
        },
        "approx": {
            "a_n": float(rep.a_n),
            "b_n": float(rep.b_n),
            "delta_n": float(rep.delta_n),
        },
    }
    return obj, sandwich and gap.holds


def cmd_bsc(args: argparse.Namespace) -> int:
    code = parse_code_file(args.code)
    params = BscParams(args.p)
    obj, ok = _tie_report_obj(code, params)
    if args.export_joint:
        dump_distribution(bsc_joint(code, params), args.export_joint)
    _emit(_json_text(obj), args.out)
    return 0 if ok else 1


def cmd_pairwise(args: argparse.Namespace) -> int:
    params = BscParams(args.p)
    pb = pairwise_bound(args.n, args.d, params)
    checks = {"ratio_holds": pb.ratio_holds(), "ordering_holds": pb.ordering_holds()}
    obj = {
        "n": pb.n,
        "d": pb.d,
        "p": _frac(pb.p),
        "b_prob": _frac(pb.b_prob),
        "omega_exact": _frac(pb.omega_exact),
        "omega_lower": _frac(pb.omega_lower),
        "checks": checks,
        "approx": {
            "b_prob": float(pb.b_prob),
            "omega_exact": float(pb.omega_exact),
            "omega_lower": float(pb.omega_lower),
        },
    }
    _emit(_json_text(obj), args.out)
    return 0 if all(checks.values()) else 1


def _series_row_obj(row) -> dict:
    return {
        "n": row.n,
        "M": row.m,
        "a_n": _frac(row.a_n),
        "b_n": _frac(row.b_n),
        "delta_n": _frac(row.delta_n),
        "rate_a": row.rate_a,
        "rate_b": row.rate_b,
        "rate_delta": None if row.rate_delta == float("inf") else row.rate_delta,
        "gap": row.gap,
        "rate_cap": row.rate_cap,
    }


def cmd_exponent(args: argparse.Namespace) -> int:
    spec = FamilySpec(kind=args.family, m=args.m, seed=args.seed)
    params = BscParams(args.p)
    grid = list(range(args.n_min, args.n_max + 1, args.n_step))
    series = exponent_series(spec, params, grid)
    summary_rec = rate_gap_series(series)
    summary = {
        "max_gap": summary_rec.max_gap,
        "max_rate_cap": summary_rec.max_rate_cap,
        "theorem1_satisfied": summary_rec.theorem1_satisfied,
        "window_n_min": summary_rec.window_n_min,
        "e0_reference": zero_rate_exponent_reference(params),
    }
    if args.format == "csv":
        _emit(series_to_csv(series), args.out)
        # keep the data stream pure CSV: summary rides on stdout only when
        # the table went to a file
        stream = sys.stdout if args.out else sys.stderr
        stream.write(_json_text(summary))
    else:
        obj = {
            "family": series.family,
            "p": _frac(series.p),
            "rows": [_series_row_obj(r) for r in series.rows],
            "summary": summary,
        }
        _emit(_json_text(obj), args.out)
    if args.plot:
        from .plots import render_exponent_series

        render_exponent_series(args.plot, series, summary["e0_reference"])
    return 0 if summary_rec.theorem1_satisfied else 1


def cmd_verify(args: argparse.Namespace) -> int:
    code = parse_code_file(args.code)
    params = BscParams(args.p)
    bsc_obj, bsc_ok = _tie_report_obj(code, params)
    pair_rows = []
    all_pairs_ok = True
    for (i, j), d in sorted(code.pair_distances().items()):
        pb = pairwise_bound(code.n, d, params)
        ok = pb.ratio_holds() and pb.ordering_holds()
        all_pairs_ok = all_pairs_ok and ok
        pair_rows.append(
            {
                "i": i,
                "j": j,
                "d": d,
                "b_prob": _frac(pb.b_prob),
                "omega_exact": _frac(pb.omega_exact),
                "omega_lower": _frac(pb.omega_lower),
                "ratio_holds": pb.ratio_holds(),
                "ordering_holds": pb.ordering_holds(),
            }
        )
    ok = bsc_ok and all_pairs_ok
    obj = {"bsc": bsc_obj, "pairs": pair_rows, "all_hold": ok}
    _emit(_json_text(obj), args.out)
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pvlab",
        description="exact error-probability lower bounds and tie analysis",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_bounds = sub.add_parser("bounds", help="all bounds for a distribution file")
    p_bounds.add_argument("--dist", required=True, metavar="PATH")
    p_bounds.add_argument("--theta", type=_theta_list_arg, metavar="INT[,INT...]")
    p_bounds.add_argument("--alpha", type=_rational_list_arg, metavar="RAT[,RAT...]")
    p_bounds.add_argument("--out", metavar="PATH")
    p_bounds.set_defaults(func=cmd_bounds, format="json")

    p_sweep = sub.add_parser("sweep-theta", help="tilted bound for theta = 1..max")
    p_sweep.add_argument("--dist", required=True, metavar="PATH")
    p_sweep.add_argument("--alpha", type=_rational_arg, required=True, metavar="RAT")
    p_sweep.add_argument("--theta-max", type=int, required=True, metavar="INT")
    p_sweep.add_argument("--out", metavar="PATH")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--plot", metavar="PATH")
    p_sweep.set_defaults(func=cmd_sweep_theta)

    p_bsc = sub.add_parser("bsc", help="tie decomposition for a code file")
    p_bsc.add_argument("--code", required=True, metavar="PATH")
    p_bsc.add_argument("--p", type=_rational_arg, required=True, metavar="RAT")
    p_bsc.add_argument("--out", metavar="PATH")
    p_bsc.add_argument("--export-joint", metavar="PATH")
    p_bsc.set_defaults(func=cmd_bsc, format="json")

    p_pair = sub.add_parser("pairwise", help="tie and dominated-output values for one pair")
    p_pair.add_argument("--n", type=int, required=True)
    p_pair.add_argument("--d", type=int, required=True)
    p_pair.add_argument("--p", type=_rational_arg, required=True, metavar="RAT")
    p_pair.add_argument("--out", metavar="PATH")
    p_pair.set_defaults(func=cmd_pairwise, format="json")

    p_exp = sub.add_parser("exponent", help="blocklength sweep over a code family")
    p_exp.add_argument("--family", choices=("antipodal", "random"), required=True)
    p_exp.add_argument("--p", type=_rational_arg, required=True, metavar="RAT")
    p_exp.add_argument("--m", type=int)
    p_exp.add_argument("--seed", type=int)
    p_exp.add_argument("--n-min", type=int, required=True)
    p_exp.add_argument("--n-max", type=int, required=True)
    p_exp.add_argument("--n-step", type=int, default=1)
    p_exp.add_argument("--out", metavar="PATH")
    p_exp.add_argument("--format", choices=("csv", "json"), default="csv")
    p_exp.add_argument("--plot", metavar="PATH")
    p_exp.set_defaults(func=cmd_exponent)

    p_ver = sub.add_parser("verify", help="bsc checks plus per-pair checks")
    p_ver.add_argument("--code", required=True, metavar="PATH")
    p_ver.add_argument("--p", type=_rational_arg, required=True, metavar="RAT")
    p_ver.add_argument("--out", metavar="PATH")
    p_ver.set_defaults(func=cmd_verify, format="json")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (PvlabError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())
