"""Command-line interface.

Subcommands map one-to-one onto the library layers: ``cf`` (periodic
continued fractions and fundamental units), ``quad`` (quadratic
indecomposables), ``biquad`` (the biquadratic enumeration pipeline),
``table`` (per-field summary rows), ``family`` (closed-form families),
``preserve`` (subfield indecomposability preservation), ``census``
(field counts by discriminant), ``crm`` and ``rankbound`` (constants for
universal-form rank estimates).

Exit codes: 0 success, 2 bad usage or invalid parameters, 3 search budget
exceeded, 4 internal consistency failure.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict

from .biquadstruct import has_extra_units
from .census import (GrowthReport, biquadratic_fields, brute_biquadratic_fields,
                     count_quadratic, growth_check, multiquadratic_groups,
                     table_row, table_rows)
from .contfrac import (cf_expand, fundamental_unit, omega,
                       totally_positive_fundamental_unit)
from .exactalg import BiquadField
from .families import FAMILY_LABELS, family, family_cone_contents, verify_family
from .indecenum import (BudgetExceeded, crm_constant, indecomposables,
                        oracle_indecomposables, preservation_check,
                        rank_upper_bound)
from .quadindec import quad_indecomposables


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if getattr(args, "json", False):
        json.dump(payload, sys.stdout, indent=2, default=str)
        sys.stdout.write("\n")
    else:
        for line in text_lines:
            print(line)


def _elem_json(e) -> dict:
    a, b, c, d = e.coords_scaled(4)
    return {"str": str(e), "quarter_coords": [a, b, c, d], "trace": str(e.trace())}


def _cmd_cf(args) -> int:
    D = args.radicand
    cf = cf_expand(D)
    eps = fundamental_unit(D)
    eps_plus = totally_positive_fundamental_unit(D)
    payload = {
        "radicand": D,
        "omega": str(omega(D)),
        "u0": cf.u0,
        "period": list(cf.period),
        "period_length": len(cf.period),
        "fundamental_unit": str(eps),
        "unit_norm": int(eps.norm()),
        "totally_positive_unit": str(eps_plus),
    }
    _emit(args, payload, [
        f"Q(sqrt({D})): omega = {payload['omega']}",
        f"  continued fraction of -omega': [{cf.u0}; "
        + ",".join(map(str, cf.period)) + "]",
        f"  fundamental unit {eps} (norm {int(eps.norm())})",
        f"  totally positive fundamental unit {eps_plus}",
    ])
    return 0


def _cmd_quad(args) -> int:
    D = args.radicand
    items = quad_indecomposables(D)
    payload = {
        "radicand": D,
        "iota": len(items),
        "elements": [str(x) for x in items],
    }
    lines = [f"Q(sqrt({D})): {len(items)} indecomposable classes"]
    lines += [f"  {x}" for x in items]
    _emit(args, payload, lines)
    return 0


def _cmd_biquad(args) -> int:
    F = BiquadField(args.m1, args.m2)
    if args.check:
        report = oracle_indecomposables(F, jobs=args.jobs, budget=args.budget)
        result = report.pipeline
    else:
        report = None
        result = indecomposables(F, jobs=args.jobs, budget=args.budget)
    info = result.info
    sub_iota = {d: len(quad_indecomposables(d)) for d in (F.p, F.q, F.r)}
    payload = {
        "p": F.p, "q": F.q, "r": F.r, "type": F.ftype, "disc": F.disc,
        "index_totally_positive": info.index_totpos,
        "index_unit_squares": info.index_squares,
        "extra_units": has_extra_units(info),
        "subfield_iotas": {str(d): sub_iota[d] for d in (F.p, F.q, F.r)},
        "iota": result.iota,
        "classes": [_elem_json(x) for x in result.reps],
    }
    lines = [
        f"K = Q(sqrt({F.p}), sqrt({F.q})): type {F.ftype}, disc {F.disc}",
        f"  [units : totally positive] = {info.index_totpos}, "
        f"[totally positive : squares] = {info.index_squares}",
        f"  subfield classes: " + ", ".join(
            f"iota({d}) = {sub_iota[d]}" for d in (F.p, F.q, F.r)),
        f"  {result.iota} indecomposable classes:",
    ]
    lines += [f"    {x}" for x in result.reps]
    if report is not None:
        payload["oracle"] = {
            "matched": report.matched,
            "certified": report.certified,
            "trace_cap": str(report.trace_cap),
            "oracle_classes": report.oracle_class_count,
        }
        lines.append(
            f"  oracle scan (trace cap {report.trace_cap}, "
            f"certified={report.certified}): "
            + ("match" if report.matched else "MISMATCH"))
    _emit(args, payload, lines)
    return 0 if report is None or report.matched else 4


def _cmd_table(args) -> int:
    if args.m1 is not None and args.m2 is not None:
        rows = [table_row(args.m1, args.m2, jobs=args.jobs, budget=args.budget)]
    else:
        rows = table_rows(args.max_disc, jobs=args.jobs, budget=args.budget)
    if args.csv:
        w = csv.writer(sys.stdout)
        w.writerow(["p", "q", "r", "disc", "iota_p", "iota_q", "iota_r",
                    "iota", "ratio", "extra_units"])
        for row in rows:
            w.writerow([row.p, row.q, row.r, row.disc, row.iota_p, row.iota_q,
                        row.iota_r, row.iota, row.ratio, int(row.extra_units)])
        return 0
    payload = {"rows": [asdict(r) for r in rows]}
    header = "  (p,   q,   r)  i_p i_q i_r  iota  ln(iota)/ln((4*rad)^2)"
    _emit(args, payload, [header] + [r.describe() for r in rows])
    return 0


def _cmd_family(args) -> int:
    if args.verify:
        report = verify_family(args.label, args.n, jobs=args.jobs,
                               budget=args.budget)
        fam = report.family
    else:
        report = None
        fam = family(args.label, args.n)
    F = fam.field
    payload = {
        "label": fam.label, "n": fam.n,
        "p": F.p, "q": F.q, "r": F.r, "disc": F.disc,
        "iota": fam.iota,
        "units": [str(e) for e in fam.eps],
        "elements": [_elem_json(x) for x in fam.indec],
    }
    lines = [
        f"family {fam.label}, n = {fam.n}: K = Q(sqrt({F.p}), sqrt({F.q})), "
        f"disc {F.disc}",
        f"  subfield units: " + ", ".join(str(e) for e in fam.eps),
        f"  {fam.iota} indecomposable classes (closed form)",
    ]
    if fam.label == "1":
        payload["kubota_deltas"] = list(fam.kubota_deltas())
        payload["kubota_accepted"] = [list(t) for t in fam.kubota_accepted()]
        payload["cone_contents"] = list(family_cone_contents(fam.n))
        lines.append(f"  square indicators {payload['kubota_deltas']}, "
                     f"square exponent patterns {payload['kubota_accepted']}")
    if report is not None:
        payload["verified"] = report.ok
        lines.append("  pipeline comparison: " + report.describe())
    _emit(args, payload, lines)
    return 0 if report is None or report.ok else 4


def _cmd_preserve(args) -> int:
    F = BiquadField(args.m1, args.m2)
    subfields = [args.subfield] if args.subfield else [F.p, F.q]
    result = indecomposables(F, jobs=args.jobs, budget=args.budget)
    payload = {"p": F.p, "q": F.q, "r": F.r, "subfields": {}}
    lines = [f"K = Q(sqrt({F.p}), sqrt({F.q}))"]
    for d in subfields:
        rep = preservation_check(F, d, result=result, jobs=args.jobs)
        payload["subfields"][str(d)] = {
            "preserved": len(rep.preserved),
            "failures": [
                {"element": str(alpha), "summands": [str(w[0]), str(w[1])]}
                for alpha, w in rep.failures
            ],
        }
        if rep.failures:
            lines.append(f"  sqrt({d}): {len(rep.failures)} element(s) split in K:")
            for alpha, (beta, gamma) in rep.failures:
                lines.append(f"    {alpha} = ({beta}) + ({gamma})")
        else:
            lines.append(f"  sqrt({d}): all {len(rep.preserved)} classes stay "
                         f"indecomposable")
    _emit(args, payload, lines)
    return 0


def _cmd_census(args) -> int:
    X = args.max_disc
    if args.growth:
        report: GrowthReport = growth_check()
        payload = {"exponents": list(report.exponents),
                   "counts": list(report.counts),
                   "within_factor_3": report.within_factor_3}
        _emit(args, payload, [report.describe()])
        return 0
    if args.rank == 1:
        n = count_quadratic(X)
        _emit(args, {"rank": 1, "max_disc": X, "count": n},
              [f"{n} real quadratic fields with disc <= {X}"])
        return 0
    if args.rank == 2:
        fields = biquadratic_fields(X)
        payload = {
            "rank": 2, "max_disc": X, "count": len(fields),
            "fields": [{"p": F.p, "q": F.q, "r": F.r, "disc": F.disc,
                        "type": F.ftype} for F in fields],
        }
        lines = [f"{len(fields)} biquadratic fields with disc <= {X}"]
        lines += [f"  disc {F.disc:>8}: ({F.p}, {F.q}, {F.r}) type {F.ftype}"
                  for F in fields]
        if args.brute_check:
            brute = brute_biquadratic_fields(X)
            ok = brute == [(F.p, F.q, F.r) for F in fields]
            payload["brute_check"] = ok
            lines.append("pair-enumeration cross-check: "
                         + ("match" if ok else "MISMATCH"))
            if not ok:
                _emit(args, payload, lines)
                return 4
        _emit(args, payload, lines)
        return 0
    groups = multiquadratic_groups(args.rank, X)
    payload = {"rank": args.rank, "max_disc": X, "count": len(groups),
               "fields": [list(g) for g in groups]}
    lines = [f"{len(groups)} degree-2^{args.rank} fields with disc <= {X}"]
    lines += ["  radicands " + ", ".join(map(str, g)) for g in groups]
    _emit(args, payload, lines)
    return 0


def _cmd_crm(args) -> int:
    c = crm_constant(args.rank, args.degree_half)
    _emit(args, {"rank": args.rank, "m": args.degree_half, "constant": c},
          [f"C({args.rank}, {args.degree_half}) = {c}"])
    return 0


def _cmd_rankbound(args) -> int:
    if args.family is not None:
        fam = family(args.family, args.n)
        result = indecomposables(fam.field, jobs=args.jobs, budget=args.budget)
        label = f"family {fam.label} n={fam.n}"
    elif args.m1 is not None and args.m2 is not None:
        result = indecomposables(BiquadField(args.m1, args.m2),
                                 jobs=args.jobs, budget=args.budget)
        label = f"Q(sqrt({args.m1}), sqrt({args.m2}))"
    else:
        raise ValueError("rankbound needs either two radicands or "
                         "--family LABEL --n N")
    bound = rank_upper_bound(result.info.index_squares, result.iota)
    payload = {"field": label, "iota": result.iota,
               "index_unit_squares": result.info.index_squares,
               "rank_upper_bound": bound}
    _emit(args, payload,
          [f"{label}: iota = {result.iota}, "
           f"[totally positive : squares] = {result.info.index_squares}, "
           f"universal-form rank bound {bound}"])
    return 0


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="totpos",
        description="Indecomposable totally positive integers in real "
                    "quadratic and biquadratic fields.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, jobs=True, budget=True):
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")
        if jobs:
            p.add_argument("--jobs", type=int, default=1,
                           help="worker processes for heavy scans")
        if budget:
            p.add_argument("--budget", type=int, default=None,
                           help="abort if a search pool exceeds this size")

    p = sub.add_parser("cf", help="periodic continued fraction and units")
    p.add_argument("radicand", type=int)
    common(p, jobs=False, budget=False)
    p.set_defaults(func=_cmd_cf)

    p = sub.add_parser("quad", help="quadratic indecomposables")
    p.add_argument("radicand", type=int)
    common(p, jobs=False, budget=False)
    p.set_defaults(func=_cmd_quad)

    p = sub.add_parser("biquad", help="biquadratic indecomposable classes")
    p.add_argument("m1", type=int)
    p.add_argument("m2", type=int)
    p.add_argument("--check", action="store_true",
                   help="also run the independent trace-window scan")
    common(p)
    p.set_defaults(func=_cmd_biquad)

    p = sub.add_parser("table", help="summary rows (counts and log-ratio)")
    p.add_argument("m1", type=int, nargs="?", default=None)
    p.add_argument("m2", type=int, nargs="?", default=None)
    p.add_argument("--max-disc", type=int, default=10_000)
    p.add_argument("--csv", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("family", help="closed-form family data")
    p.add_argument("label", choices=FAMILY_LABELS)
    p.add_argument("n", type=int)
    p.add_argument("--verify", action="store_true",
                   help="compare against the generic pipeline")
    common(p)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("preserve",
                       help="indecomposability preservation from subfields")
    p.add_argument("m1", type=int)
    p.add_argument("m2", type=int)
    p.add_argument("--subfield", type=int, default=None,
                   help="check a single quadratic radicand")
    common(p)
    p.set_defaults(func=_cmd_preserve)

    p = sub.add_parser("census", help="count fields by discriminant")
    p.add_argument("--max-disc", type=int, default=10_000)
    p.add_argument("--rank", type=int, default=2,
                   help="number of independent square roots")
    p.add_argument("--brute-check", action="store_true",
                   help="cross-check with pair enumeration")
    p.add_argument("--growth", action="store_true",
                   help="normalised growth across 10^4, 10^5, 10^6")
    common(p, jobs=False, budget=False)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("crm", help="universal-form constant C(rank, m)")
    p.add_argument("rank", type=int)
    p.add_argument("degree_half", type=int,
                   help="m where the field degree is 2m")
    common(p, jobs=False, budget=False)
    p.set_defaults(func=_cmd_crm)

    p = sub.add_parser("rankbound",
                       help="upper bound for ranks of universal forms")
    p.add_argument("m1", type=int, nargs="?", default=None)
    p.add_argument("m2", type=int, nargs="?", default=None)
    p.add_argument("--family", choices=FAMILY_LABELS, default=None)
    p.add_argument("--n", type=int, default=None)
    common(p)
    p.set_defaults(func=_cmd_rankbound)

    return top


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AssertionError, ArithmeticError) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
