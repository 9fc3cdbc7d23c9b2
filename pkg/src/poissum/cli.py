"""Command-line surface: verify identities, evaluate special functions,
dump exact number tables, and drive the transform operators.

Exit codes: 0 success (every outcome matched its expectation; strict mode
requires every outcome to pass outright), 1 verification mismatch, 2 usage
or domain error.  Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog
from .descriptors import builtin, builtin_names
from .exact import NUMBER_CAP, bernoulli, eta_negative, eulerian_row, q_number
from .numerics import SumOptions
from .specfun import (
    agm,
    catalan,
    elliptic_from_modulus,
    lerch_phi,
    li3,
    li_negative_order,
    modulus_from_ratio,
    zeta_int,
)
from .transforms import (
    lemma1_integral,
    lemma1_series,
    lemma2_integral,
    lemma2_series,
    theorem1_sides,
    theorem2_sides,
)

USAGE_ERROR = 2


def _real(x: float) -> str:
    return format(x, ".15g")


def _parse_param(text: str) -> tuple[str, float]:
    if "=" not in text:
        raise ValueError(f"expected NAME=VALUE, got {text!r}")
    name, raw = text.split("=", 1)
    try:
        value: float = int(raw)
    except ValueError:
        value = float(raw)
    return name.strip(), value


def _outcome_payload(o: catalog.VerificationOutcome) -> dict:
    return {
        "identity": o.identity_id,
        "variant": o.variant_name,
        "params": o.params,
        "lhs": o.lhs,
        "rhs": o.rhs,
        "abs_residual": o.abs_residual,
        "rel_residual": o.rel_residual,
        "status": o.status,
        "expected_status": o.expected_status,
        "elapsed_ms": o.elapsed_ms,
        "message": o.message,
    }


def _print_outcomes(outcomes, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps([_outcome_payload(o) for o in outcomes], indent=2) + "\n")
        return
    if fmt == "csv":
        out.write(
            "identity,variant,params,lhs,rhs,abs_residual,rel_residual,"
            "status,expected_status,elapsed_ms\n"
        )
        for o in outcomes:
            params = ";".join(f"{k}={v}" for k, v in sorted(o.params.items()))
            cells = [
                o.identity_id,
                o.variant_name,
                params,
                "" if o.lhs is None else repr(o.lhs),
                "" if o.rhs is None else repr(o.rhs),
                "" if o.abs_residual is None else repr(o.abs_residual),
                "" if o.rel_residual is None else repr(o.rel_residual),
                o.status,
                o.expected_status,
                format(o.elapsed_ms, ".3f"),
            ]
            out.write(",".join(cells) + "\n")
        return
    for o in outcomes:
        params = _fmt_params_text(o.params)
        mark = "ok" if o.matches_expectation() else "UNEXPECTED"
        lhs = "-" if o.lhs is None else _real(o.lhs)
        rhs = "-" if o.rhs is None else _real(o.rhs)
        res = "-" if o.abs_residual is None else format(o.abs_residual, ".3e")
        line = (
            f"{o.identity_id:>20s} {o.variant_name:<20s} {params:<22s}"
            f" lhs={lhs:<22s} rhs={rhs:<22s} |res|={res:<10s}"
            f" {o.status}/{o.expected_status} [{mark}]"
        )
        if o.message:
            line += f"  ({o.message})"
        out.write(line + "\n")


def _fmt_params_text(params: dict) -> str:
    if not params:
        return "-"
    return ",".join(f"{k}={v:g}" if isinstance(v, float) else f"{k}={v}" for k, v in sorted(params.items()))


def cmd_verify(args) -> int:
    try:
        overrides = dict(_parse_param(p) for p in args.param or [])
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        if args.id:
            outcomes = []
            for identity_id in args.id:
                rec = catalog.get_identity(identity_id)
                variants = [rec.variant(args.variant)] if args.variant else rec.variants
                for var in variants:
                    outcomes.append(
                        catalog.verify(
                            rec.id,
                            var.name,
                            overrides,
                            abs_tol=args.tol,
                            rel_tol=args.rel_tol,
                        )
                    )
        else:
            if overrides:
                print("error: --param needs --id", file=sys.stderr)
                return USAGE_ERROR
            outcomes = catalog.verify_all(
                abs_tol=args.tol,
                rel_tol=args.rel_tol,
                parallelism=args.parallel,
                variant_filter=args.variant,
            )
    except (KeyError, ValueError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return USAGE_ERROR
    _print_outcomes(outcomes, args.format, sys.stdout)
    if args.ledger is not None:
        records = catalog.build_ledger(outcomes)
        if args.ledger.endswith(".json"):
            text = catalog.render_ledger_json(records)
        else:
            text = catalog.render_ledger_markdown(records)
        with open(args.ledger, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {len(records)} ledger records to {args.ledger}", file=sys.stderr)
    if args.strict:
        ok = all(o.status == "pass" for o in outcomes)
    else:
        ok = all(o.matches_expectation() for o in outcomes)
    return 0 if ok else 1


def cmd_list(args) -> int:
    records = catalog.list_identities()
    if args.format == "json":
        payload = [
            {
                "id": rec.id,
                "title": rec.title,
                "source": rec.source,
                "params": [
                    {"name": s.name, "default": s.default, "grid": list(s.grid), "domain": s.domain}
                    for s in rec.params
                ],
                "variants": [
                    {"name": v.name, "expected_status": v.expected_status, "note": v.note}
                    for v in rec.variants
                ],
                "notes": rec.notes,
            }
            for rec in records
        ]
        print(json.dumps(payload, indent=2))
        return 0
    for rec in records:
        defaults = _fmt_params_text(rec.defaults())
        variants = ", ".join(f"{v.name}({v.expected_status})" for v in rec.variants)
        print(f"{rec.id:>20s}  {rec.title}")
        print(f"{'':>20s}  source: {rec.source}")
        print(f"{'':>20s}  variants: {variants}; defaults: {defaults}")
        if rec.notes:
            print(f"{'':>20s}  note: {rec.notes}")
    return 0


_EVAL_ARITY = {
    "bernoulli": 1,
    "qnumber": 1,
    "eta-neg": 1,
    "eulerian": 2,
    "zeta": 1,
    "catalan": 0,
    "li3": 1,
    "lerch": 3,
    "K": 1,
    "E": 1,
    "modulus-from-ratio": 1,
    "li-neg": 2,
    "agm": 2,
}


def cmd_eval(args) -> int:
    fn = args.fn
    if fn not in _EVAL_ARITY:
        print(
            f"error: unknown function {fn!r}; choose from {', '.join(sorted(_EVAL_ARITY))}",
            file=sys.stderr,
        )
        return USAGE_ERROR
    if len(args.args) != _EVAL_ARITY[fn]:
        print(
            f"error: {fn} takes {_EVAL_ARITY[fn]} argument(s), got {len(args.args)}",
            file=sys.stderr,
        )
        return USAGE_ERROR
    try:
        if fn == "bernoulli":
            print(bernoulli(int(args.args[0])))
        elif fn == "qnumber":
            print(q_number(int(args.args[0])))
        elif fn == "eta-neg":
            print(eta_negative(int(args.args[0])))
        elif fn == "eulerian":
            row = eulerian_row(int(args.args[0]))
            k = int(args.args[1])
            if not 0 <= k < len(row):
                raise ValueError(f"k={k} outside 0..{len(row) - 1}")
            print(row[k])
        elif fn == "zeta":
            print(_real(zeta_int(int(args.args[0]))))
        elif fn == "catalan":
            print(_real(catalan()))
        elif fn == "li3":
            print(_real(li3(float(args.args[0]))))
        elif fn == "lerch":
            z, s, a = float(args.args[0]), int(args.args[1]), float(args.args[2])
            print(_real(lerch_phi(z, s, a)))
        elif fn == "K":
            print(_real(elliptic_from_modulus(float(args.args[0])).K))
        elif fn == "E":
            print(_real(elliptic_from_modulus(float(args.args[0])).E))
        elif fn == "modulus-from-ratio":
            pair = modulus_from_ratio(float(args.args[0]))
            print(
                f"k = {_real(pair.modulus_k)}; k' = {_real(pair.complementary_k)};"
                f" K = {_real(pair.K)}; E = {_real(pair.E)};"
                f" K' = {_real(pair.K_prime)}; nome = {_real(pair.nome_q)}"
            )
        elif fn == "li-neg":
            print(_real(li_negative_order(int(args.args[0]), float(args.args[1]))))
        elif fn == "agm":
            print(_real(agm(float(args.args[0]), float(args.args[1]))))
    except (ValueError, OverflowError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    return 0


def cmd_table(args) -> int:
    n_max = args.max
    try:
        if args.table == "q":
            rows = [(n, q_number(n)) for n in range(n_max + 1)]
        elif args.table == "bernoulli":
            rows = [(n, bernoulli(n)) for n in range(n_max + 1)]
        else:
            rows = [
                (n, k, eulerian_row(n)[k])
                for n in range(1, n_max + 1)
                for k in range(n)
            ]
    except (OverflowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.format == "csv":
        header = "n,k,value" if args.table == "eulerian" else "n,value"
        print(header)
        for row in rows:
            print(",".join(str(c) for c in row))
    else:
        for row in rows:
            print("\t".join(str(c) for c in row))
    return 0


def cmd_transform(args) -> int:
    try:
        descriptor = builtin(args.function)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return USAGE_ERROR
    opts = SumOptions(rel_tol=args.rel_tol, abs_tol=args.tol)
    try:
        if args.op in ("theorem1", "theorem2"):
            sides = theorem1_sides if args.op == "theorem1" else theorem2_sides
            report = sides(descriptor, args.a, opts)
            print(f"lhs = {_real(report.lhs.value)} (tail {report.lhs.tail_estimate:.2e})")
            print(f"rhs = {_real(report.rhs.value)} (tail {report.rhs.tail_estimate:.2e})")
            print(f"abs residual = {report.abs_residual:.3e}")
            print(f"rel residual = {report.rel_residual:.3e}")
            for w in report.warnings:
                print(f"warning: {w}")
        else:
            integral = lemma1_integral if args.op == "lemma1" else lemma2_integral
            series = lemma1_series if args.op == "lemma1" else lemma2_series
            q = integral(descriptor, args.gamma, opts)
            s = series(descriptor, args.gamma, opts)
            print(f"integral = {_real(q.value)} (error estimate {q.error_estimate:.2e})")
            print(f"series   = {_real(s.value)} (tail {s.tail_estimate:.2e})")
            print(f"abs residual = {abs(q.value - s.value):.3e}")
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poissum",
        description="verify hyperbolic series identities and evaluate the special functions behind them",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run catalog verifications")
    p.add_argument("--id", action="append", help="identity id (repeatable); omit to run the full grid")
    p.add_argument("--variant", help="restrict to one variant name")
    p.add_argument("--param", action="append", metavar="NAME=VALUE", help="parameter override (needs --id)")
    p.add_argument("--tol", type=float, default=catalog.DEFAULT_ABS_TOL, help="absolute tolerance")
    p.add_argument("--rel-tol", type=float, default=catalog.DEFAULT_REL_TOL, help="relative tolerance")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--parallel", type=int, default=1, help="worker count for full runs")
    p.add_argument("--strict", action="store_true", help="require status=pass everywhere, expected failures included")
    p.add_argument("--ledger", metavar="PATH", help="write the discrepancy ledger (.md or .json)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("list", help="list catalog entries")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("eval", help="evaluate a special function")
    p.add_argument("fn", metavar="FN")
    p.add_argument("args", nargs="*", metavar="ARG")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", help="dump an exact number table")
    p.add_argument("table", choices=("q", "bernoulli", "eulerian"))
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("transform", help="evaluate both sides of a transform identity")
    p.add_argument("op", choices=("theorem1", "theorem2", "lemma1", "lemma2"))
    p.add_argument("--function", required=True, help=f"builtin descriptor: {', '.join(builtin_names())}")
    p.add_argument("--a", type=float, default=1.0, help="lattice spacing (theorems)")
    p.add_argument("--gamma", type=float, default=1.0, help="frequency (lemmas)")
    p.add_argument("--tol", type=float, default=1e-14)
    p.add_argument("--rel-tol", type=float, default=1e-12)
    p.set_defaults(func=cmd_transform)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors, which matches the contract
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
