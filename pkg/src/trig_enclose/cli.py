"""Command-line interface: eval, remainder, constants, verify, sums, table, limit, compare."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from mpmath import mp, mpf

from . import best_constants as bc
from . import exact_numbers as en
from . import inequality_verifier as iv_
from . import remainder_series as rs
from . import zeta_sums as zs
from .errors import BudgetExceeded, DomainError, RejectedInput
from .intervals import Enclosure, to_decimal, workprec

EXIT_OK, EXIT_VIOLATED, EXIT_DOMAIN, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3, 4
ENV_PRECISION = "TRIG_ENCLOSE_PRECISION"
DEFAULT_ORDERS = {"tan": 1, "tanh": 1, "sec": 1, "cot": 1, "csc": 1, "sec2tan": 2,
                  "wilker": 1, "wilker-alphabeta": 1, "huygens": 1, "sec-remainder": 1,
                  "wilker-q": 1, "huygens-varrho": 1}


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------- serialization

class Out:
    """Decimal-string serializer bound to a precision."""

    def __init__(self, prec: int):
        self.prec = prec

    def num(self, x, rounding: str = "n") -> str | None:
        if x is None:
            return None
        if not isinstance(x, mpf):
            x = mpf(x)
        # single directed rounding straight from the full-precision value
        y = mp.fadd(x, 0, prec=self.prec, rounding=rounding)
        return to_decimal(y, self.prec)

    def enc(self, e: Enclosure) -> dict:
        return {"lo": self.num(e.lo, "d"), "hi": self.num(e.hi, "u")}


def _frac(q: Fraction) -> str:
    return str(Fraction(q))


def _constant(o: Out, c: bc.Constant) -> dict:
    d = {"exact": str(c.form) if c.form is not None else None,
         "exactness": c.exactness,
         "value": o.num(c.enclosure.mid),
         "enclosure": o.enc(c.enclosure)}
    if c.tail is not None:
        d["tail"] = {"terms": c.tail.terms, "bound": o.num(c.tail.bound, "u")}
    return d


def _flatten(d, prefix=""):
    out = {}
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        elif isinstance(v, list):
            out[key] = ";".join(str(x) for x in v)
        else:
            out[key] = v
    return out


def render(records, fmt: str) -> str:
    """records: a dict or a list of dicts."""
    rows = records if isinstance(records, list) else [records]
    if fmt == "json":
        return json.dumps(records, indent=2, ensure_ascii=False) + "\n"
    flat = [_flatten(r) for r in rows]
    if fmt == "csv":
        cols = []
        for r in flat:
            cols += [k for k in r if k not in cols]
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(flat)
        return buf.getvalue()
    blocks = []
    for r in flat:
        width = max((len(k) for k in r), default=0)
        blocks.append("\n".join(f"{k.ljust(width)}  {'' if v is None else v}" for k, v in r.items()))
    return "\n\n".join(blocks) + "\n"


# ---------------------------------------------------------------- commands

def cmd_eval(args, o: Out):
    N = DEFAULT_ORDERS[args.function] if args.order is None else args.order
    r = rs.eval_with_enclosure(args.function, N, args.at, args.precision, args.tolerance)
    return {"function": r.function_id, "order": r.N, "t": o.num(r.t),
            "partial_sum": o.num(r.partial_sum), "remainder": o.enc(r.remainder),
            "value": o.enc(r.value), "terms_used": r.terms_used,
            "tail_bound": o.num(r.tail.bound, "u"), "precision": args.precision}, EXIT_OK


def cmd_remainder(args, o: Out):
    N = DEFAULT_ORDERS[args.function] if args.order is None else args.order
    e = rs.remainder(args.function, N, args.at, args.precision, args.tolerance)
    return {"function": args.function, "order": N, "t": o.num(mpf(args.at)),
            "remainder": o.enc(e), "precision": args.precision}, EXIT_OK


def _pair_record(o: Out, p: bc.SharpConstantPair) -> dict:
    return {"id": p.inequality_id, "order": p.N, "exactness": p.exactness,
            "lower": _constant(o, p.lower_constant), "upper": _constant(o, p.upper_constant)}


def cmd_constants(args, o: Out):
    fam = args.family.lower().replace("_", "-")
    N = DEFAULT_ORDERS.get(fam, 1) if args.order is None else args.order
    return _pair_record(o, bc.constants(fam, N, args.precision)), EXIT_OK


def _report_record(o: Out, r) -> dict:
    return {"id": r.inequality_id, "verdict": r.verdict,
            "order": r.order,
            "domain": {"left": r.domain[0], "right": r.domain[1], "guard": r.domain[2]},
            "grid_points": r.grid_points, "min_margin": o.num(r.min_margin, "d"),
            "argmin": o.num(r.argmin), "precision": r.precision_bits,
            "violation_at": o.num(r.violation_at),
            "links": {k: {"min_margin": o.num(v[0], "d"), "argmin": o.num(v[1])} for k, v in r.links.items()}}


def cmd_verify(args, o: Out):
    ids = iv_.INEQUALITY_IDS if args.id == "all" else [iv_.normalize_id(args.id)]
    reports = [iv_.verify(i, args.grid, args.precision, order=args.order if args.id != "all" else None,
                          jobs=args.jobs) for i in ids]
    code = EXIT_OK if all(r.verdict == iv_.CERTIFIED for r in reports) else EXIT_VIOLATED
    recs = [_report_record(o, r) for r in reports]
    return (recs if args.id == "all" else recs[0]), code


def _parse_sum_id(text: str):
    """S1..S15, or family:n with family in even_zeta, odd_zeta_even, alt_even_zeta, alt_odd_sum."""
    if ":" in text:
        fam, n = text.split(":", 1)
        fn = {"even_zeta": zs.even_zeta, "odd_zeta_even": zs.odd_zeta_even,
              "alt_even_zeta": zs.alt_even_zeta, "alt_odd_sum": zs.alt_odd_sum}.get(fam.strip().replace("-", "_"))
        if fn is None:
            raise RejectedInput(f"unknown sum family {fam!r}")
        try:
            return lambda prec: fn(int(n), prec)
        except ValueError:
            raise RejectedInput(f"bad order {n!r}") from None
    return lambda prec: zs.registry_constant(text, prec)


def cmd_sums(args, o: Out):
    c = _parse_sum_id(args.id)(args.precision)
    rec = {"id": c.expression_id, "exact": str(c.form),
           "terms": [[_frac(q), label] for q, label in c.exact_terms],
           "value": o.num(c.value), "enclosure": o.enc(c.numeric), "precision": args.precision}
    if args.check:
        e = zs.registry_entry(args.id)
        enc, tail = zs.brute_sum(e.term, e.start, args.precision, tolerance=args.tolerance or mpf(2) ** -128)
        rec["series"] = {"enclosure": o.enc(enc), "terms": tail.terms, "tail_bound": o.num(tail.bound, "u"),
                         "agrees": bool(enc.lo <= c.numeric.hi and c.numeric.lo <= enc.hi)}
    return rec, EXIT_OK


def _orders(text: str) -> list:
    text = text.strip()
    try:
        if ".." in text:
            a, b = text.split("..")
            return list(range(int(a), int(b) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise RejectedInput(f"bad order list {text!r}; use e.g. 1..6 or 1,2,5") from None


TABLES = ("wilker-constants", "wilker-alphabeta-constants", "huygens-constants",
          "sec-remainder-constants", "bernoulli", "euler")


def cmd_table(args, o: Out):
    spec = args.spec.lower().replace("_", "-")
    if spec not in TABLES:
        raise RejectedInput(f"unknown table {args.spec!r}; choose from {', '.join(TABLES)}")
    rows = []
    if spec == "bernoulli":
        for n in _orders(args.orders or "0..12"):
            rows.append({"n": n, "B_n": _frac(en.bernoulli(n))})
    elif spec == "euler":
        for n in _orders(args.orders or "0..12"):
            rows.append({"n": n, "E_n": str(en.euler_number(n))})
    else:
        fam = spec[: -len("-constants")]
        names = {"wilker": ("lambda", "mu"), "wilker-alphabeta": ("alpha", "beta"),
                 "huygens": ("a", "b"), "sec-remainder": ("lower", "upper")}[fam]
        default = "0..6" if fam in ("wilker-alphabeta", "sec-remainder") else "1..6"
        for N in _orders(args.orders or default):
            p = bc.constants(fam, N, args.precision)
            lo_, up = p.lower_constant, p.upper_constant
            rows.append({"N": N,
                         names[0]: o.num(lo_.value), f"{names[0]}_exact": str(lo_.form) if lo_.form else "",
                         names[1]: o.num(up.value), f"{names[1]}_exact": str(up.form) if up.form else "",
                         "ordered": bool(lo_.enclosure.hi < up.enclosure.lo)})
    return rows, EXIT_OK


def cmd_limit(args, o: Out):
    L = iv_.endpoint_limit(args.id, args.endpoint, args.precision, order=args.order)
    rec = {"id": L.expression_id, "endpoint": L.endpoint, "order": L.order,
           "claimed": str(L.claimed_limit), "claimed_value": o.num(L.claimed_limit.enclosure(args.precision).mid),
           "extrapolated": o.num(L.extrapolated), "discrepancy": o.num(L.discrepancy),
           "diverged": L.diverged, "agrees": L.agrees}
    return rec, (EXIT_OK if L.agrees else EXIT_VIOLATED)


def cmd_compare(args, o: Out):
    r = iv_.compare_bounds(args.a, args.b, None, args.grid, args.precision)
    first = lambda xs: o.num(xs[0]) if xs else None  # noqa: E731
    return {"a": r.bound_a, "b": r.bound_b, "classification": r.classification,
            "a_sharper_points": len(r.a_sharper_at), "b_sharper_points": len(r.b_sharper_at),
            "unresolved_points": len(r.unresolved_at),
            "witness_a": first(r.a_sharper_at), "witness_b": first(r.b_sharper_at)}, EXIT_OK


# ---------------------------------------------------------------- parser

def _default_precision() -> int:
    env = os.environ.get(ENV_PRECISION)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{ENV_PRECISION} must be an integer, got {env!r}") from None
    return 256


def _common(prec_default: int) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--precision", type=int, default=prec_default, help="working precision in bits (>= 64)")
    p.add_argument("--grid", type=int, default=2001, help="grid points for verify/compare (>= 3)")
    p.add_argument("--tolerance", type=float, default=None, help="relative tail tolerance (default 2^-(precision/2))")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out", default=None, help="write output to this file instead of stdout")
    return p


def build_parser(prec_default: int = 256) -> argparse.ArgumentParser:
    common = _common(prec_default)
    p = Parser(prog="trig-enclose", description="Certified enclosures for trigonometric expansions and inequalities.",
               parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=Parser)

    e = sub.add_parser("eval", parents=[common], help="partial sum plus certified remainder")
    e.add_argument("function", choices=rs.FUNCTIONS)
    e.add_argument("--order", type=int, default=None)
    e.add_argument("--at", required=True)
    e.set_defaults(run=cmd_eval)

    r = sub.add_parser("remainder", parents=[common], help="certified remainder only")
    r.add_argument("function", choices=rs.FUNCTIONS)
    r.add_argument("--order", type=int, default=None)
    r.add_argument("--at", required=True)
    r.set_defaults(run=cmd_remainder)

    c = sub.add_parser("constants", parents=[common], help="sharp constant pair")
    c.add_argument("family", help=", ".join(bc.CONSTANT_FAMILIES))
    c.add_argument("--order", type=int, default=None)
    c.set_defaults(run=cmd_constants)

    v = sub.add_parser("verify", parents=[common], help="certify an inequality on a grid")
    v.add_argument("id", help="registry id or 'all'")
    v.add_argument("--order", type=int, default=None)
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.set_defaults(run=cmd_verify)

    s = sub.add_parser("sums", parents=[common], help="closed-form lattice sums")
    s.add_argument("id", help="S1..S15 or family:n (even_zeta, odd_zeta_even, alt_even_zeta, alt_odd_sum)")
    s.add_argument("--check", action="store_true", help="also sum the defining series (registry ids)")
    s.set_defaults(run=cmd_sums)

    t = sub.add_parser("table", parents=[common], help="CSV-friendly tables")
    t.add_argument("spec", help=", ".join(TABLES))
    t.add_argument("--orders", default=None, help="e.g. 1..6 or 1,3,5")
    t.set_defaults(run=cmd_table)

    lim = sub.add_parser("limit", parents=[common], help="extrapolated endpoint limit of a ratio")
    lim.add_argument("id", help=", ".join(iv_.LIMIT_IDS))
    lim.add_argument("--endpoint", default="0", help="0 or pi/2")
    lim.add_argument("--order", type=int, default=None)
    lim.set_defaults(run=cmd_limit)

    cmp_ = sub.add_parser("compare", parents=[common], help="which of two bounds is sharper")
    cmp_.add_argument("a")
    cmp_.add_argument("b")
    cmp_.set_defaults(run=cmd_compare)
    return p


def main(argv=None) -> int:
    try:
        parser = build_parser(_default_precision())
    except UsageError as exc:
        print(f"trig-enclose: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.precision < 64:
        print("trig-enclose: error: --precision must be at least 64", file=sys.stderr)
        return EXIT_USAGE
    if args.grid < 3:
        print("trig-enclose: error: --grid must be at least 3", file=sys.stderr)
        return EXIT_USAGE
    if args.tolerance is not None and not args.tolerance > 0:
        print("trig-enclose: error: --tolerance must be positive", file=sys.stderr)
        return EXIT_USAGE
    o = Out(args.precision)
    try:
        with workprec(args.precision):
            payload, code = args.run(args, o)
    except DomainError as exc:
        print(f"trig-enclose: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BudgetExceeded as exc:
        print(f"trig-enclose: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except RejectedInput as exc:
        print(f"trig-enclose: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(payload, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
