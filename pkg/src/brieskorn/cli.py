"""Command line front end.

Exit codes: 0 success, 2 bad arguments, 3 invalid triple, 4 overflow or
budget, 5 verification counterexample. Results go to stdout, logs to stderr.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from . import dinv, families, plumbing
from .errors import BrieskornError, InvalidInput
from .triples import Triple, decompose, enumerate_triples, make_triple

log = logging.getLogger("brieskorn")

EXIT_OK, EXIT_ARGS, EXIT_TRIPLE, EXIT_BUDGET, EXIT_COUNTER = 0, 2, 3, 4, 5

CSV_FIELDS = ["p", "q", "r", "n_p", "l", "t", "alpha", "s_num", "s_den",
              "D", "d", "witness_a", "witness_m", "method", "d_equals_D"]


def output_record(t: Triple, res: dinv.DResult) -> dict:
    rec = {"p": t.p, "q": t.q, "r": t.r,
           "n_p": None, "l": None, "t": None, "alpha": None, "s": None}
    if t.p % 2:
        dec = decompose(t)
        rec.update(n_p=dec.n_p, l=dec.l, t=dec.t, alpha=dec.alpha,
                   s={"num": dec.s.numerator, "den": dec.s.denominator})
    D = dinv.D_invariant(t)
    w = res.witness or (None, None)
    rec.update(D=D, d=res.value, witness_a=w[0], witness_m=w[1], method=res.method,
               d_equals_D=res.value == D,
               applicable_theorems=[c.name for c in dinv.closed_forms(t)])
    return rec


def _csv_row(rec: dict) -> dict:
    row = {k: rec.get(k) for k in CSV_FIELDS}
    s = rec.get("s")
    row["s_num"], row["s_den"] = (s["num"], s["den"]) if s else (None, None)
    row["d_equals_D"] = str(rec["d_equals_D"]).lower()
    return {k: "" if v is None else v for k, v in row.items()}


def _emit(obj, out):
    out.write(json.dumps(obj, default=families._jsonable) + "\n")


def _pair(text: str) -> tuple[int, int]:
    try:
        p, q = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected P,Q but got {text!r}") from None
    return p, q


def _kv(text: str) -> dict:
    out = {}
    for part in filter(None, text.split(",")):
        key, sep, val = part.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected KEY=VALUE, got {part!r}")
        try:
            out[key.strip()] = int(val)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{key}: {val!r} is not an integer") from None
    return out


def _grid(text: str) -> dict:
    """K=LO..HI,... into inclusive ranges."""
    out = {}
    for part in filter(None, text.split(",")):
        key, sep, val = part.partition("=")
        lo, dots, hi = val.partition("..")
        try:
            out[key.strip()] = range(int(lo), int(hi if dots else lo) + 1)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad grid axis {part!r}; use K=LO..HI") from None
        if not sep:
            raise argparse.ArgumentTypeError(f"bad grid axis {part!r}; use K=LO..HI")
    return out


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _compute(t: Triple, method: str, max_p: int) -> dict:
    return output_record(t, dinv.d(t, method, max_p))


# -- subcommands ---------------------------------------------------------------

def cmd_compute(args, out):
    _emit(_compute(make_triple(args.p, args.q), args.method, args.oracle_max_p), out)
    return EXIT_OK


def cmd_enumerate(args, out):
    l_range = (1, args.l_max) if args.l_max is not None else None
    triples = list(enumerate_triples(args.p_max, l_range))
    log.info("enumerated %d triples", len(triples))

    def work(t):
        return _compute(t, args.method, args.oracle_max_p)

    if args.jobs > 1:
        with ThreadPoolExecutor(args.jobs) as ex:
            records = list(ex.map(work, triples))
    else:
        records = map(work, triples)
    if args.format == "csv":
        writer = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for rec in records:
            writer.writerow(_csv_row(rec))
    else:
        for rec in records:
            _emit(rec, out)
    return EXIT_OK


def cmd_classify(args, out):
    _emit(dinv.classify(make_triple(args.p, args.q)).as_dict(), out)
    return EXIT_OK


def cmd_verify(args, out):
    if args.suite in families.THEOREM_SUITES:
        report = families.verify_theorem(args.suite, args.p_max, args.oracle_max_p)
    elif args.suite in families.FAMILIES:
        fam = families.FAMILIES[args.suite]
        grid = args.grid or {k: range(1, 6) for k in fam.params}
        missing = set(fam.params) - set(grid)
        if missing:
            raise InvalidInput(f"grid is missing axes {sorted(missing)}")
        report = families.verify_family(args.suite, grid)
    else:
        raise InvalidInput(f"unknown suite {args.suite!r}; choose from "
                           f"{sorted(families.THEOREM_SUITES) + sorted(families.FAMILIES)}")
    data = report.as_dict()
    if not args.records:
        data.pop("records")
    _emit(data, out)
    log.info("%s: %d/%d passed", report.suite, report.n_pass, len(report.records))
    if report.truncated:
        log.warning("%s: truncated by budget", report.suite)
    return EXIT_OK if report.passed else EXIT_COUNTER


def cmd_family(args, out):
    t, pred = families.family_instance(args.name, args.params)
    rec = _compute(t, "refined" if t.p % 2 else "auto", args.oracle_max_p)
    rec.update(family=args.name, params=args.params, prediction_kind=pred.kind,
               predicted=pred.value)
    if pred.kind == families.LOWER_BOUND:
        rec["F34"] = dinv.F_eval(t, 3, 4)
    _emit(rec, out)
    return EXIT_OK


def cmd_fib(args, out):
    if args.k_min < 2 or args.k_max < args.k_min:
        raise InvalidInput(f"need 2 <= k-min <= k-max, got {args.k_min}..{args.k_max}")
    status = EXIT_OK
    for k in range(args.k_min, args.k_max + 1):
        c = families.fibonacci_case(k)
        rec = output_record(c.triple, c.d)
        rec.update(k=k, verdict=c.verdict, expected=c.expected, ok=c.ok, F34=c.F34)
        _emit(rec, out)
        if not c.ok:
            status = EXIT_COUNTER
    return status


def cmd_plumbing(args, out):
    t = make_triple(args.p, args.q)
    g = plumbing.star_graph(t) if args.shape == "star" else plumbing.almost_simple_linear_graph(t)
    out.write(plumbing.export(g, args.format))
    if args.format == "json":
        out.write("\n")
    return EXIT_OK


def cmd_compare(args, out):
    _emit(families.compare_cobordism(make_triple(*args.a), make_triple(*args.b)), out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="brieskorn",
                                 description="d-invariants of Brieskorn spheres with pq+pr-qr=1")
    ap.add_argument("--oracle-max-p", type=_nonneg, default=dinv.ORACLE_MAX_P,
                    help="largest p allowed for the brute-force sweep (default %(default)s)")
    ap.add_argument("--jobs", type=int, default=1, help="worker threads for enumerate")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def pq(sp):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--q", type=int, required=True)

    sp = sub.add_parser("compute", help="d for one triple")
    pq(sp)
    sp.add_argument("--method", choices=["auto", "full", "refined", "closed-form"], default="auto")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("enumerate", help="records for every triple up to p-max")
    sp.add_argument("--p-max", type=int, required=True)
    sp.add_argument("--l-max", type=int)
    sp.add_argument("--format", choices=["csv", "json"], default="json")
    sp.add_argument("--method", choices=["auto", "full", "refined"], default="auto")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("classify", help="regime and applicable closed forms")
    pq(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", required=True)
    sp.add_argument("--p-max", type=int, default=300)
    sp.add_argument("--grid", type=_grid, help="family grid, e.g. t=1..5,k=1..5")
    sp.add_argument("--records", action="store_true", help="include every instance record")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("family", help="one family instance")
    sp.add_argument("--name", required=True, choices=sorted(families.FAMILIES))
    sp.add_argument("--params", type=_kv, required=True, help="K=V,...")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("fib", help="consecutive Fibonacci triples")
    sp.add_argument("--k-min", type=int, default=2)
    sp.add_argument("--k-max", type=int, required=True)
    sp.set_defaults(func=cmd_fib)

    sp = sub.add_parser("plumbing", help="plumbing graph as dot or json")
    pq(sp)
    sp.add_argument("--format", choices=["dot", "json"], default="json")
    sp.add_argument("--shape", choices=["linear", "star"], default="linear")
    sp.set_defaults(func=cmd_plumbing)

    sp = sub.add_parser("compare", help="compare d of two triples")
    sp.add_argument("--a", type=_pair, required=True, help="P,Q")
    sp.add_argument("--b", type=_pair, required=True, help="P,Q")
    sp.set_defaults(func=cmd_compare)
    return ap


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_ARGS
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        return args.func(args, out)
    except BrieskornError as exc:
        log.error("%s", exc)
        return exc.exit_code
    except (OverflowError, MemoryError) as exc:
        log.error("overflow: %s", exc)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
