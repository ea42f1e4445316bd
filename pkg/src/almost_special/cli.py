"""Command-line interface: ``almost-special <verb> ...`` or ``python -m almost_special``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import basis_sets as bs
from . import checks, exceptional, symplectic, tableaux
from .errors import InvalidInput, NotRealizable, ResourceLimit
from .tables import render_table

USAGE_ERROR = 2
CHECK_FAILED = 1


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_enumerate(args) -> int:
    sets = bs.enumerate_sets(args.d, args.filter)
    if args.format == "json":
        _emit(json.dumps([B.to_json() for B in sets], ensure_ascii=False))
    else:
        _emit("\n".join(B.render() for B in sets))
    return 0


def cmd_table(args) -> int:
    sys.stdout.write(render_table(args.d))
    return 0


def _parse_set(D: int, text: str) -> bs.IntervalSet:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"--set is not valid JSON: {exc}") from None
    if isinstance(data, dict):
        B = bs.IntervalSet.from_json(data)
        if B.D != D:
            raise InvalidInput(f"--set has D={B.D} but --d is {D}")
        return B
    if not isinstance(data, list):
        raise InvalidInput("--set must be a list of [a,b] pairs or an interval set object")
    return bs.IntervalSet(D, tuple(tuple(x) if isinstance(x, list) else x for x in data))


def cmd_symbol(args) -> int:
    B = _parse_set(args.d, args.set)
    bs.require_valid(B)
    B1 = bs.reduce_set(B)
    C = tableaux.dot(B1)
    X = tableaux.shift(C)
    mu = tableaux.tableau_to_pairs(X)
    sym = tableaux.pairs_to_symbol(mu)
    e = symplectic.epsilon(B)
    e1 = symplectic.epsilon_rows(X)
    f_sym = symplectic.f_map(e1)
    agree = f_sym.as_distinguished() == sym
    if args.format == "json":
        _emit(json.dumps({
            "set": B.to_json(),
            "reduced": B1.to_json(),
            "dotted": C.to_json()["intervals"],
            "shifted": [r.to_json() for r in X.rows],
            "pairs": {"top": list(mu.top), "bottom": list(mu.bottom)},
            "symbol": sym.to_json(),
            "epsilon": str(e),
            "epsilon_reduced": str(e1),
            "f_epsilon": f_sym.to_json(),
            "agree": agree,
        }, ensure_ascii=False))
    else:
        lines = [
            f"set:          {B.render()}",
            f"reduced:      {B1.render()}",
            f"dotted:       {C.render()}",
            "shifted rows: " + (" ".join(r.digits() for r in X.rows) or "∅"),
            f"pairs:        ({' '.join(map(str, mu.top))}/{' '.join(map(str, mu.bottom))})",
            f"symbol:       {sym.render()}",
            f"epsilon:      {e}",
            f"epsilon(1B):  {e1}",
            f"f(epsilon):   {f_sym.render()}",
            f"cross-check:  {'agree' if agree else 'DISAGREE'}",
        ]
        _emit("\n".join(lines))
    return 0 if agree else CHECK_FAILED


def cmd_verify(args) -> int:
    results = checks.run(args.suite, args.d_max)
    _emit("\n".join(c.line() for c in results))
    failed = sum(1 for c in results if not c.passed)
    _emit(f"{len(results) - failed} passed, {failed} failed")
    return CHECK_FAILED if failed else 0


def cmd_exceptional(args) -> int:
    if args.dump_data:
        return cmd_dump_data(args)
    if args.size is None:
        raise InvalidInput("exceptional needs --size (or --dump-data)")
    record = exceptional.family(args.size)
    _emit(json.dumps(record.to_json(), ensure_ascii=False, indent=2))
    if not args.check:
        return 0
    lines = []
    for key, ok in exceptional.check_unique_max(record).items():
        orders = ",".join(str(g.order) for g in record.lists[key])
        lines.append(f"{'PASS' if ok else 'FAIL'} unique max {key} ({orders})")
    problems = exceptional.check_record(record)
    labels = exceptional.almost_special(record)
    lines.append(f"{'PASS' if not problems else 'FAIL'} record consistency"
                 + (": " + "; ".join(problems) if problems else ""))
    lines.append(f"almost special ({len(labels)}): " + " ".join(labels))
    _emit("\n".join(lines))
    return CHECK_FAILED if problems else 0


def cmd_catalan(args) -> int:
    failed = 0
    for D in range(0, args.d_max + 1, 2):
        cat = bs.catalan((D + 2) // 2)
        half = len(bs.enumerate_sets(D, "half"))
        reduced = len(bs.enumerate_sets(D, "reduced"))
        symbols = len(tableaux.distinguished_symbols(D))
        ok = half == reduced == symbols == cat
        failed += not ok
        _emit(f"D={D} half={half} reduced={reduced} symbols={symbols} "
              f"Cat={cat} {'ok' if ok else 'MISMATCH'}")
    return CHECK_FAILED if failed else 0


def cmd_dump_data(args) -> int:
    sys.stdout.write(exceptional.raw_data())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="almost-special", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("enumerate", help="list S_D, its half-size part, or the reduced sets")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--filter", choices=bs.FILTERS, default="all")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", help="print the alpha/beta/symbol table")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("symbol", help="run one set through the symbol pipeline")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--set", required=True, help='JSON, e.g. "[[3,3],[2,4]]"')
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_symbol)

    p = sub.add_parser("verify", help="run the exhaustive property suites")
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--suite", choices=(*checks.SUITES, "all"), default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exceptional", help="print an exceptional family record")
    p.add_argument("--size", type=int)
    p.add_argument("--check", action="store_true")
    p.add_argument("--dump-data", action="store_true")
    p.set_defaults(func=cmd_exceptional)

    p = sub.add_parser("catalan", help="compare set and symbol counts with Catalan numbers")
    p.add_argument("--d-max", type=int, required=True)
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("dump-data", help="write the embedded exceptional-family JSON")
    p.set_defaults(func=cmd_dump_data)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, ResourceLimit, NotRealizable) as exc:
        sys.stderr.write(f"almost-special: error: {exc}\n")
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
