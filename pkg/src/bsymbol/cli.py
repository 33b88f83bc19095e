"""Command-line front end.

    bsymbol dist   --q 11 --n 6 --k 4 --b 3 --format json
    bsymbol verify --q 11 --n 6 --k 4 --b 3
    bsymbol table  --q 11 --n 6 --k 4
    bsymbol f-value --q 11 --d 3 --b 3 --lengths 4 --brute

Exit codes: 0 success or match, 1 verification mismatch, 2 invalid input,
3 enumeration bound exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .errors import BSymbolError, EnumerationTooLarge, FieldTooSmall
from .gf import FieldSpec, make_field, prime_power
from .linear_code import DEFAULT_ENUM_BOUND, LinearCode, load_code, rs_code
from .mds_distribution import FProfile, b_distribution, corollary_check, f_count
from .oracle import brute_distribution, brute_distributions, brute_F, default_workers
from .weights import DistributionQuery, WeightDistribution

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_BOUND = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class CodeSetup:
    field: FieldSpec
    n: int
    k: int
    code: LinearCode | None = None  # only when loaded from --input

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    def rs(self) -> LinearCode:
        return self.code if self.code is not None else rs_code(self.field, self.n, self.k)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _resolve_order(args) -> tuple[int, int, int]:
    """(q, p, m) from ``--q`` or ``--p/--m``, validated without building the field."""
    if args.q is not None:
        if args.p is not None or args.m is not None:
            raise UsageError("give either --q or --p/--m, not both")
        try:
            p, m = prime_power(args.q)
        except BSymbolError:
            raise UsageError(f"q = {args.q} is not a prime power") from None
        return args.q, p, m
    if args.p is None:
        raise UsageError("a field is required: --q or --p [--m]")
    m = args.m if args.m is not None else 1
    if m < 1:
        raise UsageError("--m must be >= 1")
    try:
        p, m2 = prime_power(args.p)
    except BSymbolError:
        p, m2 = args.p, 0
    if m2 != 1:
        raise UsageError(f"p = {args.p} is not prime")
    return args.p**m, args.p, m


def _build_field(p: int, m: int, args) -> FieldSpec:
    try:
        return make_field(p, m, args.modulus)
    except BSymbolError as exc:
        raise UsageError(str(exc)) from None


def _setup_code(args) -> CodeSetup:
    if args.input:
        if any(getattr(args, a) is not None for a in ("q", "p", "n", "k", "d")):
            raise UsageError("--input replaces --q/--p/--n/--k/--d")
        try:
            code = load_code(args.input, args.max_enum)
        except EnumerationTooLarge:
            raise
        except (OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot load {args.input}: {exc}") from None
        return CodeSetup(code.field, code.n, code.k, code)
    q, p, m = _resolve_order(args)
    n = args.n
    if n is None:
        raise UsageError("--n is required")
    if n < 1:
        raise UsageError("--n must be >= 1")
    if args.k is None and args.d is None:
        raise UsageError("one of --k or --d is required")
    k = args.k if args.k is not None else n - args.d + 1
    if args.d is not None and args.d != n - k + 1:
        raise UsageError(f"--d {args.d} is inconsistent with n - k + 1 = {n - k + 1}")
    if not 1 <= k <= n:
        raise UsageError(f"need 1 <= k <= n, got k = {k}, n = {n}")
    if n > q:
        raise UsageError(f"n exceeds field order ({n} > {q})")
    return CodeSetup(_build_field(p, m, args), n, k)


def _check_b(b: int | None) -> int:
    if b is None:
        raise UsageError("--b is required")
    if b < 1:
        raise UsageError("--b must be >= 1")
    return b


def _closed(setup: CodeSetup, b: int) -> WeightDistribution:
    if setup.code is not None and not setup.code.mds:
        raise UsageError("closed form needs an MDS code (set assert_mds or use --mode brute)")
    return b_distribution(DistributionQuery(setup.q, setup.n, setup.k, b))


# -- rendering ---------------------------------------------------------------

def render(dist: WeightDistribution, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(dist.to_json())
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["w", "count", "mode"])
        for w, c in sorted(dist.counts.items()):
            writer.writerow([w, c, dist.mode])
        return buf.getvalue().rstrip("\n")
    qy = dist.query
    width = max(len(str(c)) for c in dist.counts.values())
    lines = [f"# [{qy.n},{qy.k},{qy.d}]_{qy.q}  b={qy.b}  mode={dist.mode}"]
    lines += [f"{w:>3}  {c:>{width}}" for w, c in sorted(dist.counts.items())]
    lines.append(f"total  {dist.total}")
    return "\n".join(lines)


# -- commands ----------------------------------------------------------------

def cmd_dist(args) -> int:
    setup = _setup_code(args)
    b = _check_b(args.b)
    if args.mode == "closed":
        dist = _closed(setup, b)
    elif args.mode == "brute":
        dist = brute_distribution(setup.rs(), b, args.workers, args.max_enum)
    else:
        closed = _closed(setup, b)
        brute = brute_distribution(setup.rs(), b, args.workers, args.max_enum)
        if closed.diff(brute):
            w, a, c = closed.diff(brute)[0]
            print(f"MISMATCH at w={w}: closed-form={a} brute-force={c}", file=sys.stderr)
            return EXIT_MISMATCH
        dist = WeightDistribution(closed.query, closed.counts, f"{closed.mode}+brute-force")
    print(render(dist, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    setup = _setup_code(args)
    b = _check_b(args.b)
    closed = _closed(setup, b)
    code = setup.rs()
    brute = brute_distribution(code, b, args.workers, args.max_enum)
    qy = closed.query
    print(f"# [{qy.n},{qy.k},{qy.d}]_{qy.q}  b={b}  closed-form regime: {closed.mode}")
    print("  w  closed-form  brute-force")
    for w in range(setup.n + 1):
        mark = "" if closed[w] == brute[w] else "  <-- differs"
        print(f"{w:>3}  {closed[w]:>11}  {brute[w]:>11}{mark}")
    for check in corollary_check(closed.query, closed):
        print(check)
    diffs = closed.diff(brute)
    if diffs:
        w, a, c = diffs[0]
        print(f"MISMATCH at w={w}: closed-form={a} brute-force={c}")
        return EXIT_MISMATCH
    print(f"MATCH ({setup.n + 1} weights, {code.size} codewords)")
    return EXIT_OK


def cmd_table(args) -> int:
    setup = _setup_code(args)
    bs = range(1, setup.n + 1)
    if args.mode == "brute":
        rows = brute_distributions(setup.rs(), bs, args.workers, args.max_enum)
    else:
        rows = {b: _closed(setup, b) for b in bs}
    ws = range(setup.n + 1)
    if args.format == "json":
        out = {
            "query": {"q": setup.q, "n": setup.n, "k": setup.k, "d": setup.d},
            "rows": [{"b": b, "mode": r.mode, "counts": {str(w): str(r[w]) for w in ws},
                      "total": str(r.total)} for b, r in rows.items()],
        }
        print(json.dumps(out))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["b", "mode", *ws])
        for b, r in rows.items():
            writer.writerow([b, r.mode, *(r[w] for w in ws)])
        print(buf.getvalue().rstrip("\n"))
    else:
        width = max(len(str(r[w])) for r in rows.values() for w in ws)
        print(f"# [{setup.n},{setup.k},{setup.d}]_{setup.q}  rows: b, columns: w")
        print(f"{'b':>3} {'mode':>12}  " + "  ".join(f"{w:>{width}}" for w in ws))
        for b, r in rows.items():
            print(f"{b:>3} {r.mode:>12}  " + "  ".join(f"{r[w]:>{width}}" for w in ws))
    return EXIT_OK


def cmd_f_value(args) -> int:
    q, p, m = _resolve_order(args)
    if args.d is None or args.b is None or not args.lengths:
        raise UsageError("f-value needs --d, --b and --lengths")
    try:
        profile = FProfile(args.b, args.d, tuple(args.lengths), q)
    except BSymbolError as exc:
        raise UsageError(str(exc)) from None
    value = f_count(profile)
    if not args.brute:
        print(value)
        return EXIT_OK
    field = _build_field(p, m, args)
    try:
        brute = brute_F(profile, field, bound=args.max_enum)
    except FieldTooSmall as exc:
        raise UsageError(str(exc)) from None
    print(f"closed-form: {value}")
    print(f"brute-force: {brute}")
    if value != brute:
        print("MISMATCH")
        return EXIT_MISMATCH
    print("MATCH")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bsymbol",
                                     description="b-symbol weight distributions of MDS codes")
    sub = parser.add_subparsers(dest="command", required=True)

    def field_args(sp):
        sp.add_argument("--q", type=int, help="field order (prime power)")
        sp.add_argument("--p", type=int, help="field characteristic")
        sp.add_argument("--m", type=int, help="extension degree")
        sp.add_argument("--modulus", type=_int_list, help="irreducible modulus, constant term first")
        sp.add_argument("--max-enum", type=int, default=DEFAULT_ENUM_BOUND,
                        help="largest number of codewords a brute-force scan may visit")
        sp.add_argument("--workers", type=int, default=default_workers())

    def code_args(sp):
        field_args(sp)
        sp.add_argument("--n", type=int)
        sp.add_argument("--k", type=int)
        sp.add_argument("--d", type=int)
        sp.add_argument("--input", help="generator-matrix JSON file")

    sp = sub.add_parser("dist", help="b-weight distribution")
    code_args(sp)
    sp.add_argument("--b", type=int)
    sp.add_argument("--mode", choices=["closed", "brute", "both"], default="closed")
    sp.add_argument("--format", choices=["json", "csv", "text"], default="text")
    sp.set_defaults(func=cmd_dist)

    sp = sub.add_parser("verify", help="closed form against exhaustive enumeration")
    code_args(sp)
    sp.add_argument("--b", type=int)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", help="distributions for every b in [1, n]")
    code_args(sp)
    sp.add_argument("--mode", choices=["closed", "brute"], default="closed")
    sp.add_argument("--format", choices=["json", "csv", "text"], default="text")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("f-value", help="count for one block-length profile")
    field_args(sp)
    sp.add_argument("--d", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--lengths", type=_int_list)
    sp.add_argument("--brute", action="store_true", help="also count by enumeration")
    sp.set_defaults(func=cmd_f_value)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except EnumerationTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except BSymbolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
