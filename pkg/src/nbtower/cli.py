"""Command-line surface: build, kummer, verify, bench.

Exit codes: 0 on success, 1 when verification finds failures, 2 for usage
or input problems (bad flags, non-prime p, malformed files).
"""

from __future__ import annotations

import argparse
import sys

from . import bench, serialize, tables, verify
from .artin_schreier import TowerSpec, build_tower
from .errors import (BadB, ConstructionFailure, FieldError, NoSuchRoot,
                     NormalityFailure, NotDividing, ScaleExceeded, ZeroB)
from .fields import PrimeModulus
from .kummer import base_field, find_xi, kummer_extend, kummer_params

USAGE_ERRORS = (NotDividing, BadB, ZeroB, NoSuchRoot, ScaleExceeded,
                serialize.FormatError, ValueError)
INTERNAL_ERRORS = (NormalityFailure, ConstructionFailure)


def _table_summary(name: str, table) -> str:
    rep = tables.sparsity(table)
    coeffs = "prime" if rep.coefficients_in_prime_field else "base"
    return (f"{name}: {rep.nonzero_structure_constants} nonzeros, "
            f"max row weight {rep.max_row_weight}, "
            f"{rep.constant_terms_used} constant terms, "
            f"off-square coefficients {coeffs}")


def cmd_build(args) -> int:
    prime = PrimeModulus(args.p)
    tower = build_tower(prime, args.levels, b=args.b)
    serialize.save(tower, args.out)
    print(f"built GF({args.p}) tower, degrees {tower.degrees}")
    for k, level in enumerate(tower.levels, start=1):
        print(f"level {k}: {level.ctx.describe()}")
        print("  " + _table_summary("gamma table", level.gamma_table))
        print("  " + _table_summary("delta table", level.delta_table))
    print(f"wrote {args.out}")
    return 0


def cmd_kummer(args) -> int:
    params = kummer_params(args.p, args.q, args.l, args.s)
    K = base_field(args.p, args.l)
    xi = find_xi(K, args.q, params.r)
    level = kummer_extend(K, params, xi, args.b).with_table()
    serialize.save(level, args.out)
    print(f"built {level.ctx.describe()} = GF({args.p}^{args.l})"
          f"[x]/(x^{params.degree} - ({xi}))")
    print(f"  xi = {xi}, zeta = {level.zeta}, b = {level.b}")
    print("  " + _table_summary("gamma table", level.table))
    print(f"wrote {args.out}")
    return 0


def cmd_verify(args) -> int:
    obj = serialize.load(args.path)
    report = verify.verify_loaded(obj, deep=args.deep)
    print(report.summary())
    return 0 if report.ok else 1


def cmd_bench(args) -> int:
    obj = serialize.load(args.path)
    if not isinstance(obj, TowerSpec):
        raise ValueError(
            "bench needs a tower file (its generator is normal over GF(p))")
    report = bench.run_bench(obj, args.ops, seed=args.seed)
    print(report.render())
    return 0 if report.ok else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nbtower",
        description="Build and audit normal bases with sparse "
                    "multiplication tables over finite fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build a degree-p extension tower")
    p_build.add_argument("--p", type=int, required=True,
                         help="field characteristic (prime)")
    p_build.add_argument("--levels", type=int, required=True,
                         help="number of tower levels")
    p_build.add_argument("--b", type=int, default=1,
                         help="shift constant in GF(p) \\ {0} (default 1)")
    p_build.add_argument("--out", required=True, help="output JSON path")
    p_build.set_defaults(fn=cmd_build)

    p_kummer = sub.add_parser(
        "kummer", help="build one x^(q^s) - xi extension")
    p_kummer.add_argument("--p", type=int, required=True)
    p_kummer.add_argument("--q", type=int, required=True,
                          help="prime degree base, q | p^l - 1")
    p_kummer.add_argument("--l", type=int, default=1,
                          help="degree of the base field over GF(p)")
    p_kummer.add_argument("--s", type=int, default=1,
                          help="extension degree exponent, 1 <= s <= r")
    p_kummer.add_argument("--b", type=int, default=1)
    p_kummer.add_argument("--out", required=True)
    p_kummer.set_defaults(fn=cmd_kummer)

    p_verify = sub.add_parser("verify", help="re-check a saved file")
    p_verify.add_argument("path")
    p_verify.add_argument("--deep", action="store_true",
                          help="also expand and check all m^2 products")
    p_verify.set_defaults(fn=cmd_verify)

    p_bench = sub.add_parser(
        "bench", help="compare table-driven and polynomial multiplication")
    p_bench.add_argument("path")
    p_bench.add_argument("--ops", type=int, default=10000)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.set_defaults(fn=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except INTERNAL_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
