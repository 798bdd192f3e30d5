"""Exact cohomology computations for finite groups of Lie type from root-system data.

Exit codes: 0 on success (or verdict MATCH), 2 on verdict MISMATCH, 1 on
usage or internal errors.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Optional

from . import report
from .cohom import (
    check_prime,
    cohomology_upper_bound,
    dim_frobtwist_cohomology,
    expected_sharp_bound,
    general_vanishing_bound,
)
from .errors import CacheMismatch, WeylCohomError
from .kostant import PartitionTable, cache_path, partition_bruteforce
from .rootsys import RootSystemSpec, build
from .scan import MISMATCH, check_a3_middle_weight_sum, check_a4_p11_sums, vanishing_scan, verify_theorem
from .weyl import enumerate_group

CACHE_ENV = "WEYLCOHOM_CACHE_DIR"

log = logging.getLogger("weylcohom")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylcohom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_prime=False):
        p.add_argument("--type", dest="family", required=True, choices=list("ABCDGF") + list("abcdgf"))
        p.add_argument("--rank", type=int, required=True)
        if need_prime:
            p.add_argument("--p", type=int, required=True, help="prime larger than the Coxeter number")
        p.add_argument("--format", choices=("json", "csv", "table"), default="json")
        p.add_argument("--cache-dir", default=None, help=f"partition-table cache (default: ${CACHE_ENV})")
        p.add_argument("--no-cache", action="store_true")
        p.add_argument("--jobs", type=int, default=1)

    common(sub.add_parser("info", help="root system and Weyl group data"))

    kp = sub.add_parser("kostant", help="Kostant partition function P_n(nu); nu in simple-root coordinates")
    common(kp)
    kp.add_argument("--nu", type=_ints, required=True, help="simple-root coordinates, e.g. 1,2,1")
    kp.add_argument("--n", type=int, required=True, help="number of parts")
    kp.add_argument("--oracle", action="store_true", help="also run the brute-force count")

    dp = sub.add_parser("dim", help="cohomology dimension for one weight; lambda in fundamental coordinates")
    common(dp, True)
    dp.add_argument("--lambda", dest="lam", type=_ints, required=True, help="fundamental coordinates, e.g. 3,3")
    dp.add_argument("--i", type=int, required=True, help="degree")

    bp = sub.add_parser("bound", help="upper bound for dim H^i(G(F_p), k) and known sharp bounds")
    common(bp, True)
    bp.add_argument("--i", type=int, required=True, help="degree")
    bp.add_argument("--r", type=int, default=1, help="q = p^r for the reference value")

    sp = sub.add_parser("scan", help="least nonvanishing degree over all candidate weights")
    common(sp, True)
    sp.add_argument("--i-max", type=int, default=None, help="highest degree scanned (default 2p - 2)")
    sp.add_argument("--early-exit", action="store_true")

    vp = sub.add_parser("verify", help="compare a scan against the known sharp bound")
    common(vp, True)
    vp.add_argument(
        "--check",
        choices=("theorem", "a3-middle", "a4-p11"),
        default="theorem",
        help="'a3-middle' and 'a4-p11' evaluate the fixed-weight alternating sums instead",
    )
    return parser


def _config(args: argparse.Namespace) -> dict:
    # execution knobs (jobs, cache) are left out so reports are reproducible across them
    skip = {"jobs", "cache_dir", "no_cache", "format"}
    out = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    out["family"] = out["family"].upper()
    return out


def _open_table(rs, args) -> tuple[PartitionTable, Optional[Path]]:
    table = PartitionTable(rs)
    cache_dir = None if args.no_cache else (args.cache_dir or os.environ.get(CACHE_ENV))
    if not cache_dir:
        return table, None
    path = cache_path(cache_dir, rs)
    if path.exists():
        try:
            table.load(path)
        except CacheMismatch as exc:
            print(f"weylcohom: discarding cache: {exc}", file=sys.stderr)
            table = PartitionTable(rs)
            path.unlink()
        except (OSError, ValueError, KeyError, TypeError, EOFError) as exc:
            print(f"weylcohom: discarding corrupt cache {path}: {exc}", file=sys.stderr)
            table = PartitionTable(rs)
            path.unlink()
    return table, path


def _emit(args, doc: dict, header: list[str], rows: list[list]) -> None:
    if args.format == "json":
        sys.stdout.write(report.to_json(doc))
    elif args.format == "csv":
        sys.stdout.write(report.rows_to_csv(header, rows))
    else:
        sys.stdout.write(report.rows_to_table(header, rows))


def _run(args) -> int:
    rs = build(RootSystemSpec(args.family.upper(), args.rank))
    if args.command in ("dim", "bound", "scan", "verify"):
        check_prime(rs, args.p)
    W = enumerate_group(rs)
    config = _config(args)
    table, path = _open_table(rs, args)
    code = 0

    if args.command == "info":
        result = report.root_system_info(rs, W)
        rows = [[r["index"], " ".join(r["root"]), r["long"]] for r in result["positive_roots"]]
        header = ["index", "root", "long"]
    elif args.command == "kostant":
        if len(args.nu) != rs.rank:
            raise WeylCohomError(f"--nu needs {rs.rank} coordinates")
        value = table.partition(args.nu, args.n)
        result = {"nu": args.nu, "n": args.n, "count": str(value)}
        if args.oracle:
            result["oracle"] = str(partition_bruteforce(rs, args.nu, args.n))
        header, rows = ["nu", "n", "count"], [[report.fund_str(args.nu), args.n, value]]
    elif args.command == "dim":
        lam = rs.weight(args.lam)
        res = dim_frobtwist_cohomology(rs, W, table, lam, args.p, args.i)
        result = report.dim_result(res, W)
        header, rows = ["lambda", "degree", "dimension"], [[report.fund_str(lam.fund), args.i, res.dimension]]
    elif args.command == "bound":
        ub = cohomology_upper_bound(rs, W, table, args.p, args.i)
        result = report.upper_bound(ub)
        result["vanishing_below"] = general_vanishing_bound(args.p, args.r)
        result["expected"] = report.sharp_bound(expected_sharp_bound(rs.spec.family, rs.rank, args.p, args.r))
        header = ["lambda", "dimension"]
        rows = [[report.fund_str(lam.fund), d] for lam, d in ub.contributions]
    elif args.command == "scan":
        rep = vanishing_scan(rs, W, table, args.p, args.i_max, early_exit=args.early_exit, jobs=args.jobs)
        result = report.scan_report(rep, W)
        header, rows = report.scan_rows(rep)
        code = 2 if rep.verdict == MISMATCH else 0
    else:
        if args.check == "a3-middle":
            if rs.spec.name != "A3":
                raise WeylCohomError("--check a3-middle needs --type A --rank 3")
            result = check_a3_middle_weight_sum(args.p, table)
        elif args.check == "a4-p11":
            if rs.spec.name != "A4" or args.p != 11:
                raise WeylCohomError("--check a4-p11 needs --type A --rank 4 --p 11")
            result = check_a4_p11_sums(table)
        else:
            rep = verify_theorem(rs.spec.family, rs.rank, args.p, jobs=args.jobs, table=table)
            result = report.scan_report(rep, W)
            header, rows = report.scan_rows(rep)
            code = 2 if rep.verdict == MISMATCH else 0
        if args.check != "theorem":
            result = {k: (str(v) if isinstance(v, int) and not isinstance(v, bool) else v) for k, v in result.items()}
            header = sorted(result)
            rows = [[result[k] for k in header]]
            code = 0 if result["pass"] else 2

    if path is not None:
        table.save(path)
    _emit(args, report.envelope(args.command, config, result), header, rows)
    return code


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    if args.jobs < 1:
        print("weylcohom: --jobs must be positive", file=sys.stderr)
        return 1
    try:
        return _run(args)
    except (WeylCohomError, ValueError) as exc:
        print(f"weylcohom: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
