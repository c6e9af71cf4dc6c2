"""Command-line front end.

Subcommands mirror the library surface: ``correlator`` evaluates one
correlator (small-quantum indices by default), ``special-expr`` prints the
window correlator or the quadratic-identity residual, ``conjecture`` checks
the quadratic identity, ``semisimple`` runs the characteristic-polynomial
scan, ``conics`` replays the dimension-4 verification, ``lattice`` exposes
the plane calculus, and ``cache-info`` inspects a memo file.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import geometry, semisimple
from .engine import CorrelatorEngine
from .scalars import rational_str
from .serial import CacheError, load_cache, poly_to_str, save_cache

CACHE_ENV = "QH22_CACHE"


def _parse_ints(text):
    return tuple(int(v) for v in text.split(","))


def _parse_fractions(text):
    return tuple(Fraction(v) for v in text.split(","))


def _engine_with_cache(n, cache_path):
    eng = CorrelatorEngine(n)
    if cache_path and os.path.exists(cache_path):
        eng.memo.update(load_cache(cache_path, n))
    return eng


def _maybe_save(eng, cache_path):
    if cache_path:
        save_cache(cache_path, eng.n, eng.memo)


def _print_json(obj):
    print(json.dumps(obj, indent=2, sort_keys=False))


def cmd_correlator(args):
    cache = args.cache or os.environ.get(CACHE_ENV)
    eng = _engine_with_cache(args.n, cache)
    if args.tau_index is not None:
        index = _parse_ints(args.tau_index)
        basis = "tau"
        poly = eng.correlator_tau(index)
    else:
        index = _parse_ints(args.t_index)
        basis = "t"
        poly = eng.correlator_t(index)
    _maybe_save(eng, cache)
    beta = eng.beta_of_t_index(index) if basis == "t" else None
    if basis == "tau":
        n = args.n
        weighted = sum(k * v for k, v in enumerate(index[: n + 1])) + (n // 2) * sum(
            index[n + 1 :]
        )
        q, r = divmod(weighted - (n - 3 + sum(index)), n - 1)
        beta = q if not r else None
    if args.format == "json":
        _print_json(
            {
                "n": args.n,
                "basis": basis,
                "index": list(index),
                "value": {"poly": [[rational_str(c), "0"] for c in poly.coeffs]},
                "beta": None if beta is None else beta,
            }
        )
    else:
        print(poly_to_str(poly.coeffs, descending=True))
    return 0


def cmd_special_expr(args):
    eng = CorrelatorEngine(args.n)
    if args.target == "f":
        poly = eng.f_value()
    else:
        poly = eng.conjecture_quadratic()
    if args.format == "json":
        _print_json(
            {
                "n": args.n,
                "target": args.target,
                "value": {"poly": [[rational_str(c), "0"] for c in poly.coeffs]},
            }
        )
    else:
        print(poly_to_str(poly.coeffs))
    return 0


def cmd_conjecture(args):
    eng = CorrelatorEngine(args.n)
    lhs = eng.conjecture_quadratic_lhs()
    residual = eng.conjecture_quadratic()
    ok = residual.is_zero()
    if args.format == "json":
        _print_json(
            {
                "n": args.n,
                "lhs": poly_to_str(lhs.coeffs, descending=True),
                "residual": poly_to_str(residual.coeffs),
                "ok": ok,
            }
        )
    else:
        print("lhs: %s" % poly_to_str(lhs.coeffs, descending=True))
        print("residual: %s" % poly_to_str(residual.coeffs))
    if not ok:
        print("quadratic identity failed", file=sys.stderr)
        return 1
    return 0


def cmd_semisimple(args):
    rows = semisimple.semisimple_scan(args.n, args.samples, args.seed)
    accepted = [r for r in rows if not r.rejected]
    ok = all(r.agrees for r in accepted)
    if args.format == "json":
        _print_json(
            {
                "n": args.n,
                "samples": args.samples,
                "seed": args.seed,
                "rows": [r.as_dict() for r in rows],
                "squarefree": sum(1 for r in accepted if r.squarefree),
                "ok": ok,
            }
        )
    else:
        for r in rows:
            flag = "rejected" if r.rejected else (
                "agree" if r.agrees else "MISMATCH"
            ) + (" squarefree" if r.squarefree else " repeated-roots")
            print("%s  %s" % (flag, " ".join(rational_str(v) for v in r.point)))
        print(
            "%d/%d squarefree, all agree: %s"
            % (sum(1 for r in accepted if r.squarefree), len(accepted), ok)
        )
    if not ok:
        print("characteristic polynomial mismatch", file=sys.stderr)
        return 1
    return 0


def cmd_conics(args):
    lams = _parse_fractions(args.lams)
    report = geometry.conic_pipeline(lams)
    rigidity = geometry.dual_uniqueness(lams)
    extras = {
        "no_conic_on_base_plane": geometry.no_conic_through_meeting_points(lams),
        "plane_in_conjectural_quadric": geometry.conic_plane_in_conjectural_quadric(lams),
    }
    ok = report.ok and rigidity.ok and extras["no_conic_on_base_plane"]
    if args.format == "json":
        _print_json(
            {
                "lams": [rational_str(v) for v in lams],
                "pipeline": report.as_dict(),
                "rigidity": rigidity.as_dict(),
                "extras": extras,
                "ok": ok,
            }
        )
    else:
        for stage in report.stages + rigidity.stages:
            print("%s  %s" % ("ok " if stage.ok else "FAIL", stage.name))
        for k, v in extras.items():
            print("%s  %s" % ("ok " if v else "note", k))
        print("overall: %s" % ("pass" if ok else "fail"))
    if not ok:
        print("conic verification mismatch", file=sys.stderr)
        return 1
    return 0


def cmd_lattice(args):
    n = args.n
    out = {}
    if args.dim:
        i_set, j_set = args.dim
        out["dim"] = geometry.intersection_dim(i_set, j_set, n)
    if args.number:
        i_set, j_set = args.number
        out["number"] = rational_str(geometry.intersection_number(i_set, j_set, n))
    if args.gram:
        gram = geometry.epsilon_gram(n)
        sign = (-1) ** (n // 2)
        expected = all(
            gram.data[i][j] == (sign if i == j else 0)
            for i in range(n + 3)
            for j in range(n + 3)
        )
        out["gram_is_signed_identity"] = expected
    if args.unique_plane:
        out["only_base_plane_meets_all_windows"] = geometry.only_base_plane_meets_all_windows(n)
    if args.inequality:
        out["window_sum_inequality"] = geometry.window_sum_inequality(n)
    if not out:
        print("nothing to do; pass --dim/--number/--gram/--unique-plane/--inequality", file=sys.stderr)
        return 2
    if args.format == "json":
        _print_json({"n": n, **out})
    else:
        for k, v in out.items():
            print("%s: %s" % (k, v))
    failed = any(v is False for v in out.values())
    return 1 if failed else 0


def cmd_cache_info(args):
    path = args.cache or os.environ.get(CACHE_ENV)
    if not path:
        print("no cache path given", file=sys.stderr)
        return 2
    with open(path) as fh:
        header = fh.readline().split()
        entries = sum(1 for line in fh if line.strip())
    if len(header) != 3:
        print("not a cache file", file=sys.stderr)
        return 1
    if args.format == "json":
        _print_json({"magic": header[0], "version": header[1], "n": header[2], "entries": entries})
    else:
        print("%s version %s %s, %d entries" % (header[0], header[1], header[2], entries))
    return 0


def _subset(text):
    text = text.strip()
    if not text or text == "-":
        return frozenset()
    return frozenset(int(v) for v in text.split(","))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qq22",
        description="Exact genus-0 invariants of even intersections of two quadrics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("correlator", help="evaluate one correlator")
    pc.add_argument("--n", type=int, required=True)
    group = pc.add_mutually_exclusive_group(required=True)
    group.add_argument("--tau-index", help="comma separated exponents, 2n+4 entries")
    group.add_argument("--t-index", help="cup-coordinate exponents, 2n+4 entries")
    pc.add_argument("--cache", help="memo file path (default: $%s)" % CACHE_ENV)
    pc.add_argument("--format", choices=("text", "json"), default="text")
    pc.set_defaults(func=cmd_correlator)

    ps = sub.add_parser("special-expr", help="window correlator or quadratic residual")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--target", choices=("f", "quadratic"), required=True)
    ps.add_argument("--format", choices=("text", "json"), default="text")
    ps.set_defaults(func=cmd_special_expr)

    pj = sub.add_parser("conjecture", help="check the quadratic identity")
    pj.add_argument("--n", type=int, required=True)
    pj.add_argument("--format", choices=("text", "json"), default="text")
    pj.set_defaults(func=cmd_conjecture)

    pm = sub.add_parser("semisimple", help="characteristic polynomial scan")
    pm.add_argument("--n", type=int, required=True)
    pm.add_argument("--samples", type=int, default=20)
    pm.add_argument("--seed", type=int, default=0)
    pm.add_argument("--format", choices=("text", "json"), default="text")
    pm.set_defaults(func=cmd_semisimple)

    pq = sub.add_parser("conics", help="dimension-4 conic verification")
    pq.add_argument("--lambda", dest="lams", required=True, help="seven comma separated values")
    pq.add_argument("--format", choices=("text", "json"), default="text")
    pq.set_defaults(func=cmd_conics)

    pl = sub.add_parser("lattice", help="plane intersection calculus")
    pl.add_argument("--n", type=int, required=True)
    pl.add_argument("--dim", nargs=2, type=_subset, metavar=("I", "J"))
    pl.add_argument("--number", nargs=2, type=_subset, metavar=("I", "J"))
    pl.add_argument("--gram", action="store_true")
    pl.add_argument("--unique-plane", action="store_true")
    pl.add_argument("--inequality", action="store_true")
    pl.add_argument("--format", choices=("text", "json"), default="text")
    pl.set_defaults(func=cmd_lattice)

    pi = sub.add_parser("cache-info", help="inspect a memo file")
    pi.add_argument("--cache")
    pi.add_argument("--format", choices=("text", "json"), default="text")
    pi.set_defaults(func=cmd_cache_info)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, CacheError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
