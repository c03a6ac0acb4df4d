"""krshuffle command-line interface.

Exit status: 0 on success, 1 on bad input, 2 when two routes that must
agree do not (an internal bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import recursion
from .dyck import catalan, schroder
from .errors import ConsistencyError
from .qtalg import QSeries, format_series, latex_series
from .symfunc import shuffle_pairing
from .verify import SUITES, run_suite
from .words import Word, parse_int_list

CACHE_FILE = "recursion-cache.json"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--cache-dir", type=Path, default=None, help="persist the recursion memo here as JSON")

    parser = _Parser(prog="krshuffle", description="KR series of torus links and related shuffle-side sums")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("torus-link", parents=[common], help="series of T(n, nm + r), r in {-1, 0, 1}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("series", parents=[common], help="f_v or g_v from the recursion")
    p.add_argument("--flavor", choices=("f", "g"), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--v", required=True, help="comma-separated letters, e.g. 2,1,0")

    p = sub.add_parser("catalan", parents=[common], help="higher q,t-Catalan polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("schroder", parents=[common], help="higher q,t-Schroder polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("shuffle-pair", parents=[common], help="<nabla^m e_n, h_k e_{n-k}> from parking functions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("braid", parents=[common], help="series of beta_{i,k,m,n}")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--coxeter", action="store_true", help="prepend the Coxeter braid X_n")

    p = sub.add_parser("verify", parents=[common], help="run a cross-route verification suite")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--m-max", type=int, default=2)
    p.add_argument("--q-depth", type=int, default=6)
    return parser


def _positive(**values) -> None:
    for name, value in values.items():
        if value < 1:
            raise UsageError(f"--{name.replace('_', '-')} must be >= 1, got {value}")


def _in_range(name: str, value: int, lo: int, hi: int) -> None:
    if not lo <= value <= hi:
        raise UsageError(f"--{name} must lie in {lo}..{hi}, got {value}")


def _compute(args) -> QSeries:
    cmd = args.command
    if cmd == "torus-link":
        _positive(n=args.n, m=args.m)
        if args.r not in (-1, 0, 1):
            raise UsageError(
                f"--r must be -1, 0 or 1 (got {args.r}); other r need the full-twist reduction, which is not implemented"
            )
        return recursion.torus_link_series(args.n, args.m, args.r)
    if cmd == "series":
        _positive(m=args.m)
        try:
            word = Word(args.m, parse_int_list(args.v))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        fn = recursion.f_series if args.flavor == "f" else recursion.g_series
        return fn(args.m, word)
    if cmd == "catalan":
        _positive(n=args.n, m=args.m)
        return QSeries(catalan(args.n, args.m))
    if cmd in ("schroder", "shuffle-pair"):
        _positive(n=args.n, m=args.m)
        _in_range("k", args.k, 0, args.n)
        fn = schroder if cmd == "schroder" else shuffle_pairing
        return QSeries(fn(args.n, args.m, args.k))
    if cmd == "braid":
        _positive(n=args.n, m=args.m)
        _in_range("i", args.i, 1, args.n)
        _in_range("k", args.k, 0, args.m)
        return recursion.special_braid_series(args.i, args.k, args.m, args.n, with_coxeter=args.coxeter)
    raise UsageError(f"unknown command {cmd}")


def _query(args) -> dict:
    skip = {"command", "format", "cache_dir"}
    out = {"command": args.command}
    out.update({k: v for k, v in vars(args).items() if k not in skip})
    return out


def _emit_series(args, series: QSeries) -> str:
    if args.format == "json":
        data = {"query": _query(args)}
        data.update(series.to_json_dict())
        return json.dumps(data)
    if args.format == "latex":
        return latex_series(series)
    return format_series(series)


def _run_verify(args) -> int:
    _positive(n_max=args.n_max, m_max=args.m_max)
    if args.q_depth < 0:
        raise UsageError("--q-depth must be >= 0")
    checks = run_suite(args.suite, args.n_max, args.m_max, args.q_depth)
    failed = [c for c in checks if not c.ok]
    if args.format == "json":
        print(json.dumps({
            "query": _query(args),
            "checks": [{"suite": c.suite, "label": c.label, "ok": c.ok, "detail": c.detail} for c in checks],
            "failed": len(failed),
        }))
    else:
        for c in checks:
            print(c.line())
        print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return 2 if failed else 0


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    cache_path = args.cache_dir / CACHE_FILE if args.cache_dir else None
    try:
        if cache_path is not None:
            recursion.load_cache(cache_path)
        if args.command == "verify":
            code = _run_verify(args)
        else:
            print(_emit_series(args, _compute(args)))
            code = 0
        if cache_path is not None:
            recursion.save_cache(cache_path)
        return code
    except UsageError as exc:
        print(f"krshuffle: error: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"krshuffle: internal consistency failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
