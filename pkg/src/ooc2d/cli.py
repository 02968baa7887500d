"""Command-line front end.

Exit codes: 0 success (truncated searches included), 1 bad parameters or
input, 2 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Sequence
from typing import Any, TextIO

from ooc2d.codes import MatrixCode, format_dopr, format_wpr, parse_code
from ooc2d.correlation import auto_profile, cross_profile
from ooc2d.errors import OOCError
from ooc2d.generator import code_from_record, iter_1d, onedim_record
from ooc2d.setsearch import catalog_records, run_pipeline, set_report

EXIT_USAGE = 1
EXIT_IO = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2, which means I/O here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump_json(obj: Any) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("OOC_THREADS", "1")))
    except ValueError:
        return 1


def cmd_gen1d(args: argparse.Namespace) -> int:
    lines = [_dump_json(onedim_record(i, c)) for i, c in enumerate(iter_1d(args.n, args.w))]
    _emit("".join(line + "\n" for line in lines), args.out)
    print(f"{len(lines)} codes", file=sys.stderr if args.out is None else sys.stdout)
    return 0


def _read_pool(path: str) -> list[MatrixCode]:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    pool = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            pool.append(code_from_record(json.loads(line)))
        except json.JSONDecodeError as exc:
            raise OOCError(f"{path}:{lineno}: invalid JSON ({exc.msg})") from exc
    return pool


def _pipeline_text(report: dict[str, Any]) -> str:
    p = report["params"]
    out = [
        f"params: L={p['L']} N={p['N']} w={p['w']} lambda_a<={p['lambda_a']} lambda_c<={p['lambda_c']}",
        f"candidates: {report['candidates']}",
        f"johnson bound: {report['bound']}",
        f"complete: {str(report['complete']).lower()}",
    ]
    for k, s in enumerate(report["sets"]):
        out.append(
            f"set {k}: size={s['size']} lambda_a={s['lambda_a']} lambda_c={s['lambda_c']} ids={s['ids']}"
        )
    return "\n".join(out) + "\n"


def cmd_pipeline(args: argparse.Namespace) -> int:
    pool = _read_pool(args.pool) if args.pool else None
    run = run_pipeline(
        args.L,
        args.N,
        args.w,
        args.la,
        args.lc,
        pool=pool,
        max_cliques=args.max_cliques,
        time_budget_ms=args.time_budget_ms,
        workers=_workers(),
    )
    report = set_report(run)
    if args.catalog:
        with open(args.catalog, "w", encoding="utf-8") as fh:
            fh.writelines(_dump_json(r) + "\n" for r in catalog_records(run))
    if args.format == "text":
        body = _pipeline_text(report)
    else:
        body = json.dumps(report, indent=2) + "\n"
    _emit(body, args.out)
    if args.out is not None:
        best = max((s["size"] for s in report["sets"]), default=0)
        print(
            f"bound={report['bound']} best={best} sets={len(report['sets'])} "
            f"complete={str(report['complete']).lower()}"
        )
    return 0


def _load_code(path: str, L: int | None, N: int | None) -> MatrixCode:
    with open(path, encoding="utf-8") as fh:
        text = fh.read().strip()
    if text.startswith("{"):
        try:
            return code_from_record(json.loads(text.splitlines()[0]))
        except json.JSONDecodeError as exc:
            raise OOCError(f"{path}: invalid JSON ({exc.msg})") from exc
    if L is None or N is None:
        raise OOCError(f"{path}: text codes need --L and --N")
    return parse_code(text, L, N)


def cmd_analyze(args: argparse.Namespace) -> int:
    a = _load_code(args.code_a, args.L, args.N)
    auto = auto_profile(a)
    result: dict[str, Any] = {
        "wpr": format_wpr(a),
        "dopr": format_dopr(a.dopr),
        "auto": auto.to_json(),
        "lambda_a": auto.constraint,
    }
    if args.code_b:
        b = _load_code(args.code_b, args.L, args.N)
        cross = cross_profile(a, b)
        result["cross"] = cross.to_json()
        result["lambda_c"] = cross.constraint
    if args.format == "json":
        sys.stdout.write(json.dumps(result) + "\n")
        return 0
    _write_profiles(sys.stdout, result)
    return 0


def _write_profiles(fh: TextIO, result: dict[str, Any]) -> None:
    fh.write(f"wpr: {result['wpr']}\ndopr: {result['dopr']}\n")
    fh.write(f"auto: {' '.join(map(str, result['auto']))}; lambda_a={result['lambda_a']}\n")
    if "cross" in result:
        fh.write(f"cross: {' '.join(map(str, result['cross']))}; lambda_c={result['lambda_c']}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ooc2d", description="2D optical orthogonal code sets from 1D codes")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen1d", help="enumerate canonical 1D codes as JSON lines")
    g.add_argument("--n", type=int, required=True, help="word length")
    g.add_argument("--w", type=int, required=True, help="weight")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen1d)

    p = sub.add_parser("pipeline", help="build candidates and search maximum code sets")
    p.add_argument("--L", type=int, required=True, help="rows (wavelengths)")
    p.add_argument("--N", type=int, required=True, help="columns (time slots)")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--la", type=int, required=True, help="max auto-correlation")
    p.add_argument("--lc", type=int, required=True, help="max cross-correlation")
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--max-cliques", type=int, default=None)
    p.add_argument("--time-budget-ms", type=int, default=None)
    p.add_argument("--pool", help="JSON-lines code catalog used instead of enumeration")
    p.add_argument("--catalog", help="write the filtered candidates as JSON lines")
    p.set_defaults(func=cmd_pipeline)

    a = sub.add_parser("analyze", help="correlation profiles of one or two codes")
    a.add_argument("code_a")
    a.add_argument("code_b", nargs="?")
    a.add_argument("--L", type=int)
    a.add_argument("--N", type=int)
    a.add_argument("--format", choices=("json", "text"), default="text")
    a.set_defaults(func=cmd_analyze)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OOCError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
