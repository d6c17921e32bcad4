"""``nakaseq`` command line front end.

Exit codes: 0 success, 1 a ``verify`` row did not match, 2 usage or input
error, 3 the search node budget (``NAKASEQ_NODE_BUDGET``) ran out.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from .algebra import AlgebraSpecError, Indec, NakayamaAlgebra, parse_algebra_spec, parse_module
from .excseq import EnumResult, ExcSequence, NodeBudgetExceeded, enumerate_sequences, validate_sequence
from .homology import ext_dim, hom_dim
from .render import REGIONS, render_ascii, render_svg
from .suites import SUITES, rows_to_csv, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _algebra(text: str) -> NakayamaAlgebra:
    try:
        return parse_algebra_spec(text)
    except AlgebraSpecError as exc:
        raise UsageError(str(exc)) from None


def _module(A: NakayamaAlgebra, text: str) -> Indec:
    try:
        M = parse_module(text)
        return A.check(M)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like a..b, got {text!r}") from None


def _node_budget() -> int | None:
    raw = os.environ.get("NAKASEQ_NODE_BUDGET")
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"NAKASEQ_NODE_BUDGET must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nakaseq", description="Exceptional sequences of Nakayama algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_enum_args(p: argparse.ArgumentParser, witnesses: bool) -> None:
        p.add_argument("--algebra", required=True, help="e.g. selfinjective:n=4,k=2, cyclic:3,3,2, hereditary-a:3")
        p.add_argument("--mode", choices=("weak", "standard"), default="weak")
        g = p.add_mutually_exclusive_group()
        g.add_argument("--full", action="store_true", help="sequences of maximal size (default)")
        g.add_argument("--size", type=int, help="sequences of exactly this size")
        f = p.add_mutually_exclusive_group()
        f.add_argument("--json", action="store_true")
        f.add_argument("--csv", action="store_true")
        if witnesses:
            p.add_argument("--witnesses", type=int, default=None, metavar="MAX", help="emit at most MAX sequences")
        p.add_argument("--threads", type=int, default=1, help="worker processes (default 1)")
        p.add_argument("--symmetry", action="store_true", help="use rotation symmetry (selfinjective only)")

    add_enum_args(sub.add_parser("enumerate", help="list full (or fixed-size) sequences"), witnesses=True)
    add_enum_args(sub.add_parser("count", help="maximal size and number of sequences"), witnesses=False)

    v = sub.add_parser("verify", help="compare enumeration with closed formulas")
    v.add_argument("--suite", required=True, choices=SUITES)
    v.add_argument("--range", required=True, type=_range, dest="range_", metavar="A..B")
    v.add_argument("--csv", action="store_true", help="CSV output (the only format)")
    v.add_argument("--threads", type=int, default=1)

    h = sub.add_parser("hom", help="Hom and Ext dimensions between two modules")
    h.add_argument("--algebra", required=True)
    h.add_argument("--from", required=True, dest="src", metavar="T,L")
    h.add_argument("--to", required=True, dest="dst", metavar="T,L")
    h.add_argument("--ext-upto", type=int, default=1, metavar="R")

    r = sub.add_parser("render", help="draw the lattice with the Hom/Ext regions of a module")
    r.add_argument("--algebra", required=True)
    r.add_argument("--module", required=True, metavar="T,L")
    r.add_argument("--regions", default="hom,ext")
    r.add_argument("--format", choices=("svg", "ascii"), default="svg")
    r.add_argument("--out", required=True, help="output path, or - for stdout")
    return parser


def _seq_literal(mods: Sequence[Indec]) -> str:
    return " ".join(f"{M.top},{M.length}" for M in mods)


def enumeration_to_json(A: NakayamaAlgebra, mode: str, res: EnumResult) -> str:
    obj = {
        "algebra": A.spec(),
        "mode": mode,
        "maxSize": res.max_size,
        "size": res.size,
        "count": str(res.count),
    }
    if res.sequences is not None:
        obj["sequences"] = [[{"top": M.top, "len": M.length} for M in s] for s in res.sequences]
    return json.dumps(obj, separators=(",", ":"))


def load_enumeration_json(text: str) -> dict:
    """Parse enumerate's JSON output and re-validate every sequence in it."""
    obj = json.loads(text)
    A = parse_algebra_spec(obj["algebra"])
    mode = obj["mode"]
    seqs = []
    for raw in obj.get("sequences", []):
        mods = tuple(A.check(Indec(int(m["top"]), int(m["len"]))) for m in raw)
        check = validate_sequence(A, mode, mods)
        if not check.valid:
            raise ValueError(f"invalid sequence {_seq_literal(mods)}: {check.first_violation}")
        seqs.append(ExcSequence(mode, mods))
    return {
        "algebra": A,
        "mode": mode,
        "maxSize": int(obj["maxSize"]),
        "size": int(obj["size"]),
        "count": int(obj["count"]),
        "sequences": seqs,
    }


def _cmd_enumerate(args, out, witnesses: bool) -> int:
    A = _algebra(args.algebra)
    if args.threads < 1:
        raise UsageError("--threads must be >= 1")
    limit = getattr(args, "witnesses", None)
    if limit is not None and limit < 0:
        raise UsageError("--witnesses must be >= 0")
    if args.symmetry and not A.is_selfinjective:
        raise UsageError("--symmetry needs a selfinjective algebra")
    if args.size is not None and args.size < 0:
        raise UsageError("--size must be >= 0")
    res = enumerate_sequences(
        A,
        args.mode,
        materialize=witnesses,
        fixed_size=args.size,
        max_witnesses=limit,
        node_budget=_node_budget(),
        workers=args.threads,
        use_symmetry=args.symmetry,
    )
    if args.json:
        out.write(enumeration_to_json(A, args.mode, res) + "\n")
    elif args.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(("index", "size", "modules"))
        for i, s in enumerate(res.sequences or [], 1):
            w.writerow((i, len(s), _seq_literal(s.modules)))
        if not witnesses:
            w.writerow(("total", res.size, res.count))
    else:
        head = f"maxSize={res.max_size}"
        if args.size is not None:
            head += f" size={res.size}"
        out.write(f"{head} count={res.count}\n")
        for s in res.sequences or []:
            out.write(_seq_literal(s.modules) + "\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    lo, hi = args.range_
    try:
        rows = run_suite(args.suite, lo, hi, workers=max(1, args.threads))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(rows_to_csv(rows))
    return EXIT_OK if all(r.match for r in rows) else EXIT_MISMATCH


def _cmd_hom(args, out) -> int:
    A = _algebra(args.algebra)
    M, N = _module(A, args.src), _module(A, args.dst)
    if args.ext_upto < 0:
        raise UsageError("--ext-upto must be >= 0")
    parts = [f"hom={hom_dim(A, M, N)}"]
    parts += [f"ext{r}={ext_dim(A, M, N, r)}" for r in range(1, args.ext_upto + 1)]
    out.write(" ".join(parts) + "\n")
    return EXIT_OK


def _cmd_render(args, out) -> int:
    A = _algebra(args.algebra)
    M = _module(A, args.module)
    regions = [r.strip() for r in args.regions.split(",") if r.strip() and r.strip() != "none"]
    if any(r not in REGIONS for r in regions):
        raise UsageError(f"--regions takes a comma list of {', '.join(REGIONS)}")
    if not A.is_selfinjective:
        raise UsageError("render needs a selfinjective algebra")
    if regions and A.k > A.n:
        raise UsageError("regions are only available for k <= n")
    text = (render_svg if args.format == "svg" else render_ascii)(A, M, regions)
    if args.out == "-":
        out.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return EXIT_OK


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command in ("enumerate", "count"):
            return _cmd_enumerate(args, out, witnesses=args.command == "enumerate")
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "hom":
            return _cmd_hom(args, out)
        return _cmd_render(args, out)
    except UsageError as exc:
        err.write(f"nakaseq {args.command}: error: {exc}\n")
        return EXIT_USAGE
    except NodeBudgetExceeded as exc:
        err.write(f"nakaseq {args.command}: {exc}\n")
        return EXIT_BUDGET


@dataclass
class CommandResult:
    exit_code: int
    stdout: str
    stderr: str


def run_command(argv: Sequence[str]) -> CommandResult:
    """Run the CLI in-process and capture its output."""
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return CommandResult(code, out.getvalue(), err.getvalue())


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
