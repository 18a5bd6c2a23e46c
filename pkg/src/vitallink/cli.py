"""Command line front end.

Exit codes: 0 vital (or success), 1 non-vital / not found, 2 input error,
3 internal disagreement between the three vitality predicates.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import List, Optional

from .analysis import DEFAULT_CAP, find_second_linkage
from .core import LinkageError, LinkedGraph, OracleSizeError, is_chordless
from .io import parse_linked_graph, serialize_linked_graph, to_dot
from .pathwidth import exact_pathwidth
from .truemper import (
    NotTruemperError,
    TruemperCertificate,
    embed_in_truemper,
    find_valid_partition,
    generate_truemper,
    random_truemper_minor,
)
from .xx import has_xx_linkage_minor

EXIT_VITAL = 0
EXIT_NOT_VITAL = 1
EXIT_INPUT = 2
EXIT_DISAGREE = 3


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load(path: str) -> LinkedGraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_linked_graph(text)


def _load_chordless(path: str) -> LinkedGraph:
    g = _load(path)
    if not is_chordless(g):
        raise LinkageError("linkage has chords; this command needs a chordless linkage")
    return g


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _check_one(path: str, args) -> int:
    g = _load_chordless(path)
    second = None
    vital: Optional[bool] = None
    try:
        second = find_second_linkage(g, cap=args.oracle_cap)
        vital = second is None
    except OracleSizeError:
        pass
    xx = has_xx_linkage_minor(g)
    cert: Optional[TruemperCertificate] = None
    try:
        cert = embed_in_truemper(g)
    except NotTruemperError:
        pass
    verdicts = [xx is None, cert is not None] + ([vital] if vital is not None else [])
    agree = len(set(verdicts)) == 1

    if args.json:
        print(json.dumps({
            "file": path,
            "vital": vital,
            "xx_free": xx is None,
            "truemper_n": cert.n if cert else None,
            "certificate": cert.to_dict() if cert else None,
            "second_linkage": {"path1": list(map(str, second.path1)), "path2": list(map(str, second.path2))} if second else None,
            "agree": agree,
        }))
    elif not args.quiet:
        vit = _yes(vital) if vital is not None else f"skipped ({len(g.vertices)} vertices > cap {args.oracle_cap})"
        tru = f"yes (n={cert.n})" if cert else "no"
        print(f"{path}: vital: {vit}, xx-free: {_yes(xx is None)}, truemper: {tru}")
        if second is not None:
            print("  second linkage:")
            print("    path1: " + " ".join(map(str, second.path1)))
            print("    path2: " + " ".join(map(str, second.path2)))
        if not agree:
            print("  DISAGREEMENT between predicates", file=sys.stderr)
    if args.dot:
        Path(args.dot).write_text(to_dot(g, cert), encoding="utf-8")
    if not agree:
        return EXIT_DISAGREE
    return EXIT_VITAL if verdicts[0] else EXIT_NOT_VITAL


def cmd_check(args) -> int:
    worst = EXIT_VITAL
    for path in args.files:
        try:
            code = _check_one(path, args)
        except (LinkageError, OSError) as exc:
            print(f"{path}: {exc}", file=sys.stderr)
            code = EXIT_INPUT
        worst = max(worst, code)
    return worst


def cmd_generate(args) -> int:
    g = generate_truemper(args.n)
    _emit(serialize_linked_graph(g, comment=f"double-rail graph n={args.n}"), args.out)
    if args.dot:
        Path(args.dot).write_text(to_dot(g, embed_in_truemper(g)), encoding="utf-8")
    return EXIT_VITAL


def cmd_embed(args) -> int:
    g = _load_chordless(args.file)
    try:
        cert = embed_in_truemper(g)
    except NotTruemperError as exc:
        msg = {"embedded": False, "reason": str(exc)}
        if exc.xx is not None:
            msg["xx_ops"] = [{"op": type(op).__name__, "edge": op.edge} for op in exc.xx.witness.ops]
        _emit(json.dumps(msg, indent=2) + "\n", args.out)
        return EXIT_NOT_VITAL
    _emit(json.dumps(cert.to_dict(), indent=2) + "\n", args.out)
    if args.dot:
        Path(args.dot).write_text(to_dot(g, cert), encoding="utf-8")
    return EXIT_VITAL


def cmd_pathwidth(args) -> int:
    g = _load(args.file)
    cap = args.oracle_cap if args.oracle_cap is not None else DEFAULT_CAP
    width, dec = exact_pathwidth(g, cap=cap)
    if args.json:
        print(json.dumps({"width": width, "bags": [sorted(map(str, b)) for b in dec.bags]}))
    else:
        print(width)
        if not args.quiet:
            for bag in dec.bags:
                print("  " + " ".join(sorted(map(str, bag))))
    return EXIT_VITAL


def cmd_partition(args) -> int:
    g = _load_chordless(args.file)
    part = find_valid_partition(g)
    if part is None:
        print("no valid partition")
        return EXIT_NOT_VITAL

    def show(block):
        return [f"{g.graph.endpoints[e][0]}-{g.graph.endpoints[e][1]}" for e in sorted(block)]

    if args.json:
        print(json.dumps({"A": sorted(part.block_a), "B": sorted(part.block_b)}))
    else:
        print("A: " + " ".join(show(part.block_a)))
        print("B: " + " ".join(show(part.block_b)))
    return EXIT_VITAL


def cmd_random(args) -> int:
    rng = random.Random(args.seed)
    g, _ = random_truemper_minor(args.n, rng, args.density, args.contract)
    comment = f"random linkage minor of the n={args.n} double-rail graph, seed={args.seed}, density={args.density}"
    _emit(serialize_linked_graph(g, comment=comment), args.out)
    if args.dot:
        Path(args.dot).write_text(to_dot(g), encoding="utf-8")
    return EXIT_VITAL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP, help="vertex cap for exhaustive oracles")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--dot", help="write a DOT drawing to this path")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--quiet", action="store_true")

    parser = argparse.ArgumentParser(prog="vitallink", description="Vital 2-linkage checker")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide vitality three ways")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("generate", parents=[common], help="write the double-rail graph of order n")
    p.add_argument("n", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("embed", parents=[common], help="emit an embedding certificate")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("pathwidth", parents=[common], help="exact pathwidth")
    p.add_argument("file")
    p.set_defaults(func=cmd_pathwidth)

    p = sub.add_parser("partition", parents=[common], help="find a valid rung partition")
    p.add_argument("file")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("random", parents=[common], help="sample a random linkage minor")
    p.add_argument("n", type=int)
    p.add_argument("--density", type=float, default=0.5, help="probability of keeping each rung")
    p.add_argument("--contract", type=float, default=0.3, help="probability of contracting each path edge")
    p.add_argument("--out")
    p.set_defaults(func=cmd_random)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LinkageError, OSError, ValueError, OracleSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
