"""Command line: ``cmc charpolys | group | search | verify | family``.

Exit status is 0 on success (or an equal verdict), 1 when a verification
fails, 2 for usage errors and 3 for I/O or parse errors.
"""
from __future__ import annotations

import argparse
import logging
import re
import sys
from pathlib import Path

from .cospectral import CoalescenceSpec, hosoya_vector
from .charpoly import DeletionCache
from .families import generate_pair, parse_params, verify_pair
from .formats import FormatError
from .graph import Graph, Graph6Error, graph6_decode, path_graph
from .pipeline import list_charpolys, search_file, sort_sidecar, summary_text

OK, FAILED, USAGE, IO_ERROR = 0, 1, 2, 3

log = logging.getLogger("cmc")


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    body = text.strip().strip("()[]")
    try:
        return tuple(int(x) for x in re.split(r"[,\s]+", body) if x)
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_graph(text: str) -> Graph:
    """``P8`` / ``P_8`` for a path, otherwise a graph6 string."""
    m = re.fullmatch(r"[Pp]_?(\d+)", text.strip())
    if m:
        return path_graph(int(m.group(1)))
    try:
        return graph6_decode(text.strip())
    except Graph6Error as exc:
        raise UsageError(f"bad graph {text!r}: {exc}") from None


def _fmt(t) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def cmd_charpolys(args) -> int:
    out = list_charpolys(args.input, args.output)
    print(out)
    return OK


def cmd_group(args) -> int:
    out = sort_sidecar(args.input, args.output)
    print(out)
    return OK


def cmd_search(args) -> int:
    if args.mse < 1:
        raise UsageError("mse must be at least 1")
    if args.max_k is not None and args.max_k < 1:
        raise UsageError("--max-k must be at least 1")
    report = search_file(args.input, args.mse, args.out_dir, args.max_k, args.jobs,
                         args.dedup_automorphisms)
    sys.stdout.write(summary_text(report))
    return OK


def cmd_verify(args) -> int:
    g = parse_graph(args.graph)
    sel1, sel2 = _ints(args.selection1), _ints(args.selection2)
    sig = _ints(args.signature) if args.signature else (1,) * len(sel1)
    try:
        s1 = CoalescenceSpec(g, sel1, sig)
        s2 = CoalescenceSpec(g, sel2, sig)
    except (ValueError, IndexError) as exc:
        raise UsageError(str(exc)) from None
    cache = DeletionCache(g)
    v1, v2 = hosoya_vector(s1, cache), hosoya_vector(s2, cache)
    for name, vec in (("first", v1), ("second", v2)):
        print(f"{name}:")
        for l, p in enumerate(vec):
            print(f"  l={l}: {p}")
    equal = v1 == v2
    print("EQUAL" if equal else "NOT EQUAL")
    return OK if equal else FAILED


def cmd_family(args) -> int:
    try:
        params = parse_params(args.params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    p1, p2 = generate_pair(params)
    ok = verify_pair(p1, p2)
    verdict = "VERIFIED" if ok else "FAILED"
    print(f"P_{params.n}: {_fmt(p1.vertices)} | {_fmt(p2.vertices)} {verdict}")
    return OK if ok else FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cmc", description="Cospectral multiple coalescences.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpolys", help="characteristic polynomials of a graph6 file")
    p.add_argument("input", type=Path)
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_charpolys)

    p = sub.add_parser("group", help="sort a charpoly file so cospectral graphs are adjacent")
    p.add_argument("input", type=Path)
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("search", help="search a sorted charpoly file for cospectral coalescences")
    p.add_argument("input", type=Path)
    p.add_argument("mse", type=int, help="maximum signature entry")
    p.add_argument("--max-k", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--dedup-automorphisms", action="store_true")
    p.add_argument("--out-dir", type=Path)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="compare the Hosoya vectors of two selections")
    p.add_argument("graph", help="graph6 string or P<n>")
    p.add_argument("selection1")
    p.add_argument("selection2")
    p.add_argument("signature", nargs="?", help="defaults to all ones")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="generate and verify a path-family pair from k,m,d,a1:..:ap")
    p.add_argument("params")
    p.set_defaults(func=cmd_family)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (OSError, FormatError, Graph6Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return IO_ERROR


if __name__ == "__main__":
    sys.exit(main())
