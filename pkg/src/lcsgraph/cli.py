"""Command-line front end.

Exit status: 0 on success, 1 on usage errors, 2 on input errors
(unreadable file, prefix out of range, sequence too long) and 3 when
``check`` finds a disagreement with the oracle.
"""
from __future__ import annotations

import argparse
import json
import sys
from itertools import islice
from typing import Sequence, TextIO

from .distinct import build_distinct
from .embeddings import build_embeddings
from .enumerate import count_results, enumerate_results
from .oracle import DEFAULT_PATH_LIMIT, PathLimitExceeded
from .sequence import (
    InputSizeError, as_sequence, classify_matches, compute_ranks,
)
from .verify import binary_corpus, random_corpus, verify_instance

EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_CHECK_FAILED = 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="lcsgraph",
        description="List or count all longest common subsequences of two "
                    "sequences (or of any pair of their prefixes).",
    )
    parser.add_argument(
        "command",
        choices=["length", "list", "count", "graph", "matrix", "check"])
    parser.add_argument(
        "inputs", nargs="*", metavar="SEQ",
        help="two sequences: a literal argument, or @path for raw file bytes")
    parser.add_argument("--mode", choices=["distinct", "embeddings"],
                        default="distinct")
    parser.add_argument("--prefix", nargs=2, type=int, metavar=("I", "J"),
                        help="query prefixes a[:I], b[:J] (default: whole inputs)")
    parser.add_argument("--format", choices=["text", "json", "dot"],
                        help="output format (default: text; dot for graph)")
    parser.add_argument("--max-results", type=int, default=10000,
                        help="cap on listed results, 0 = unlimited "
                             "(default: %(default)s)")
    parser.add_argument("--oracle-limit", type=int, default=DEFAULT_PATH_LIMIT,
                        help="check: naive backtrace paths allowed per cell "
                             "(default: %(default)s)")
    parser.add_argument("--corpus", action="store_true",
                        help="check: run the built-in corpus instead of SEQ SEQ")
    return parser


def read_input(arg: str) -> bytes:
    if arg.startswith("@"):
        try:
            with open(arg[1:], "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {arg[1:]}: {exc.strerror}") from exc
    else:
        data = arg.encode("utf-8", "surrogateescape")
    try:
        return as_sequence(data)
    except InputSizeError as exc:
        raise InputError(str(exc)) from exc


def json_bytes(data: bytes) -> str | list[int]:
    """UTF-8 text when it decodes cleanly, else the raw byte values."""
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError:
        return list(data)


def show_bytes(data: bytes) -> str:
    return data.decode("utf-8", "backslashreplace")


def _positions(pos: tuple[int, ...]) -> str:
    return ",".join(map(str, pos))


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
         stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        return _run(build_parser().parse_intermixed_args(argv), stdout, stderr)
    except UsageError as exc:
        print(f"lcsgraph: usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"lcsgraph: {exc}", file=stderr)
        return EXIT_INPUT


def _run(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    fmt = args.format or ("dot" if args.command == "graph" else "text")
    if fmt == "dot" and args.command != "graph":
        raise UsageError("--format dot is only valid for graph")
    if args.max_results < 0:
        raise UsageError("--max-results must be nonnegative")
    if args.oracle_limit < 1:
        raise UsageError("--oracle-limit must be positive")
    if args.command == "check" and args.corpus:
        if args.inputs:
            raise UsageError("--corpus takes no sequences")
        return _check_corpus(out, err)
    if len(args.inputs) != 2:
        raise UsageError("exactly two sequences are required")

    a, b = (read_input(s) for s in args.inputs)
    i, j = args.prefix if args.prefix else (len(a), len(b))
    if not (0 <= i <= len(a) and 0 <= j <= len(b)):
        raise InputError(
            f"prefix ({i},{j}) out of range 0..{len(a)} x 0..{len(b)}")

    if args.command == "check":
        return _check(a, b, args.oracle_limit, out, err)
    if args.command == "matrix":
        _matrix(a[:i], b[:j], out)
        return 0

    g = (build_distinct if args.mode == "distinct" else build_embeddings)(a, b)
    if args.command == "length":
        length = g.ranks[i, j]
        print(json.dumps({"lcsLength": length}) if fmt == "json" else length,
              file=out)
    elif args.command == "count":
        count = count_results(g, i, j)
        print(json.dumps({"mode": args.mode, "count": count})
              if fmt == "json" else count, file=out)
    elif args.command == "list":
        _list(g, a, b, i, j, args, fmt, out)
    else:
        _graph(g, i, j, fmt, out)
    return 0


def _list(g, a, b, i, j, args, fmt, out) -> None:
    stream = enumerate_results(g, i, j)
    limit = args.max_results or None
    results = islice(stream, limit)
    if fmt == "text":
        for res in results:
            print(f"{show_bytes(res.text)}\t{_positions(res.pos_a)}\t"
                  f"{_positions(res.pos_b)}", file=out)
        return
    listed = [
        {"text": json_bytes(r.text), "posA": list(r.pos_a),
         "posB": list(r.pos_b)}
        for r in results
    ]
    truncated = limit is not None and next(stream, None) is not None
    doc = {
        "a": json_bytes(a), "b": json_bytes(b), "mode": args.mode,
        "prefixA": i, "prefixB": j, "lcsLength": g.ranks[i, j],
        "truncated": truncated, "results": listed,
    }
    json.dump(doc, out, indent=1)
    out.write("\n")


def reachable(g, i: int, j: int) -> tuple[list[int], list[int], list[tuple[int, int]]]:
    """Start nodes, every node reachable from cell (i, j), and their edges."""
    store = g.store
    start = list(g.adjacency_ids(i, j))
    seen = set(start)
    order = list(start)
    edges = []
    for v in order:
        p, q = store.rows[v] - 1, store.cols[v] - 1
        for u in g.adjacency_ids(p, q):
            edges.append((v, u))
            if u not in seen:
                seen.add(u)
                order.append(u)
    return start, order, edges


def _graph(g, i: int, j: int, fmt: str, out: TextIO) -> None:
    store = g.store
    start, nodes, edges = reachable(g, i, j)

    def name(v: int) -> str:
        return f"{store.rows[v]}_{store.cols[v]}"

    if fmt == "json":
        doc = {
            "prefixA": i, "prefixB": j, "lcsLength": g.ranks[i, j],
            "nodes": [
                {"id": name(v), "row": store.rows[v], "col": store.cols[v],
                 "symbol": json_bytes(bytes([store.symbols[v]]))}
                for v in nodes
            ],
            "start": [name(v) for v in start],
            "edges": [[name(v), name(u)] for v, u in edges],
        }
        json.dump(doc, out, indent=1)
        out.write("\n")
        return
    print("digraph lcs {", file=out)
    print('  start [shape=point];', file=out)
    for v in nodes:
        label = show_bytes(bytes([store.symbols[v]]))
        label = label.replace("\\", "\\\\").replace('"', '\\"')
        print(f'  "{name(v)}" [label="{label}({store.rows[v]},'
              f'{store.cols[v]})"];', file=out)
    for v in start:
        print(f'  start -> "{name(v)}";', file=out)
    for v, u in edges:
        print(f'  "{name(v)}" -> "{name(u)}";', file=out)
    print("}", file=out)


def render_matrix(a: bytes, b: bytes) -> str:
    """Rank grid with matches in parentheses, ``*`` dominant, ``!`` antidominant."""
    cls = classify_matches(a, b)
    R = compute_ranks(a, b)
    grid = []
    for i in range(len(a) + 1):
        row = []
        for j in range(len(b) + 1):
            r = R[i, j]
            if (i, j) in cls.rank:
                cell = f"({r})"
                cell += "*" if cls.is_dominant(i, j) else ""
                cell += "!" if cls.is_antidominant(i, j) else ""
            else:
                cell = str(r)
            row.append(cell)
        grid.append(row)
    head = [" ", " "] + [show_bytes(bytes([c])) for c in b]
    side = [" "] + [show_bytes(bytes([c])) for c in a]
    table = [head] + [[side[i]] + row for i, row in enumerate(grid)]
    width = max(len(c) for row in table for c in row)
    return "\n".join(
        " ".join(c.rjust(width) for c in row).rstrip() for row in table)


def _matrix(a: bytes, b: bytes, out: TextIO) -> None:
    print(render_matrix(a, b), file=out)


def _check(a: bytes, b: bytes, limit: int, out: TextIO, err: TextIO) -> int:
    try:
        failures = verify_instance(a, b, path_limit=limit)
    except PathLimitExceeded as exc:
        raise InputError(f"too large for the naive oracle: {exc}") from exc
    for msg in failures:
        print(msg, file=err)
    cells = (len(a) + 1) * (len(b) + 1)
    print(f"{'FAIL' if failures else 'PASS'}: {cells} prefix pairs checked, "
          f"{len(failures)} problems", file=out)
    return EXIT_CHECK_FAILED if failures else 0


def _check_corpus(out: TextIO, err: TextIO) -> int:
    total = bad = 0
    for corpus in (binary_corpus(), random_corpus()):
        for a, b in corpus:
            total += 1
            failures = verify_instance(a, b)
            if failures:
                bad += 1
                for msg in failures:
                    print(msg, file=err)
    print(f"{'FAIL' if bad else 'PASS'}: {total} instances, {bad} failing",
          file=out)
    return EXIT_CHECK_FAILED if bad else 0


if __name__ == "__main__":
    sys.exit(main())
