"""Command-line front end.

Inputs starting with ``(`` are trees in parenthesis form; anything else is
a permutation (``1524376`` or ``1,5,2,4,3,7,6``).  Exit codes: 0 success,
1 negative answer from ``check`` or a failed ``verify``, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import enumeration as en
from .codec import decode, encode
from .distance import (
    SearchCapExceeded,
    bfs_oracle_distance,
    formula_distance,
    pattern_contains,
    perm_distance,
)
from .edits import delete_at, delete_value, insert, neighbors
from .factors import (
    classify_compact,
    compact_factors,
    complete_factors,
    is_complete,
    parse_span,
)
from .perms import (
    NotStackSortable,
    Permutation,
    find_231,
    format_perm,
    lds_length,
    lis_length,
    parse_perm,
)
from .trees import height, leaf_count, parse_tree, serialize_tree
from .verify import run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def read_perm(text: str) -> Permutation:
    """Permutation from either notation; trees are encoded."""
    if text.lstrip().startswith("("):
        return encode(parse_tree(text))
    return parse_perm(text)


def _fmt(p: Sequence[int]) -> str:
    return format_perm(p) or "()"


def _cmd_encode(args, out: TextIO) -> int:
    print(_fmt(encode(parse_tree(args.tree))), file=out)
    return 0


def _cmd_decode(args, out: TextIO) -> int:
    print(serialize_tree(decode(parse_perm(args.perm))), file=out)
    return 0


def _cmd_check(args, out: TextIO) -> int:
    p = read_perm(args.perm)
    triple = find_231(p)
    if triple is None:
        print("stack-sortable", file=out)
        return 0
    print(f"contains 231 at positions {triple[0]},{triple[1]},{triple[2]}", file=out)
    return 1


def _cmd_factors(args, out: TextIO) -> int:
    p = read_perm(args.perm)
    spans = compact_factors(p) if args.compact else complete_factors(p)
    for s in spans:
        line = f"{s}\t{_fmt(s.of(p))}"
        if args.classify:
            cls = classify_compact(p, s)
            line += f"\t{cls.tag}"
            if cls.path:
                line += " " + ",".join(map(str, cls.path))
        elif args.compact:
            line += "\tcomplete" if is_complete(p, s) else "\tcompact"
        print(line, file=out)
    return 0


def _cmd_delete(args, out: TextIO) -> int:
    p = read_perm(args.perm)
    q = delete_at(p, args.pos) if args.pos is not None else delete_value(p, args.value)
    print(_fmt(q), file=out)
    return 0


def _cmd_insert(args, out: TextIO) -> int:
    p = read_perm(args.perm)
    if not p:
        print("1", file=out)
        return 0
    if args.span is None:
        raise UsageError("--span is required for a nonempty permutation")
    print(_fmt(insert(p, parse_span(args.span), args.op)), file=out)
    return 0


def _cmd_neighbors(args, out: TextIO) -> int:
    for q in neighbors(read_perm(args.perm)):
        print(_fmt(q), file=out)
    return 0


def _cmd_distance(args, out: TextIO) -> int:
    a, b = read_perm(args.a), read_perm(args.b)
    if args.oracle == "bfs":
        try:
            print(bfs_oracle_distance(a, b, args.cap), file=out)
        except SearchCapExceeded as exc:
            print(str(exc), file=out)
        return 0
    if args.oracle == "pattern":
        print(formula_distance(a, b), file=out)
        return 0
    r = perm_distance(a, b)
    print(r.distance, file=out)
    if args.trace:
        print(f"common {_fmt(r.common)}", file=out)
        if r.witness:
            for label, pos in zip("ab", r.witness):
                print(f"positions {label} {','.join(map(str, pos)) or '-'}", file=out)
    return 0


def _cmd_pattern(args, out: TextIO) -> int:
    a, b = read_perm(args.a), read_perm(args.b)
    r = perm_distance(a, b)
    print(_fmt(r.common), file=out)
    print(f"contains {'yes' if pattern_contains(a, b) else 'no'}", file=out)
    return 0


def _cmd_stats(args, out: TextIO) -> int:
    p = read_perm(args.perm)
    t = decode(p)
    for key, value in (
        ("lis", lis_length(p)),
        ("lds", lds_length(p)),
        ("leaves", leaf_count(t)),
        ("height", height(t)),
    ):
        print(f"{key} {value}", file=out)
    return 0


def _cmd_series(args, out: TextIO) -> int:
    n = args.n
    if args.kind == "i":
        table = en.series_I(n)
    elif args.kind == "s1":
        table = en.series_S1(n)
    elif args.kind == "s2":
        table = en.series_S2(n)
    elif args.kind == "d":
        table = en.table_D(n)
    else:
        table = en.SeriesTable(
            ("n", "k"),
            (n, n),
            {(m, k): en.narayana(m, k) for m in range(1, n + 1) for k in range(1, m + 1)},
        )
    print(table.to_json() if args.json else table.to_text(), file=out)
    return 0


def _cmd_avg(args, out: TextIO) -> int:
    if args.target == "id":
        value = en.avg_distance_to_id(args.n, "series" if args.n > en.TREE_CAP else "exhaustive")
        print(value, file=out)
        return 0
    value = en.avg_distance_to_chain(args.n)
    print(f"{value} ~ {float(value):.6f}", file=out)
    asym = 2 * (args.n - en.asymptotic_height(args.n))
    print(f"asymptotic 2(n - sqrt(pi n) + 1/2) = {asym:.6f}", file=out)
    return 0


def _cmd_verify(args, out: TextIO) -> int:
    failed = 0
    for label, problem in run_suite(args.suite, args.max_n):
        if problem is None:
            print(f"PASS {label}", file=out)
        else:
            failed += 1
            print(f"FAIL {label}: {problem}", file=out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stacktrees", description=__doc__.splitlines()[0])
    parser.add_argument("--out", help="write output to FILE instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("encode", help="tree -> permutation")
    p.add_argument("tree")
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="permutation -> tree")
    p.add_argument("perm")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("check", help="test 231-avoidance")
    p.add_argument("perm")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("factors", help="list complete (default) or compact factors")
    p.add_argument("perm")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--complete", action="store_true")
    kind.add_argument("--compact", action="store_true")
    p.add_argument("--classify", action="store_true", help="tag Subtree / InternalPath")
    p.set_defaults(func=_cmd_factors)

    p = sub.add_parser("delete", help="delete one letter and renormalize")
    p.add_argument("perm")
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument("--pos", type=int)
    where.add_argument("--value", type=int)
    p.set_defaults(func=_cmd_delete)

    p = sub.add_parser("insert", help="insert at a complete factor")
    p.add_argument("perm")
    p.add_argument("--op", choices=("inner", "left", "right"), default="inner")
    p.add_argument("--span", help="i:j, 1-based inclusive")
    p.set_defaults(func=_cmd_insert)

    p = sub.add_parser("neighbors", help="all results of one edit")
    p.add_argument("perm")
    p.set_defaults(func=_cmd_neighbors)

    p = sub.add_parser("distance", help="edit distance")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--trace", action="store_true", help="also print the common pattern")
    p.add_argument("--oracle", choices=("dp", "bfs", "pattern"), default="dp")
    p.add_argument("--cap", type=int, default=12, help="BFS depth cap")
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("pattern", help="largest common pattern")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_pattern)

    p = sub.add_parser("stats", help="lis, lds, leaves, height")
    p.add_argument("perm")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("series", help="generating function coefficients")
    p.add_argument("kind", choices=("s1", "s2", "i", "d", "narayana"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("avg", help="exact average distance")
    p.add_argument("--target", choices=("id", "chain"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_avg)

    p = sub.add_parser("verify", help="run exhaustive cross-checks")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(func=_cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.out:
            with open(args.out, "w") as fh:
                return args.func(args, fh)
        return args.func(args, stdout)
    except (UsageError, NotStackSortable, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
