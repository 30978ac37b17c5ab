"""Exhaustive cross-checks, grouped into suites, for ``stacktrees verify``.

Each check takes ``max_n`` and returns a short failure description, or
``None`` when it passes.  Expensive checks clamp ``max_n`` themselves.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterator, Optional

from . import enumeration as en
from .codec import decode, encode
from .distance import bfs_distances_from, perm_distance, tree_edit_distance
from .edits import INSERT_KINDS, delete_at, insert, inserted_position
from .factors import (
    SUBTREE,
    FactorSpan,
    children_from_factor,
    classify_compact,
    compact_factors,
    complete_factors,
    is_compact,
    is_complete,
)
from .perms import (
    has_231_naive,
    is_stack_sortable,
    largest_common_pattern_bruteforce,
    lds_length,
    lis_length,
    normalize,
    pattern_occurs,
)
from .trees import (
    enumerate_subtrees,
    height,
    leaf_count,
    parent_positions,
    parse_tree,
    serialize_tree,
)

Check = Callable[[int], Optional[str]]


def _codes(max_n: int) -> Iterator[tuple]:
    for n in range(max_n + 1):
        yield from en.stack_sortable_perms(n)


def check_231_scan(max_n: int) -> str | None:
    for n in range(min(max_n, 8) + 1):
        for p in itertools.permutations(range(1, n + 1)):
            if is_stack_sortable(p) == has_231_naive(p):
                return f"stack scan disagrees with triple scan on {p}"
    return None


def check_normalize_idempotent(max_n: int) -> str | None:
    for p in _codes(max_n):
        if normalize(p) != p:
            return f"normalize moved {p}"
    return None


def check_tree_text_roundtrip(max_n: int) -> str | None:
    for n in range(max_n + 1):
        for t in en.trees_of_size(n):
            if parse_tree(serialize_tree(t)) != t:
                return f"text round trip failed for {t}"
    return None


def check_codec_roundtrip(max_n: int) -> str | None:
    for n in range(max_n + 1):
        seen = set()
        for t in en.trees_of_size(n):
            p = encode(t)
            if not is_stack_sortable(p):
                return f"encode produced 231 for {t}"
            if decode(p) != t:
                return f"decode(encode(t)) != t for {t}"
            seen.add(p)
        if len(seen) != en.catalan(n):
            return f"encode is not injective at n={n}"
    return None


def check_lis_leaves_lds_height(max_n: int) -> str | None:
    for p in _codes(max_n):
        t = decode(p)
        if lis_length(p) != leaf_count(t) or lds_length(p) != height(t):
            return f"LIS/LDS mismatch with leaves/height for {p}"
    return None


def check_subtrees_are_complete_factors(max_n: int) -> str | None:
    for p in _codes(max_n):
        factors = {frozenset(f.positions()) for f in complete_factors(p)}
        subtrees = enumerate_subtrees(decode(p))
        if factors != set(subtrees) or len(subtrees) != len(factors):
            return f"complete factors differ from subtrees for {p}"
    return None


def check_factor_implications(max_n: int) -> str | None:
    for p in _codes(max_n):
        compact = set(compact_factors(p))
        for i in range(1, len(p) + 1):
            for j in range(i, len(p) + 1):
                s = FactorSpan(i, j)
                if is_complete(p, s) and s not in compact:
                    return f"complete but not compact: {s} in {p}"
                if is_compact(p, s) != (s in compact):
                    return f"compact scan disagrees at {s} in {p}"
        for s in complete_factors(p):
            if not is_stack_sortable(normalize(s.of(p))):
                return f"complete factor {s} of {p} contains 231"
        for s in compact:
            cls = classify_compact(p, s)
            if (cls.tag == SUBTREE) != is_complete(p, s):
                return f"classification of {s} in {p} disagrees with completeness"
    return None


def check_children_remark(max_n: int) -> str | None:
    for p in _codes(max_n):
        parents = parent_positions(decode(p))
        for k in range(1, len(p) + 1):
            expected = [c for c in range(1, len(p) + 1) if parents[c - 1] == k]
            if children_from_factor(p, k) != expected:
                return f"children of edge {k} in {p} misread from the word"
    return None


def check_edit_closure_and_inverse(max_n: int) -> str | None:
    for p in _codes(max_n):
        for k in range(1, len(p) + 1):
            q = delete_at(p, k)
            if not is_stack_sortable(q):
                return f"deleting {k} from {p} gave {q}"
            back = any(
                insert(q, f, kind) == p for f in complete_factors(q) for kind in INSERT_KINDS
            ) or (not q and p == (1,))
            if not back:
                return f"no insertion undoes deleting {k} from {p}"
        for f in complete_factors(p):
            for kind in INSERT_KINDS:
                q = insert(p, f, kind)
                if not is_stack_sortable(q):
                    return f"insert-{kind} at {f} on {p} gave {q}"
                if delete_at(q, inserted_position(f, kind)) != p:
                    return f"deleting the new letter of insert-{kind} at {f} on {p} fails"
    return None


def check_neighborhood_bounds(max_n: int) -> str | None:
    for n in range(min(max_n, 8) + 1):
        report = en.neighborhood_report(n, pairwise=False)
        if not report.bounds_hold:
            return f"neighborhood bounds fail at n={n}"
    return None


def check_distance_three_way(max_n: int) -> str | None:
    limit = min(max_n, 4)
    codes = list(_codes(limit))
    for a in codes:
        bfs = bfs_distances_from(a, 2 * limit)
        for b in codes:
            r = perm_distance(a, b)
            u = largest_common_pattern_bruteforce(a, b)
            if not r.distance == bfs[b] == len(a) + len(b) - 2 * len(u):
                return f"DP/BFS/pattern disagree on {a}, {b}"
            if not (pattern_occurs(r.common, a) and pattern_occurs(r.common, b)):
                return f"common pattern {r.common} does not occur in {a}, {b}"
            if (r.distance - len(a) - len(b)) % 2:
                return f"parity broken on {a}, {b}"
    return None


def check_metric(max_n: int) -> str | None:
    limit = min(max_n, 3)
    trees = [t for n in range(limit + 1) for t in en.trees_of_size(n)]
    d = {(a, b): tree_edit_distance(a, b).distance for a in trees for b in trees}
    for a, b in itertools.product(trees, repeat=2):
        if d[a, b] != d[b, a] or (d[a, b] == 0) != (a == b):
            return f"symmetry/identity broken for {a}, {b}"
    for a, b, c in itertools.product(trees, repeat=3):
        if d[a, c] > d[a, b] + d[b, c]:
            return f"triangle inequality broken for {a}, {b}, {c}"
    return None


def check_counts(max_n: int) -> str | None:
    for n in range(1, max_n + 1):
        hist: dict[int, int] = {}
        total = 0
        for t in en.trees_of_size(n):
            total += 1
            hist[leaf_count(t)] = hist.get(leaf_count(t), 0) + 1
        if total != en.catalan(n):
            return f"generated {total} trees with {n} edges"
        for k in range(1, n + 1):
            if hist.get(k, 0) != en.narayana(n, k) or en.narayana(n, k) != en.narayana(n, n + 1 - k):
                return f"Narayana mismatch at ({n}, {k})"
    return None


def check_series(max_n: int) -> str | None:
    en.series_I(30)  # raises if recurrence and closed form disagree
    if en.series_S1(max_n) != en.s1_by_enumeration(max_n):
        return "S1 disagrees with enumeration"
    if en.series_S2(max_n) != en.s2_by_enumeration(max_n):
        return "S2 disagrees with enumeration"
    en.heights_via_continued_fraction(30)
    for n in range(1, max_n + 1):
        if en.avg_distance_to_id(n) != n - 1:
            return f"average distance to the star is not n-1 at n={n}"
    return None


SUITES: dict[str, list[tuple[str, Check]]] = {
    "perms": [
        ("231 stack scan = triple scan", check_231_scan),
        ("normalize idempotent", check_normalize_idempotent),
        ("LIS = leaves, LDS = height", check_lis_leaves_lds_height),
    ],
    "trees": [
        ("tree text round trip", check_tree_text_roundtrip),
        ("subtrees = complete factors", check_subtrees_are_complete_factors),
    ],
    "codec": [("encode/decode round trip", check_codec_roundtrip)],
    "factors": [
        ("factor implications and classes", check_factor_implications),
        ("children read from factors", check_children_remark),
    ],
    "edits": [
        ("edit closure and inverses", check_edit_closure_and_inverse),
        ("neighborhood bounds", check_neighborhood_bounds),
    ],
    "distance": [
        ("DP = BFS = pattern formula", check_distance_three_way),
        ("metric axioms", check_metric),
    ],
    "enumeration": [
        ("Catalan and Narayana counts", check_counts),
        ("series cross-checks", check_series),
    ],
}


def run_suite(name: str, max_n: int) -> list[tuple[str, str | None]]:
    names = list(SUITES) if name == "all" else [name]
    results = []
    for suite in names:
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
        for label, check in SUITES[suite]:
            results.append((f"{suite}: {label}", check(max_n)))
    return results
