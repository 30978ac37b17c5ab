"""Exact enumeration of ordered trees and the distance generating functions.

Series are returned as :class:`SeriesTable` objects with exact integer
coefficients:

* ``series_I``  -- ``[t^n p^k]`` trees with n edges and k leaves
* ``series_S1`` -- ``[t^n q^d]`` d = distance to the star ``12..n``
* ``table_D``   -- ``[x^i y^j z^k]`` i edges, height j, k leaves at depth j
* ``series_S2`` -- ``[x^n y^d]`` d = distance to the chain ``n..21``
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator

from .codec import decode, encode
from .distance import tree_distance_value
from .edits import deletion_results, insertion_results
from .perms import Permutation, lds_length, lis_length
from .series import (
    Series,
    SeriesTable,
    as_int,
    padd,
    pmul,
    ptrim,
    sadd,
    ssqrt,
)
from .trees import OrderedTree, height, leaf_count, parse_tree

TREE_CAP = 12
SERIES_CAP = 64


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    """Ordered trees with ``n`` edges and ``k`` leaves."""
    if not 1 <= k <= n:
        raise ValueError(f"narayana({n}, {k}): need 1 <= k <= n")
    return comb(n, k) * comb(n, k - 1) // n


def dyck_words(n: int) -> Iterator[str]:
    """Balanced words of length ``2n`` in lexicographic order, ``(`` before ``)``."""
    word: list[str] = []

    def extend(opened: int, closed: int) -> Iterator[str]:
        if closed == n:
            yield "".join(word)
            return
        if opened < n:
            word.append("(")
            yield from extend(opened + 1, closed)
            word.pop()
        if closed < opened:
            word.append(")")
            yield from extend(opened, closed + 1)
            word.pop()

    yield from extend(0, 0)


def trees_of_size(n: int, cap: int = TREE_CAP) -> Iterator[OrderedTree]:
    if n > cap:
        raise ValueError(f"refusing to enumerate trees with {n} > {cap} edges")
    return (parse_tree(w) for w in dyck_words(n))


def stack_sortable_perms(n: int, cap: int = TREE_CAP) -> Iterator[Permutation]:
    return (encode(t) for t in trees_of_size(n, cap))


# ---------------------------------------------------------------------------
# leaves: I(t, p) and S1(t, q)


def _series_cap(n: int) -> None:
    if n > SERIES_CAP:
        raise ValueError(f"series truncation {n} exceeds cap {SERIES_CAP}")


def i_recurrence(N: int) -> Series:
    """``I_n = p I_{n-1} + sum_{i=0}^{n-2} I_i I_{n-1-i}`` from splitting ``I n J``."""
    rows: Series = [[1]]
    for n in range(1, N + 1):
        acc = pmul([0, 1], rows[n - 1])
        for i in range(n - 1):
            acc = padd(acc, pmul(rows[i], rows[n - 1 - i]))
        rows.append(acc)
    return rows


def _closed_form_radical(N: int, shift: int) -> Series:
    """``sqrt((s-1)^2 t^2 - 2(s+1) t + 1)`` to ``t^(N+shift)``, coefficients in ``s``."""
    radicand: Series = [[1], [-2, -2], [1, -2, 1]]
    return ssqrt(radicand, N + 1 + shift)


def i_closed_form(N: int) -> Series:
    """Expand ``(1 + (1-p)t - sqrt((p-1)^2 t^2 - 2(p+1)t + 1)) / 2t``."""
    root = _closed_form_radical(N, 1)
    numer = sadd([[1], [1, -1]], [[-c for c in poly] for poly in root], N + 2)
    if ptrim(numer[0]):
        raise ArithmeticError("closed form numerator has a constant term")
    return [ptrim([as_int(Fraction(c) / 2) for c in poly]) for poly in numer[1 : N + 2]]


def series_I(N: int, check: bool = True) -> SeriesTable:
    _series_cap(N)
    rows = i_recurrence(N)
    if check and rows != i_closed_form(N):
        raise AssertionError("recurrence and closed form for I(t,p) disagree")
    return SeriesTable.from_series(("t", "p"), rows, N)


def _spread(poly: list, step: int) -> list:
    """Substitute ``q^step`` for the variable."""
    if not poly:
        return []
    out = [0] * (step * (len(poly) - 1) + 1)
    for k, c in enumerate(poly):
        out[step * k] = c
    return out


def s1_from_I(N: int) -> Series:
    """``S1 = 1 + (I(t, q^2) - 1) / q^2``, which is the leaf-count symmetry."""
    rows = i_recurrence(N)
    out: Series = [[1]]
    for poly in rows[1:]:
        if poly[0]:
            raise ArithmeticError("nonzero constant in a leaf polynomial")
        out.append(_spread(poly[1:], 2))
    return out


def s1_closed_form(N: int) -> Series:
    """Expand ``(1 + (s-1)t - sqrt((s-1)^2 t^2 - 2(s+1)t + 1)) / (2 t s)``, ``s = q^2``."""
    root = _closed_form_radical(N, 1)
    numer = sadd([[1], [-1, 1]], [[-c for c in poly] for poly in root], N + 2)
    if ptrim(numer[0]):
        raise ArithmeticError("closed form numerator has a constant term")
    out: Series = []
    for poly in numer[1 : N + 2]:
        poly = [as_int(Fraction(c) / 2) for c in poly]
        if poly and poly[0]:
            raise ArithmeticError("closed form not divisible by q^2")
        out.append(_spread(ptrim(poly[1:]), 2))
    return out


def series_S1(N: int, check: bool = True) -> SeriesTable:
    _series_cap(N)
    rows = s1_from_I(N)
    if check and rows != s1_closed_form(N):
        raise AssertionError("S1 from I(t,q^2) disagrees with its closed form")
    return SeriesTable.from_series(("t", "q"), rows, 2 * N)


def s1_by_enumeration(N: int) -> SeriesTable:
    coeffs: dict[tuple[int, ...], int] = {}
    for n in range(N + 1):
        for p in stack_sortable_perms(n):
            key = (n, 2 * (n - lis_length(p)))
            coeffs[key] = coeffs.get(key, 0) + 1
    return SeriesTable(("t", "q"), (N, 2 * N), coeffs)


# ---------------------------------------------------------------------------
# heights: D(x, y, z) and S2(x, y)


def _d_layers(N: int) -> list[dict[tuple[int, int], int]]:
    """``layers[j][(i, k)]``: trees with i edges, height j, k leaves at depth j."""
    layers: list[dict[tuple[int, int], int]] = [{}, {(i, i): 1 for i in range(1, N + 1)}]
    binom = [[comb(a, b) for b in range(N + 1)] for a in range(2 * N + 1)]
    for j in range(2, N + 1):
        by_size: dict[int, list[tuple[int, int]]] = {}
        for (i, l), c in layers[j - 1].items():
            by_size.setdefault(i, []).append((l, c))
        cur: dict[tuple[int, int], int] = {}
        for i, ls in by_size.items():
            # hang k new leaves below the l deepest leaves: C(l+k-1, k) ways
            for k in range(1, N - i + 1):
                cur[(i + k, k)] = sum(binom[l + k - 1][k] * c for l, c in ls)
        if not cur:
            break
        layers.append(cur)
    return layers


def table_D(N: int) -> SeriesTable:
    _series_cap(N)
    coeffs = {}
    for j, layer in enumerate(_d_layers(N)):
        for (i, k), c in layer.items():
            if c:
                coeffs[(i, j, k)] = c
    return SeriesTable(("x", "y", "z"), (N, N, N), coeffs)


def height_counts_from_D(N: int) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for (i, j, _k), c in table_D(N).items():
        out[(i, j)] = out.get((i, j), 0) + c
    return out


def _height_le_series(N: int) -> list[list[int]]:
    """``F[h][n]``: trees with n edges and height at most h.

    ``F_0 = 1`` and ``F_h = 1 / (1 - x F_{h-1})``, expanded through
    ``F_h = 1 + x F_{h-1} F_h``.
    """
    fs = [[1] + [0] * N]
    for _h in range(1, N + 1):
        prev = fs[-1]
        cur = [1] + [0] * N
        for k in range(1, N + 1):
            cur[k] = sum(prev[i] * cur[k - 1 - i] for i in range(k))
        fs.append(cur)
    return fs


def height_counts_cf(N: int) -> dict[tuple[int, int], int]:
    """Trees by (edges, height), as differences of continued-fraction truncations."""
    fs = _height_le_series(N)
    out = {}
    for n in range(1, N + 1):
        for h in range(1, n + 1):
            c = fs[h][n] - fs[h - 1][n]
            if c:
                out[(n, h)] = c
    return out


def heights_via_continued_fraction(N: int, check: bool = True) -> SeriesTable:
    """``[x^n y^h]`` trees by edges and height, cross-checked against ``table_D``."""
    counts = height_counts_cf(N)
    if check and counts != height_counts_from_D(N):
        raise AssertionError("continued fraction and table_D height counts disagree")
    return SeriesTable(("x", "y"), (N, N), counts)


def series_S2(N: int) -> SeriesTable:
    """``S2(x, y) = D(x y^2, 1/y^2, 1)``: exponent of y is ``2(n - height)``."""
    coeffs = {(n, 2 * (n - h)): c for (n, h), c in height_counts_from_D(N).items()}
    return SeriesTable(("x", "y"), (N, 2 * N), coeffs)


def s2_by_enumeration(N: int) -> SeriesTable:
    coeffs: dict[tuple[int, ...], int] = {}
    for n in range(1, N + 1):
        for p in stack_sortable_perms(n):
            key = (n, 2 * (n - lds_length(p)))
            coeffs[key] = coeffs.get(key, 0) + 1
    return SeriesTable(("x", "y"), (N, 2 * N), coeffs)


# ---------------------------------------------------------------------------
# averages


def avg_distance_to_id(n: int, method: str = "exhaustive") -> Fraction:
    """Mean distance from a tree with ``n`` edges to the star.

    ``exhaustive`` averages ``2(n - LIS)`` over all codes (n <= 12);
    ``series`` reads the coefficients of ``S1``; ``dp`` runs the full
    tree edit distance for every tree.
    """
    if n == 0:
        return Fraction(0)
    if method == "series":
        row = series_S1(n, check=False).row(n)
        total = sum(d * c for (d,), c in row.items())
    elif method == "exhaustive":
        total = sum(2 * (n - lis_length(p)) for p in stack_sortable_perms(n))
    elif method == "dp":
        star = decode(tuple(range(1, n + 1)))
        total = sum(tree_distance_value(t, star) for t in trees_of_size(n))
    else:
        raise ValueError(f"unknown method {method!r}")
    return Fraction(total, catalan(n))


def avg_height(n: int, method: str = "auto") -> Fraction:
    """Mean height of trees with ``n`` edges.

    ``D`` marginalizes ``table_D`` (n <= 64); ``cf`` uses the continued
    fraction, which stays cheap for a few hundred edges.
    """
    if n == 0:
        return Fraction(0)
    if method == "auto":
        method = "D" if n <= SERIES_CAP else "cf"
    if method == "D":
        counts = height_counts_from_D(n)
    elif method == "cf":
        counts = height_counts_cf(n)
    else:
        raise ValueError(f"unknown method {method!r}")
    total = sum(h * c for (m, h), c in counts.items() if m == n)
    return Fraction(total, catalan(n))


def avg_distance_to_chain(n: int, method: str = "auto") -> Fraction:
    return 2 * (n - avg_height(n, method))


def asymptotic_height(n: int) -> float:
    return math.sqrt(math.pi * n) - 0.5


# ---------------------------------------------------------------------------
# per-tree statistics and neighborhood counts


@dataclass(frozen=True)
class StatRecord:
    n: int
    code: Permutation
    leaves: int
    height: int
    lis: int
    lds: int
    dist_to_star: int
    dist_to_chain: int


def tree_stats(t: OrderedTree) -> StatRecord:
    p = encode(t)
    n = len(p)
    lis, lds = lis_length(p), lds_length(p)
    return StatRecord(
        n=n,
        code=p,
        leaves=leaf_count(t),
        height=height(t),
        lis=lis,
        lds=lds,
        dist_to_star=2 * (n - lis),
        dist_to_chain=2 * (n - lds),
    )


@dataclass
class NeighborhoodReport:
    n: int
    trees: int
    max_deletions: int
    max_insertions: int
    deletion_bound: int  # vertex count - 1
    insertion_bound: int  # 3 * vertex count ** 3
    bounds_hold: bool
    mean_pairwise_distance: Fraction | None
    log_bound: float | None

    def lines(self) -> list[str]:
        out = [
            f"n={self.n} trees={self.trees}",
            f"max distinct deletions {self.max_deletions} <= {self.deletion_bound}",
            f"max distinct insertions {self.max_insertions} <= {self.insertion_bound}",
            f"bounds hold: {self.bounds_hold}",
        ]
        if self.mean_pairwise_distance is not None:
            mean = self.mean_pairwise_distance
            out.append(f"mean pairwise distance {mean} ~ {float(mean):.4f}")
            out.append(f"n/ln(n) = {self.log_bound:.4f}" if self.log_bound else "n/ln(n) undefined")
        return out


def mean_pairwise_distance(n: int) -> Fraction:
    """Exact mean of the DP distance over all ordered pairs of n-edge trees."""
    trees = list(trees_of_size(n))
    total = 0
    for i, a in enumerate(trees):
        for b in trees[i + 1 :]:
            total += tree_distance_value(a, b)
    return Fraction(2 * total, len(trees) ** 2)


def neighborhood_report(n: int, pairwise: bool = True) -> NeighborhoodReport:
    if n > 8:
        raise ValueError("neighborhood_report is exhaustive; keep n <= 8")
    vertices = n + 1
    max_del = max_ins = 0
    ok = True
    count = 0
    for p in stack_sortable_perms(n):
        count += 1
        dels, ins = len(deletion_results(p)), len(insertion_results(p))
        max_del, max_ins = max(max_del, dels), max(max_ins, ins)
        ok = ok and dels <= vertices - 1 and ins <= 3 * vertices**3
    mean = mean_pairwise_distance(n) if pairwise else None
    log_bound = n / math.log(n) if pairwise and n > 1 else None
    return NeighborhoodReport(
        n, count, max_del, max_ins, vertices - 1, 3 * vertices**3, ok, mean, log_bound
    )
