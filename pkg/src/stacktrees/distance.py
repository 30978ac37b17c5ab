"""Edit distance between ordered trees and between their permutation codes.

The main route is the Zhang-Shasha keyroot dynamic program with unit
insert/delete costs and free matches (the trees are unlabeled, so relabeling
never costs anything).  Edges correspond to non-root vertices; the roots are
always matched by an optimal mapping, so running the node-based program on
whole trees yields the edge distance.  The backtraced mapping, read in
preorder, gives a largest common pattern of the two code words.

Two oracles live here as well: breadth-first search in the edit graph and
the brute-force pattern formula ``|a| + |b| - 2|u|``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .codec import decode, encode
from .edits import neighbors
from .perms import (
    Permutation,
    is_stack_sortable,
    largest_common_pattern_bruteforce,
    normalize,
    require_stack_sortable,
)
from .trees import OrderedTree


@dataclass(frozen=True)
class DistanceResult:
    distance: int
    common: Permutation
    # 1-based positions realizing ``common`` in each input word
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = field(default=None)


class SearchCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"> {cap}")
        self.cap = cap


class _Annotated:
    """Postorder arrays for one tree; node ``size`` is the root."""

    __slots__ = ("size", "lml", "keyroots", "preorder", "code")

    def __init__(self, t: OrderedTree):
        lml = [0]
        pre_of = [0]
        counter = [0, 0]  # postorder, preorder

        def walk(node: OrderedTree) -> int:
            my_pre = counter[1]
            counter[1] += 1
            first = None
            for c in node.children:
                leftmost = walk(c)
                if first is None:
                    first = leftmost
            counter[0] += 1
            me = counter[0]
            lml.append(me if first is None else first)
            pre_of.append(my_pre)
            return lml[me]

        walk(t)
        self.size = counter[0]
        self.lml = lml
        # preorder index 0 is the root; edge positions are the rest
        self.preorder = pre_of
        seen: set[int] = set()
        keyroots = []
        for i in range(self.size, 0, -1):
            if lml[i] not in seen:
                seen.add(lml[i])
                keyroots.append(i)
        self.keyroots = sorted(keyroots)
        self.code = encode(t)


@lru_cache(maxsize=4096)
def _annotate(t: OrderedTree) -> _Annotated:
    return _Annotated(t)


class _ZhangShasha:
    def __init__(self, t1: OrderedTree, t2: OrderedTree):
        self.a = _annotate(t1)
        self.b = _annotate(t2)
        n1, n2 = self.a.size, self.b.size
        self.td = [[0] * (n2 + 1) for _ in range(n1 + 1)]
        for i in self.a.keyroots:
            for j in self.b.keyroots:
                self._forest(i, j)

    def _forest(self, i: int, j: int) -> list[list[int]]:
        L1, L2, td = self.a.lml, self.b.lml, self.td
        li, lj = L1[i], L2[j]
        rows, cols = i - li + 2, j - lj + 2
        fd = [[0] * cols for _ in range(rows)]
        for y in range(1, cols):
            fd[0][y] = y
        for x in range(1, rows):
            a = li + x - 1
            row, prev = fd[x], fd[x - 1]
            row[0] = x
            la = L1[a]
            for y in range(1, cols):
                b = lj + y - 1
                best = prev[y] + 1
                if row[y - 1] + 1 < best:
                    best = row[y - 1] + 1
                if la == li and L2[b] == lj:
                    if prev[y - 1] < best:
                        best = prev[y - 1]
                    td[a][b] = best
                else:
                    via = fd[la - li][L2[b] - lj] + td[a][b]
                    if via < best:
                        best = via
                row[y] = best
        return fd

    def distance(self) -> int:
        return self.td[self.a.size][self.b.size]

    def mapping(self) -> list[tuple[int, int]]:
        pairs: list[tuple[int, int]] = []
        self._backtrace(self.a.size, self.b.size, pairs)
        return pairs

    def _backtrace(self, i: int, j: int, pairs: list[tuple[int, int]]) -> None:
        # tie-break: match, then delete from the first tree, then insert
        L1, L2, td = self.a.lml, self.b.lml, self.td
        li, lj = L1[i], L2[j]
        fd = self._forest(i, j)
        x, y = i - li + 1, j - lj + 1
        while x > 0 or y > 0:
            if x > 0 and y > 0:
                a, b = li + x - 1, lj + y - 1
                if L1[a] == li and L2[b] == lj:
                    if fd[x][y] == fd[x - 1][y - 1]:
                        pairs.append((a, b))
                        x, y = x - 1, y - 1
                        continue
                else:
                    bx, by = L1[a] - li, L2[b] - lj
                    if fd[x][y] == fd[bx][by] + td[a][b]:
                        self._backtrace(a, b, pairs)
                        x, y = bx, by
                        continue
            if x > 0 and fd[x][y] == fd[x - 1][y] + 1:
                x -= 1
            else:
                y -= 1


def tree_edit_distance(t1: OrderedTree, t2: OrderedTree) -> DistanceResult:
    """Unit-cost edge insert/delete distance plus a largest common pattern."""
    zs = _ZhangShasha(t1, t2)
    a, b = zs.a, zs.b
    matched = sorted(
        (a.preorder[x], b.preorder[y]) for x, y in zs.mapping() if x != a.size
    )
    pos1 = tuple(p for p, _ in matched)
    pos2 = tuple(q for _, q in matched)
    common = normalize(a.code[p - 1] for p in pos1)
    d = zs.distance()
    if d != len(a.code) + len(b.code) - 2 * len(common):
        raise AssertionError("backtrace disagrees with the distance table")
    return DistanceResult(d, common, (pos1, pos2))


def tree_distance_value(t1: OrderedTree, t2: OrderedTree) -> int:
    """Distance only, skipping the backtrace."""
    return _ZhangShasha(t1, t2).distance()


def perm_distance(a: Sequence[int], b: Sequence[int]) -> DistanceResult:
    return tree_edit_distance(decode(tuple(a)), decode(tuple(b)))


def common_pattern(a: Sequence[int], b: Sequence[int]) -> Permutation:
    """A largest common pattern of two 231-avoiding words, in polynomial time."""
    return perm_distance(a, b).common


def pattern_contains(a: Sequence[int], b: Sequence[int]) -> bool:
    """Whether ``b`` occurs as a pattern in the 231-avoiding word ``a``.

    Every pattern of an avoider is an avoider, so a needle containing 231 is
    answered ``False`` without running the dynamic program.
    """
    require_stack_sortable(a)
    if not is_stack_sortable(b):
        return False
    return len(common_pattern(a, b)) == len(b)


def formula_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """``|a| + |b| - 2|u|`` with ``u`` from exhaustive pattern search."""
    u = largest_common_pattern_bruteforce(a, b)
    return len(a) + len(b) - 2 * len(u)


@lru_cache(maxsize=None)
def _neighbors_cached(p: Permutation) -> tuple[Permutation, ...]:
    return tuple(neighbors(p))


def _size_bound(cap: int, a: Sequence[int], b: Sequence[int]) -> int:
    # a path of length <= cap that climbs to size s needs
    # (s - |a|) + (s - |b|) <= cap steps
    return (cap + len(a) + len(b)) // 2


def bfs_oracle_distance(a: Sequence[int], b: Sequence[int], cap: int = 12) -> int:
    """Shortest path from ``a`` to ``b`` in the one-edit graph.

    Bidirectional, layer by layer.  Raises :class:`SearchCapExceeded` when
    no path of length ``<= cap`` exists.
    """
    a, b = tuple(a), tuple(b)
    require_stack_sortable(a)
    require_stack_sortable(b)
    if a == b:
        return 0
    limit = _size_bound(cap, a, b)
    dist = ({a: 0}, {b: 0})
    frontier = ([a], [b])
    depth = [0, 0]
    while frontier[0] and frontier[1] and depth[0] + depth[1] < cap:
        side = 0 if len(frontier[0]) <= len(frontier[1]) else 1
        mine, other = dist[side], dist[1 - side]
        depth[side] += 1
        best = None
        nxt = []
        for p in frontier[side]:
            for q in _neighbors_cached(p):
                if len(q) > limit or q in mine:
                    continue
                mine[q] = depth[side]
                nxt.append(q)
                if q in other:
                    total = depth[side] + other[q]
                    if best is None or total < best:
                        best = total
        if best is not None:
            return best
        frontier = (nxt, frontier[1]) if side == 0 else (frontier[0], nxt)
    raise SearchCapExceeded(cap)


def bfs_distances_from(source: Sequence[int], max_size: int) -> dict[Permutation, int]:
    """Single-source distances over all words of length ``<= max_size``."""
    source = tuple(source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        p = queue.popleft()
        for q in _neighbors_cached(p):
            if len(q) <= max_size and q not in dist:
                dist[q] = dist[p] + 1
                queue.append(q)
    return dist
