"""Factors of a permutation word: compact, complete, and their tree meaning.

A complete factor is exactly the code of a subtree (a run of consecutive
siblings with everything below them).  A compact factor that is not
complete is a downward path of edges whose inner vertices have a single
child and whose last vertex is not a leaf.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .codec import decode
from .perms import Permutation, require_stack_sortable
from .trees import enumerate_subtrees, parent_positions


class FactorSpan(NamedTuple):
    """1-based inclusive positions ``start..end`` in a host word."""

    start: int
    end: int

    def __len__(self) -> int:  # type: ignore[override]
        return self.end - self.start + 1

    def of(self, p: Sequence[int]) -> Permutation:
        return tuple(p[self.start - 1 : self.end])

    def positions(self) -> range:
        return range(self.start, self.end + 1)

    def __str__(self) -> str:
        return f"{self.start}:{self.end}"


SUBTREE = "Subtree"
INTERNAL_PATH = "InternalPath"


@dataclass(frozen=True)
class CompactClass:
    tag: str
    path: tuple[int, ...] = ()  # edge positions, top to bottom, for INTERNAL_PATH


def parse_span(text: str) -> FactorSpan:
    try:
        a, b = (int(x) for x in text.split(":"))
    except ValueError:
        raise ValueError(f"span must look like i:j, got {text!r}") from None
    return FactorSpan(a, b)


def check_span(p: Sequence[int], s: FactorSpan) -> None:
    if not 1 <= s.start <= s.end <= len(p):
        raise ValueError(f"span {s} out of range for a word of length {len(p)}")


def is_compact(p: Sequence[int], s: FactorSpan) -> bool:
    check_span(p, s)
    f = s.of(p)
    return max(f) - min(f) == len(f) - 1


def is_complete(p: Sequence[int], s: FactorSpan) -> bool:
    """Compact, and no extension ``fg`` to the right is compact with the same max."""
    if not is_compact(p, s):
        return False
    top = max(s.of(p))
    lo = min(s.of(p))
    for end in range(s.end + 1, len(p) + 1):
        v = p[end - 1]
        if v > top:
            break
        lo = min(lo, v)
        if top - lo == end - s.start:
            return False
    return True


def compact_factors(p: Sequence[int]) -> list[FactorSpan]:
    out = []
    n = len(p)
    for i in range(n):
        lo = hi = p[i]
        for j in range(i, n):
            lo, hi = min(lo, p[j]), max(hi, p[j])
            if hi - lo == j - i:
                out.append(FactorSpan(i + 1, j + 1))
    return out


def _complete_spans(p: Sequence[int]) -> list[FactorSpan]:
    # for a fixed start, a compact end is complete iff no later compact end
    # shares its maximum; maxima only grow as the end moves right
    out = []
    n = len(p)
    for i in range(n):
        lo = hi = p[i]
        pending: int | None = None
        for j in range(i, n):
            if p[j] > hi and pending is not None:
                out.append(FactorSpan(i + 1, pending + 1))
                pending = None
            lo, hi = min(lo, p[j]), max(hi, p[j])
            if hi - lo == j - i:
                pending = j
        if pending is not None:
            out.append(FactorSpan(i + 1, pending + 1))
    return out


def complete_factors(p: Sequence[int]) -> list[FactorSpan]:
    """All complete factors of a 231-avoiding word, ordered by start then length."""
    require_stack_sortable(p)
    return _complete_spans(p)


def children_from_factor(p: Sequence[int], k: int) -> list[int]:
    """Positions of the child edges of edge ``k``, read off the word alone.

    Inside the shortest complete factor starting at ``k``, the children are
    the left-to-right maxima of the letters after ``p[k]`` that stay below it.
    """
    spans = [s for s in _complete_spans(p) if s.start == k]
    if not spans:
        raise ValueError(f"no complete factor starts at position {k}")
    shortest = spans[0]
    out = []
    best = 0
    for i in range(k + 1, shortest.end + 1):
        v = p[i - 1]
        if best < v < p[k - 1]:
            out.append(i)
            best = v
    return out


def classify_compact(p: Sequence[int], s: FactorSpan) -> CompactClass:
    """Decide whether a compact factor is a subtree or a bare internal path.

    The test is structural, on the decoded tree.
    """
    if not is_compact(p, s):
        raise ValueError(f"factor {s} of {tuple(p)} is not compact")
    tree = decode(tuple(p))
    edges = frozenset(s.positions())
    if edges in set(enumerate_subtrees(tree)):
        return CompactClass(SUBTREE)
    parents = parent_positions(tree)
    n_children = [0] * (len(p) + 1)
    for parent in parents:
        n_children[parent] += 1
    path = tuple(s.positions())
    for upper, lower in zip(path, path[1:]):
        if parents[lower - 1] != upper or n_children[upper] != 1:
            raise AssertionError(f"compact factor {s} of {tuple(p)} is neither kind")
    if n_children[path[-1]] == 0:
        raise AssertionError(f"compact factor {s} of {tuple(p)} ends at a leaf")
    return CompactClass(INTERNAL_PATH, path)
