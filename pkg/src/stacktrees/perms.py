"""Permutations as one-line words, 231-avoidance and pattern statistics.

Permutations are plain tuples of ints over ``1..n``.  Positions exposed to
callers are 1-based.
"""

from __future__ import annotations

from bisect import bisect_left
from itertools import combinations
from typing import Iterable, Sequence

Permutation = tuple[int, ...]

BRUTE_FORCE_LIMIT = 12


class NotStackSortable(ValueError):
    """Raised when an operation needs a 231-avoiding permutation.

    ``triple`` holds the 1-based positions ``(i, j, k)`` of an occurrence of
    231, i.e. ``p[k] < p[i] < p[j]``.
    """

    def __init__(self, perm: Sequence[int], triple: tuple[int, int, int]):
        self.perm = tuple(perm)
        self.triple = triple
        i, j, k = triple
        vals = (perm[i - 1], perm[j - 1], perm[k - 1])
        super().__init__(
            f"{format_perm(perm)} contains 231 at positions {i},{j},{k} "
            f"(values {vals[0]},{vals[1]},{vals[2]})"
        )


def parse_perm(text: str) -> Permutation:
    """Parse ``"1,5,2"``, ``"1 5 2"`` or the compact form ``"152"``.

    The compact digit form is only accepted when every value is a single
    digit, so ``"1524376"`` reads as a 7-letter word.
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text or any(c.isspace() for c in text):
        parts = [s for s in text.replace(",", " ").split() if s]
    else:
        parts = list(text)
    try:
        word = tuple(int(s) for s in parts)
    except ValueError:
        raise ValueError(f"not a permutation: {text!r}") from None
    check_perm(word)
    return word


def format_perm(p: Sequence[int], sep: str | None = None) -> str:
    if sep is None:
        sep = "" if len(p) < 10 else ","
    return sep.join(str(v) for v in p)


def check_perm(p: Sequence[int]) -> None:
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {tuple(p)}")


def find_231(p: Sequence[int]) -> tuple[int, int, int] | None:
    """Return 1-based positions of some 231 occurrence, or None.

    Single stack pass: when a larger value arrives, every value it pops is a
    potential "2" with the newcomer as "3"; any later value below the largest
    popped one closes the pattern.
    """
    stack: list[int] = []  # positions, values decreasing from bottom to top
    bound = 0
    witness: tuple[int, int] | None = None
    for k, v in enumerate(p):
        if v < bound:
            assert witness is not None
            return (witness[0] + 1, witness[1] + 1, k + 1)
        while stack and p[stack[-1]] < v:
            i = stack.pop()
            if p[i] > bound:
                bound = p[i]
                witness = (i, k)
        stack.append(k)
    return None


def is_stack_sortable(p: Sequence[int]) -> bool:
    return find_231(p) is None


def require_stack_sortable(p: Sequence[int]) -> None:
    triple = find_231(p)
    if triple is not None:
        raise NotStackSortable(p, triple)


def has_231_naive(p: Sequence[int]) -> bool:
    n = len(p)
    return any(
        p[k] < p[i] < p[j]
        for i in range(n)
        for j in range(i + 1, n)
        for k in range(j + 1, n)
    )


def normalize(word: Iterable[int]) -> Permutation:
    """Relabel a word of distinct values onto ``1..len(word)`` preserving order."""
    word = tuple(word)
    rank = {v: r for r, v in enumerate(sorted(word), start=1)}
    if len(rank) != len(word):
        raise ValueError(f"repeated values in {word}")
    return tuple(rank[v] for v in word)


def _longest_increasing(values: Iterable[int]) -> int:
    tails: list[int] = []
    for v in values:
        at = bisect_left(tails, v)
        if at == len(tails):
            tails.append(v)
        else:
            tails[at] = v
    return len(tails)


def lis_length(p: Sequence[int]) -> int:
    """Length of a longest increasing subsequence (patience sorting)."""
    return _longest_increasing(p)


def lds_length(p: Sequence[int]) -> int:
    return _longest_increasing(-v for v in p)


def reverse(p: Sequence[int]) -> Permutation:
    return tuple(reversed(p))


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def decreasing(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def _guard(p: Sequence[int]) -> None:
    if len(p) > BRUTE_FORCE_LIMIT:
        raise ValueError(
            f"brute-force search limited to length {BRUTE_FORCE_LIMIT}, got {len(p)}"
        )


def patterns_of_size(p: Sequence[int], k: int) -> set[Permutation]:
    return {normalize(sub) for sub in combinations(p, k)}


def pattern_occurs(needle: Sequence[int], haystack: Sequence[int]) -> bool:
    """Exhaustive check that some subsequence of ``haystack`` normalizes to ``needle``."""
    needle = tuple(needle)
    k = len(needle)
    if k > len(haystack):
        return False
    return any(normalize(sub) == needle for sub in combinations(haystack, k))


def largest_common_pattern_bruteforce(a: Sequence[int], b: Sequence[int]) -> Permutation:
    """Lexicographically least among the longest patterns shared by ``a`` and ``b``."""
    _guard(a)
    _guard(b)
    for k in range(min(len(a), len(b)), -1, -1):
        common = patterns_of_size(a, k) & patterns_of_size(b, k)
        if common:
            return min(common)
    return ()
