"""Bijection between ordered trees and 231-avoiding permutations.

Edge ``k`` of a tree (k-th edge in preorder) carries letter ``p[k]`` of its
code word, the edge's rank in a postorder walk.
"""

from __future__ import annotations

from .perms import Permutation, check_perm, require_stack_sortable
from .trees import EMPTY, OrderedTree


def encode(t: OrderedTree) -> Permutation:
    """Label edges 1..n in postorder, then read the labels in preorder."""
    word: list[int] = []
    counter = 0

    def walk(node: OrderedTree) -> None:
        nonlocal counter
        for c in node.children:
            slot = len(word)
            word.append(0)
            walk(c)
            counter += 1
            word[slot] = counter

    walk(t)
    return tuple(word)


def _decode(p: Permutation, lo: int, hi: int, shift: int) -> OrderedTree:
    # p[lo:hi] holds the values shift+1 .. shift+(hi-lo)
    if lo == hi:
        return EMPTY
    top = max(range(lo, hi), key=p.__getitem__)
    left = _decode(p, lo, top, shift)
    below = _decode(p, top + 1, hi, shift + (top - lo))
    return OrderedTree(left.children + (below,))


def decode(p: Permutation) -> OrderedTree:
    """Rebuild the tree from ``p = I n J``.

    The maximum letter is the rightmost root edge; ``I`` codes the root's
    other children and ``J`` the subtree hanging below the maximum's edge.
    Raises :class:`NotStackSortable` on a word containing 231.
    """
    p = tuple(p)
    check_perm(p)
    require_stack_sortable(p)
    return _decode(p, 0, len(p), 0)
