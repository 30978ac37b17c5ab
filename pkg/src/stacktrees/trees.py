"""Unlabeled rooted ordered trees.

A tree is a vertex with an ordered tuple of child trees.  Edges are the
(parent, child) pairs; an edge is addressed either by the path of child
indices leading to its lower vertex, or by its 1-based position in a
preorder walk.  The preorder position of an edge is the position of its
letter in the encoded permutation, which is what makes the two views
interchangeable.
"""

from __future__ import annotations

from dataclasses import dataclass

EdgePath = tuple[int, ...]


class TreeParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class OrderedTree:
    children: tuple["OrderedTree", ...] = ()

    def __len__(self) -> int:
        """Number of edges."""
        return sum(1 + len(c) for c in self.children)

    def __str__(self) -> str:
        return serialize_tree(self)

    def __repr__(self) -> str:
        return f"OrderedTree({serialize_tree(self)!r})"

    def subtree_at(self, path: EdgePath) -> "OrderedTree":
        node = self
        for i in path:
            node = node.children[i]
        return node


EMPTY = OrderedTree()


def parse_tree(text: str) -> OrderedTree:
    """Parse a Dyck word where each matched ``()`` pair is one edge.

    Whitespace is ignored.
    """
    stack: list[list[OrderedTree]] = [[]]
    opened: list[int] = []
    for offset, ch in enumerate(text):
        if ch.isspace():
            continue
        if ch == "(":
            stack.append([])
            opened.append(offset)
        elif ch == ")":
            if len(stack) == 1:
                raise TreeParseError("unmatched ')'", offset)
            kids = stack.pop()
            opened.pop()
            stack[-1].append(OrderedTree(tuple(kids)))
        else:
            raise TreeParseError(f"unexpected character {ch!r}", offset)
    if opened:
        raise TreeParseError("unclosed '('", opened[-1])
    return OrderedTree(tuple(stack[0]))


def serialize_tree(t: OrderedTree) -> str:
    out: list[str] = []
    todo: list[object] = list(reversed(t.children))
    while todo:
        item = todo.pop()
        if item == ")":
            out.append(")")
            continue
        assert isinstance(item, OrderedTree)
        out.append("(")
        todo.append(")")
        todo.extend(reversed(item.children))
    return "".join(out)


def star(n: int) -> OrderedTree:
    return OrderedTree((EMPTY,) * n)


def chain(n: int) -> OrderedTree:
    t = EMPTY
    for _ in range(n):
        t = OrderedTree((t,))
    return t


def edge_count(t: OrderedTree) -> int:
    return len(t)


def vertex_count(t: OrderedTree) -> int:
    return len(t) + 1


def leaf_count(t: OrderedTree) -> int:
    """Childless non-root vertices; 0 for the root-only tree."""
    if not t.children:
        return 0
    return sum(leaf_count(c) if c.children else 1 for c in t.children)


def height(t: OrderedTree) -> int:
    if not t.children:
        return 0
    return 1 + max(height(c) for c in t.children)


def edges_preorder(t: OrderedTree) -> list[EdgePath]:
    """Edge paths in preorder; index ``i`` holds the edge at position ``i + 1``."""
    out: list[EdgePath] = []

    def walk(node: OrderedTree, path: EdgePath) -> None:
        for i, c in enumerate(node.children):
            out.append(path + (i,))
            walk(c, path + (i,))

    walk(t, ())
    return out


def enumerate_subtrees(t: OrderedTree) -> list[frozenset[int]]:
    """All edge sets whose removal leaves the root's component connected.

    Each is the downward closure of a contiguous run of sibling edges.  Edges
    are reported by preorder position.  Sorted by first edge, then size.
    """
    found: list[frozenset[int]] = []
    position = 0

    def walk(node: OrderedTree) -> None:
        nonlocal position
        spans: list[tuple[int, int]] = []
        for c in node.children:
            position += 1
            first = position
            walk(c)
            spans.append((first, position))
        for a in range(len(spans)):
            for b in range(a, len(spans)):
                found.append(frozenset(range(spans[a][0], spans[b][1] + 1)))

    walk(t)
    found.sort(key=lambda s: (min(s), len(s)))
    return found


def parent_positions(t: OrderedTree) -> list[int]:
    """``result[k - 1]`` is the preorder position of edge k's parent edge, 0 for root edges."""
    parents: list[int] = []

    def walk(node: OrderedTree, parent: int) -> None:
        for c in node.children:
            parents.append(parent)
            me = len(parents)
            walk(c, me)

    walk(t, 0)
    return parents
