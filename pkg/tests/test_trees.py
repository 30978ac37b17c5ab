import pytest

from oracles import all_nested, from_nested
from stacktrees.codec import decode
from stacktrees.enumeration import trees_of_size
from stacktrees.trees import (
    EMPTY,
    OrderedTree,
    TreeParseError,
    chain,
    edges_preorder,
    enumerate_subtrees,
    height,
    leaf_count,
    parse_tree,
    serialize_tree,
    star,
)

FIG_TREE = "()(()(()))(())"


def test_parse_basic():
    assert parse_tree("()") == OrderedTree((EMPTY,))
    assert parse_tree("") == EMPTY
    assert len(parse_tree(FIG_TREE)) == 7
    assert parse_tree(" ( ) ( ( ) ) ") == parse_tree("()(())")


@pytest.mark.parametrize("text, offset", [(")", 0), ("(()", 0), ("()x", 2), ("())", 2)])
def test_parse_errors_carry_offset(text, offset):
    with pytest.raises(TreeParseError) as info:
        parse_tree(text)
    assert info.value.offset == offset


def test_serialize():
    assert serialize_tree(star(1)) == "()"
    assert serialize_tree(chain(2)) == "(())"
    assert serialize_tree(decode((1, 5, 2, 4, 3, 7, 6))) == FIG_TREE
    assert serialize_tree(EMPTY) == ""


@pytest.mark.parametrize("n", range(11))
def test_text_round_trip(n):
    for t in trees_of_size(n):
        assert parse_tree(serialize_tree(t)) == t


def test_generation_agrees_with_recursive_construction():
    for n in range(8):
        assert sorted(map(serialize_tree, trees_of_size(n))) == sorted(
            serialize_tree(from_nested(v)) for v in all_nested(n)
        )


def test_leaf_count_and_height():
    for n in range(1, 8):
        assert leaf_count(star(n)) == n and height(star(n)) == 1
        assert leaf_count(chain(n)) == 1 and height(chain(n)) == n
    t = parse_tree(FIG_TREE)
    assert leaf_count(t) == 4
    assert height(t) == 3
    assert leaf_count(EMPTY) == 0 and height(EMPTY) == 0


@pytest.mark.parametrize("n", range(1, 8))
def test_nonempty_trees_have_leaves(n):
    for t in trees_of_size(n):
        assert 1 <= leaf_count(t) <= n
        assert 1 <= height(t) <= n


def _brute_subtrees(t):
    """Edge sets S (by preorder position) whose complement stays connected
    to the root, found by trying every subset."""
    edges = edges_preorder(t)
    index = {path: i + 1 for i, path in enumerate(edges)}
    out = set()
    n = len(edges)
    for mask in range(1, 1 << n):
        chosen = {i + 1 for i in range(n) if mask >> i & 1}
        rest = [p for p in edges if index[p] not in chosen]
        # connected to the root: every kept edge's parent edge is kept
        if any(len(p) > 1 and index[p[:-1]] in chosen for p in rest):
            continue
        # downward closed and a contiguous sibling run at one vertex
        tops = [p for p in edges if index[p] in chosen and (len(p) == 1 or index[p[:-1]] not in chosen)]
        if len({p[:-1] for p in tops}) != 1:
            continue
        if sorted(p[-1] for p in tops) != list(range(min(p[-1] for p in tops), max(p[-1] for p in tops) + 1)):
            continue
        out.add(frozenset(chosen))
    return out


def test_enumerate_subtrees_examples():
    assert len(enumerate_subtrees(star(1))) == 1
    assert len(enumerate_subtrees(parse_tree(FIG_TREE))) == 11
    assert enumerate_subtrees(star(2)) == [frozenset({1}), frozenset({1, 2}), frozenset({2})]
    assert enumerate_subtrees(EMPTY) == []


@pytest.mark.parametrize("n", range(1, 7))
def test_enumerate_subtrees_matches_subset_search(n):
    for t in trees_of_size(n):
        found = enumerate_subtrees(t)
        assert len(found) == len(set(found))
        assert set(found) == _brute_subtrees(t)
        assert found == sorted(found, key=lambda s: (min(s), len(s)))


def test_whole_tree_is_a_subtree():
    t = parse_tree(FIG_TREE)
    assert frozenset(range(1, 8)) in enumerate_subtrees(t)
