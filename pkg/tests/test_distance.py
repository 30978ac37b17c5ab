import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import to_nested, tree_bfs_distance
from stacktrees.codec import decode, encode
from stacktrees.distance import (
    SearchCapExceeded,
    bfs_oracle_distance,
    common_pattern,
    formula_distance,
    pattern_contains,
    perm_distance,
    tree_distance_value,
    tree_edit_distance,
)
from stacktrees.enumeration import stack_sortable_perms, trees_of_size
from stacktrees.perms import (
    NotStackSortable,
    is_stack_sortable,
    largest_common_pattern_bruteforce,
    normalize,
    parse_perm,
    pattern_occurs,
)
from stacktrees.trees import chain, star

SIGMA1 = parse_perm("31264587")
SIGMA2 = parse_perm("1524376")

small_codes = [p for n in range(5) for p in stack_sortable_perms(n)]
mid_codes = [p for n in range(1, 8) for p in stack_sortable_perms(n)]


def test_worked_example():
    r = perm_distance(SIGMA1, SIGMA2)
    assert r.distance == 3
    assert len(r.common) == 6
    assert bfs_oracle_distance(SIGMA1, SIGMA2) == 3


def test_tree_entry_point():
    r = tree_edit_distance(decode(SIGMA1), decode(SIGMA2))
    assert r.distance == 3
    t = decode(SIGMA2)
    same = tree_edit_distance(t, t)
    assert same.distance == 0 and same.common == SIGMA2
    assert tree_edit_distance(star(3), chain(3)).distance == 4


def test_perm_distance_examples():
    assert perm_distance((), (1,)).distance == 1
    assert perm_distance((), ()).distance == 0
    for n in range(1, 8):
        inc, dec = tuple(range(1, n + 1)), tuple(range(n, 0, -1))
        assert perm_distance(inc, dec).distance == 2 * n - 2
    assert bfs_oracle_distance((1, 2, 3), (3, 2, 1)) == 4


def test_bfs_examples():
    assert bfs_oracle_distance((1, 2), (2, 1)) == 2
    assert bfs_oracle_distance(SIGMA2, SIGMA2) == 0
    assert bfs_oracle_distance((1,), (1, 2)) == 1
    with pytest.raises(SearchCapExceeded, match="> 3"):
        bfs_oracle_distance((1, 2, 3), (3, 2, 1), cap=3)


def test_non_sortable_rejected():
    with pytest.raises(NotStackSortable):
        perm_distance((2, 3, 1), (1,))
    with pytest.raises(NotStackSortable):
        bfs_oracle_distance((2, 3, 1), (1,))


def test_pattern_contains_examples():
    assert pattern_contains(SIGMA2, (2, 1))
    assert not pattern_contains(SIGMA2, (2, 3, 1))
    u = largest_common_pattern_bruteforce(SIGMA1, SIGMA2)
    assert pattern_contains(SIGMA1, u)
    assert pattern_contains(SIGMA2, (1, 2, 3, 4))
    assert not pattern_contains(SIGMA2, (1, 2, 3, 4, 5))


def test_pattern_contains_needs_avoiding_haystack():
    with pytest.raises(NotStackSortable):
        pattern_contains((2, 3, 1), (1,))


@pytest.mark.parametrize("a", small_codes, ids=str)
def test_pattern_contains_matches_brute_force(a):
    for b in small_codes:
        assert pattern_contains(a, b) == pattern_occurs(b, a)


@pytest.mark.parametrize("a", small_codes, ids=str)
def test_three_way_agreement_small(a):
    for b in small_codes:
        r = perm_distance(a, b)
        assert r.distance == formula_distance(a, b)
        assert r.distance == bfs_oracle_distance(a, b)


def test_dp_matches_tree_level_bfs():
    # distance by BFS over tree shapes with contract/expand moves, no permutations involved
    trees = [t for n in range(4) for t in trees_of_size(n)]
    for a, b in itertools.product(trees, repeat=2):
        assert tree_distance_value(a, b) == tree_bfs_distance(to_nested(a), to_nested(b))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(mid_codes), st.sampled_from(mid_codes))
def test_common_pattern_properties(a, b):
    r = perm_distance(a, b)
    assert r.distance == len(a) + len(b) - 2 * len(r.common)
    assert is_stack_sortable(r.common)
    assert pattern_occurs(r.common, a) and pattern_occurs(r.common, b)
    pos_a, pos_b = r.witness
    assert len(pos_a) == len(pos_b) == len(r.common)
    assert normalize(a[i - 1] for i in pos_a) == r.common
    assert normalize(b[i - 1] for i in pos_b) == r.common
    assert len(r.common) == len(largest_common_pattern_bruteforce(a, b))
    assert (r.distance - len(a) - len(b)) % 2 == 0


def test_metric_axioms_exhaustive():
    codes = small_codes
    d = {(a, b): perm_distance(a, b).distance for a in codes for b in codes}
    for a, b in itertools.product(codes, repeat=2):
        assert d[a, b] == d[b, a]
        assert (d[a, b] == 0) == (a == b)
    for a, b, c in itertools.product(codes, repeat=3):
        assert d[a, c] <= d[a, b] + d[b, c]


def test_metric_axioms_random_triples():
    rng = random.Random(20261019)
    codes = [p for n in range(5, 8) for p in stack_sortable_perms(n)]
    for _ in range(200):
        a, b, c = (rng.choice(codes) for _ in range(3))
        ab, bc, ac = (perm_distance(x, y).distance for x, y in ((a, b), (b, c), (a, c)))
        assert ac <= ab + bc
        assert ab == perm_distance(b, a).distance


def test_common_pattern_tie_break_is_deterministic():
    assert common_pattern(SIGMA1, SIGMA2) == common_pattern(SIGMA1, SIGMA2)
    assert encode(decode(common_pattern(SIGMA1, SIGMA2))) == common_pattern(SIGMA1, SIGMA2)
