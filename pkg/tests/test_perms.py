from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import avoiders, lis_brute
from stacktrees.perms import (
    NotStackSortable,
    find_231,
    has_231_naive,
    is_stack_sortable,
    largest_common_pattern_bruteforce,
    lds_length,
    lis_length,
    normalize,
    parse_perm,
    pattern_occurs,
    require_stack_sortable,
)

SIGMA = (1, 5, 2, 4, 3, 7, 6)


@pytest.mark.parametrize(
    "p, expected",
    [(SIGMA, True), ((2, 3, 1), False), ((), True), ((3, 1, 2, 6, 4, 5, 8, 7), True)],
)
def test_is_stack_sortable_examples(p, expected):
    assert is_stack_sortable(p) is expected


@pytest.mark.parametrize("n", range(10))
def test_stack_scan_matches_triple_scan(n):
    if n == 9:
        perms = list(permutations(range(1, 10)))[::7]
    else:
        perms = permutations(range(1, n + 1))
    for p in perms:
        assert is_stack_sortable(p) != has_231_naive(p)


def test_231_witness_is_a_real_occurrence():
    for p in permutations(range(1, 7)):
        triple = find_231(p)
        if triple is not None:
            i, j, k = triple
            assert i < j < k
            assert p[k - 1] < p[i - 1] < p[j - 1]


def test_require_stack_sortable_names_triple():
    with pytest.raises(NotStackSortable, match="positions 1,2,3"):
        require_stack_sortable((2, 3, 1))


def test_avoider_counts_are_catalan():
    assert [sum(map(is_stack_sortable, permutations(range(1, n + 1)))) for n in range(8)] == [
        1, 1, 2, 5, 14, 42, 132, 429,
    ]


@pytest.mark.parametrize(
    "word, expected",
    [((5, 2, 4, 3), (4, 1, 3, 2)), ((1, 5, 2), (1, 3, 2)), ((), ())],
)
def test_normalize(word, expected):
    assert normalize(word) == expected


@given(st.permutations(range(1, 9)))
def test_normalize_is_idempotent(p):
    assert normalize(p) == tuple(p)


@given(st.lists(st.integers(-50, 50), unique=True, max_size=10))
def test_normalize_preserves_order(word):
    out = normalize(word)
    assert sorted(out) == list(range(1, len(word) + 1))
    for i in range(len(word)):
        for j in range(len(word)):
            assert (word[i] < word[j]) == (out[i] < out[j])


def test_lis_lds_examples():
    # brute-force over all subsequences gives 4 and 3
    assert lis_length(SIGMA) == 4
    assert lds_length(SIGMA) == 3
    for n in range(1, 8):
        inc = tuple(range(1, n + 1))
        assert lis_length(inc) == n and lds_length(inc) == 1
        assert lis_length(inc[::-1]) == 1 and lds_length(inc[::-1]) == n


@given(st.lists(st.integers(1, 100), unique=True, max_size=9))
def test_lis_matches_brute_force(word):
    assert lis_length(word) == lis_brute(word)
    assert lds_length(word) == lis_brute([-v for v in word])


@pytest.mark.parametrize(
    "needle, expected",
    [((2, 1), True), ((2, 3, 1), False), ((1, 2, 3, 4), True), ((1, 2, 3, 4, 5), False)],
)
def test_pattern_occurs(needle, expected):
    assert pattern_occurs(needle, SIGMA) is expected


def test_largest_common_pattern_bruteforce():
    assert largest_common_pattern_bruteforce((1, 2, 3), (3, 2, 1)) == (1,)
    assert largest_common_pattern_bruteforce(SIGMA, SIGMA) == SIGMA
    u = largest_common_pattern_bruteforce((3, 1, 2, 6, 4, 5, 8, 7), SIGMA)
    assert len(u) == 6
    assert pattern_occurs(u, (3, 1, 2, 6, 4, 5, 8, 7)) and pattern_occurs(u, SIGMA)


def test_largest_common_pattern_is_lexicographically_least():
    # 132 and 213 share both 12 and 21 as patterns; 12 comes first
    assert largest_common_pattern_bruteforce((1, 3, 2), (2, 1, 3)) == (1, 2)


def test_bruteforce_size_guard():
    big = tuple(range(1, 14))
    with pytest.raises(ValueError, match="limited"):
        largest_common_pattern_bruteforce(big, (1,))


@given(st.sampled_from(avoiders(6)), st.sampled_from(avoiders(5)))
def test_common_pattern_occurs_in_both(a, b):
    u = largest_common_pattern_bruteforce(a, b)
    assert pattern_occurs(u, a) and pattern_occurs(u, b)


@pytest.mark.parametrize(
    "text, expected",
    [("1,5,2,4,3,7,6", SIGMA), ("1 5 2 4 3 7 6", SIGMA), ("1524376", SIGMA), ("", ()),
     ("10,9,8,7,6,5,4,3,2,1", tuple(range(10, 0, -1)))],
)
def test_parse_perm(text, expected):
    assert parse_perm(text) == expected


@pytest.mark.parametrize("text", ["1,1", "0", "13", "a"])
def test_parse_perm_rejects(text):
    with pytest.raises(ValueError):
        parse_perm(text)
