import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcsgraph import (
    MAX_LENGTH, InputSizeError, as_sequence, classify_matches, compute_ranks,
)

from conftest import PAPER_A, PAPER_B, brute_lcs_length

small = st.binary(max_size=7).map(lambda s: bytes(b"abc"[x % 3] for x in s))


def test_paper_pair_length():
    R = compute_ranks(PAPER_A, PAPER_B)
    assert R.ranks[8][9] == brute_lcs_length(PAPER_A, PAPER_B) == 4
    assert R.length == 4


def test_identical_and_disjoint():
    assert compute_ranks("abc", "abc")[3, 3] == 3
    R = compute_ranks("abc", "xyz")
    assert all(v == 0 for row in R.ranks for v in row)


@pytest.mark.parametrize("a,b", [(b"", b""), (b"", b"abc"), (b"abc", b"")])
def test_empty_inputs(a, b):
    R = compute_ranks(a, b)
    assert (R.m, R.n) == (len(a), len(b))
    assert R.length == 0


def test_str_input_is_utf8():
    assert as_sequence("é") == "é".encode()


def test_size_cap():
    with pytest.raises(InputSizeError):
        as_sequence(b"x" * (MAX_LENGTH + 1))


@settings(max_examples=150, deadline=None)
@given(small, small)
def test_ranks_match_brute_force(a, b):
    R = compute_ranks(a, b)
    for i in range(len(a) + 1):
        assert R[i, 0] == 0
        for j in range(len(b) + 1):
            assert R[0, j] == 0
            if i and j:
                assert R[i, j] - R[i - 1, j] in (0, 1)
                assert R[i, j] - R[i, j - 1] in (0, 1)
    for i, j in itertools.product(range(len(a) + 1), range(len(b) + 1)):
        assert R[i, j] == brute_lcs_length(a[:i], b[:j])


def test_classify_two_crossing_matches():
    cls = classify_matches(b"ab", b"ba")
    assert cls.rank == {(1, 2): 1, (2, 1): 1}
    assert cls.dominant == cls.antidominant == {(1, 2), (2, 1)}
    assert [(p.row, p.col) for p in cls.contours[1]] == [(2, 1), (1, 2)]


def test_classify_all_equal():
    cls = classify_matches(b"aaa", b"aaa")
    contour1 = {(p.row, p.col) for p in cls.contours[1]}
    assert contour1 & cls.antidominant == {(3, 1), (1, 3)}
    for k in (1, 2, 3):
        members = {(p.row, p.col) for p in cls.contours[k]}
        assert members & cls.dominant == {(k, k)}


def test_classify_paper_pair():
    cls = classify_matches(PAPER_A, PAPER_B)
    assert len(cls.contours) == 5 and not cls.contours[0]
    assert all(cls.contours[r] for r in range(1, 5))
    both = cls.dominant & cls.antidominant
    assert both  # a match can be dominant and antidominant at once
    assert (8, 3) in both and (8, 6) in both


def _brute_flags(a, b):
    R = compute_ranks(a, b)
    pts = [(i, j) for i in range(1, len(a) + 1) for j in range(1, len(b) + 1)
           if a[i - 1] == b[j - 1]]
    dom, anti = set(), set()
    for i, j in pts:
        same = [(p, q) for p, q in pts if R[p, q] == R[i, j]]
        if not any((p == i and q < j) or (q == j and p < i) for p, q in same):
            dom.add((i, j))
        if not any((p == i and q > j) or (q == j and p > i) for p, q in same):
            anti.add((i, j))
    return dom, anti


@settings(max_examples=200, deadline=None)
@given(st.binary(max_size=10).map(lambda s: bytes(b"abc"[x % 3] for x in s)),
       st.binary(max_size=10).map(lambda s: bytes(b"abc"[x % 3] for x in s)))
def test_classification_properties(a, b):
    R = compute_ranks(a, b)
    cls = classify_matches(a, b, R)
    dom, anti = _brute_flags(a, b)
    assert cls.dominant == dom
    assert cls.antidominant == anti
    seen = set()
    for r, contour in enumerate(cls.contours):
        for p in contour:
            assert a[p.row - 1] == b[p.col - 1] == p.symbol
            assert R[p.row, p.col] == r
            seen.add((p.row, p.col))
        keys = [(p.col, -p.row) for p in contour]
        assert keys == sorted(keys)
        # walking a contour never moves down or left
        for p, q in zip(contour, contour[1:]):
            assert q.row <= p.row and q.col >= p.col
        if r >= 2:
            below = cls.contours[r - 1]
            for p in contour:
                assert any(q.row < p.row and q.col < p.col for q in below)
    assert seen == set(cls.rank)
