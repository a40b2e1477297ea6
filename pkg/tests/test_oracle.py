import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcsgraph import compute_ranks
from lcsgraph.enumerate import LcsResult
from lcsgraph.oracle import (
    PathLimitExceeded, dedup, greedy_anticanonical, is_subsequence,
    naive_backtrace, regional_antidominant, regional_same_rank,
)

from conftest import PAPER_A, PAPER_B

R_PAPER = compute_ranks(PAPER_A, PAPER_B)


def pts(points):
    return [(p.row, p.col) for p in points]


def test_naive_paper_count():
    paths = naive_backtrace(R_PAPER, PAPER_A, PAPER_B, 8, 9)
    assert len(paths) == 100
    assert len(dedup(paths, "string")) == 3
    assert len(dedup(paths, "embedding")) == 7


def test_naive_small():
    assert len(naive_backtrace(compute_ranks("abc", "abc"), "abc", "abc", 3, 3)) == 1
    paths = naive_backtrace(compute_ranks("ab", "ba"), "ab", "ba", 2, 2)
    assert sorted(r.text for r in paths) == [b"a", b"b"]


def test_naive_limit():
    a, b = b"abc" * 4, b"cba" * 4
    R = compute_ranks(a, b)
    assert len(naive_backtrace(R, a, b, 12, 12, limit=182)) == 182
    with pytest.raises(PathLimitExceeded):
        naive_backtrace(R, a, b, 12, 12, limit=181)


def test_naive_index_error():
    with pytest.raises(IndexError):
        naive_backtrace(R_PAPER, PAPER_A, PAPER_B, 9, 0)


def test_dedup_keeps_first_occurrence():
    r1 = LcsResult(b"ab", (1, 2), (1, 2))
    r2 = LcsResult(b"ab", (1, 3), (1, 2))
    r3 = LcsResult(b"ba", (2, 3), (1, 2))
    assert dedup([r1, r2, r1, r3], "string") == [r1, r3]
    assert dedup([r1, r2, r1, r3], "embedding") == [r1, r2, r3]
    assert dedup([], "string") == []
    with pytest.raises(ValueError):
        dedup([r1], "nope")


def test_regional_sets():
    assert pts(regional_antidominant(R_PAPER, PAPER_A, PAPER_B, 8, 9)) == [(8, 6), (7, 9)]
    assert pts(regional_antidominant(R_PAPER, PAPER_A, PAPER_B, 7, 5)) == [(7, 4)]
    assert pts(regional_same_rank(R_PAPER, PAPER_A, PAPER_B, 8, 9)) == [(8, 6), (7, 7), (7, 9)]
    R = compute_ranks("aa", "aaa")
    assert pts(regional_same_rank(R, "aa", "aaa", 2, 3)) == [(2, 2), (2, 3)]
    assert regional_same_rank(R_PAPER, PAPER_A, PAPER_B, 0, 4) == []
    assert regional_antidominant(R_PAPER, PAPER_A, PAPER_B, 3, 0) == []


def test_greedy_anticanonical():
    res = greedy_anticanonical(PAPER_A, PAPER_B, b"blal")
    assert res == LcsResult(b"blal", (1, 3, 7, 8), (1, 3, 4, 6))
    assert greedy_anticanonical("abc", "abc", "abc").pos_a == (1, 2, 3)
    assert greedy_anticanonical("abc", "abc", "cb") is None


@settings(max_examples=200, deadline=None)
@given(st.binary(max_size=8).map(lambda s: bytes(b"ab"[x % 2] for x in s)),
       st.binary(max_size=8).map(lambda s: bytes(b"ab"[x % 2] for x in s)),
       st.binary(max_size=4).map(lambda s: bytes(b"ab"[x % 2] for x in s)))
def test_greedy_anticanonical_props(a, b, s):
    res = greedy_anticanonical(a, b, s)
    common = is_subsequence(s, a) and is_subsequence(s, b)
    assert (res is not None) == common
    if res is not None:
        assert res.text == s
        assert bytes(a[p - 1] for p in res.pos_a) == s
        assert bytes(b[q - 1] for q in res.pos_b) == s


@settings(max_examples=100, deadline=None)
@given(st.binary(max_size=7).map(lambda s: bytes(b"abc"[x % 3] for x in s)),
       st.binary(max_size=7).map(lambda s: bytes(b"abc"[x % 3] for x in s)))
def test_naive_results_are_lcs(a, b):
    R = compute_ranks(a, b)
    for i in range(len(a) + 1):
        for j in range(len(b) + 1):
            for res in naive_backtrace(R, a, b, i, j):
                assert len(res.text) == R[i, j]
                assert is_subsequence(res.text, a[:i])
                assert is_subsequence(res.text, b[:j])
