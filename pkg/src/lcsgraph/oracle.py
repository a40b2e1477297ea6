"""Slow, definitional reference implementations used to check the graphs.

Nothing here touches the graph builders; everything is derived straight
from the rank matrix and the match/antidominance definitions.
"""
from __future__ import annotations

from typing import Iterable, Literal

from .enumerate import LcsResult
from .sequence import (
    MatchPoint, RankMatrix, SequenceLike, as_sequence, contour_key,
)

DEFAULT_PATH_LIMIT = 10 ** 6


class PathLimitExceeded(RuntimeError):
    pass


def naive_backtrace(ranks: RankMatrix, a: SequenceLike, b: SequenceLike,
                    i: int, j: int,
                    limit: int = DEFAULT_PATH_LIMIT) -> list[LcsResult]:
    """Every three-way backtrace path from (i, j), duplicates included.

    From a match cell the diagonal step adds a symbol; independently, a step
    up or left is taken whenever that neighbour has the same rank. Branches
    are tried diagonal, up, left.
    """
    a = as_sequence(a)
    b = as_sequence(b)
    ranks.check_cell(i, j)
    L = ranks.ranks
    out: list[LcsResult] = []
    # stack entries: (row, col, reversed match positions so far)
    stack: list[tuple[int, int, tuple[tuple[int, int], ...]]] = [(i, j, ())]
    while stack:
        p, q, acc = stack.pop()
        r = L[p][q]
        if r == 0:
            if len(out) >= limit:
                raise PathLimitExceeded(f"more than {limit} backtrace paths")
            out.append(_result(a, acc[::-1]))
            continue
        branches = []
        if a[p - 1] == b[q - 1]:
            branches.append((p - 1, q - 1, acc + ((p, q),)))
        if L[p - 1][q] == r:
            branches.append((p - 1, q, acc))
        if L[p][q - 1] == r:
            branches.append((p, q - 1, acc))
        stack.extend(reversed(branches))
    return out


def _result(a: bytes, pairs: Iterable[tuple[int, int]]) -> LcsResult:
    pairs = list(pairs)
    return LcsResult(
        bytes(a[p - 1] for p, _ in pairs),
        tuple(p for p, _ in pairs),
        tuple(q for _, q in pairs),
    )


def dedup(results: Iterable[LcsResult],
          key: Literal["string", "embedding"]) -> list[LcsResult]:
    """Keep the first result per key, preserving order."""
    if key == "string":
        keyfn = lambda res: res.text  # noqa: E731
    elif key == "embedding":
        keyfn = lambda res: (res.pos_a, res.pos_b)  # noqa: E731
    else:
        raise ValueError(f"unknown dedup key {key!r}")
    seen = set()
    out = []
    for res in results:
        k = keyfn(res)
        if k not in seen:
            seen.add(k)
            out.append(res)
    return out


def regional_same_rank(ranks: RankMatrix, a: SequenceLike, b: SequenceLike,
                       i: int, j: int) -> list[MatchPoint]:
    """All matches of rank ``ranks[i][j]`` with row <= i and col <= j."""
    a = as_sequence(a)
    b = as_sequence(b)
    ranks.check_cell(i, j)
    r = ranks.ranks[i][j]
    if r == 0:
        return []
    pts = [
        MatchPoint(p, q, a[p - 1])
        for p in range(1, i + 1)
        for q in range(1, j + 1)
        if a[p - 1] == b[q - 1] and ranks.ranks[p][q] == r
    ]
    return sorted(pts, key=contour_key)


def regional_antidominant(ranks: RankMatrix, a: SequenceLike, b: SequenceLike,
                          i: int, j: int) -> list[MatchPoint]:
    """Same-rank region matches with no same-rank region match sharing the
    row further right or sharing the column further down."""
    pts = regional_same_rank(ranks, a, b, i, j)
    return [
        p for p in pts
        if not any(
            (o.row == p.row and p.col < o.col <= j)
            or (o.col == p.col and p.row < o.row <= i)
            for o in pts
        )
    ]


def greedy_anticanonical(a: SequenceLike, b: SequenceLike,
                         s: SequenceLike) -> LcsResult | None:
    """Embed ``s`` taking the largest usable positions, scanning from its end.

    Returns None if ``s`` is not a common subsequence of ``a`` and ``b``.
    """
    a = as_sequence(a)
    b = as_sequence(b)
    s = as_sequence(s)
    pos_a: list[int] = []
    pos_b: list[int] = []
    pa, pb = len(a), len(b)
    for ch in reversed(s):
        while pa > 0 and a[pa - 1] != ch:
            pa -= 1
        while pb > 0 and b[pb - 1] != ch:
            pb -= 1
        if pa == 0 or pb == 0:
            return None
        pos_a.append(pa)
        pos_b.append(pb)
        pa -= 1
        pb -= 1
    return LcsResult(s, tuple(reversed(pos_a)), tuple(reversed(pos_b)))


def is_subsequence(s: bytes, seq: bytes) -> bool:
    it = iter(seq)
    return all(ch in it for ch in s)
