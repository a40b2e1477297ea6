"""Input sequences, the LCS rank matrix and match classification.

Rows index the first sequence ``a`` and columns index the second
sequence ``b``. Positions are 1-based throughout the public API; row 0
and column 0 of the rank matrix are the empty-prefix border.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Union

MAX_LENGTH = 1 << 20

SequenceLike = Union[bytes, bytearray, memoryview, str]


class InputSizeError(ValueError):
    """Raised when a sequence is longer than ``MAX_LENGTH`` symbols."""


def as_sequence(seq: SequenceLike) -> bytes:
    """Normalize input to an immutable byte string (``str`` is UTF-8 encoded)."""
    if isinstance(seq, str):
        seq = seq.encode("utf-8")
    data = bytes(seq)
    if len(data) > MAX_LENGTH:
        raise InputSizeError(
            f"sequence of length {len(data)} exceeds the cap of {MAX_LENGTH}"
        )
    return data


class MatchPoint(NamedTuple):
    row: int
    col: int
    symbol: int

    def __repr__(self) -> str:
        return f"({self.row},{self.col}):{chr(self.symbol)!r}"


@dataclass(frozen=True)
class RankMatrix:
    """``ranks[i][j]`` is the LCS length of ``a[:i]`` and ``b[:j]``."""

    ranks: tuple[tuple[int, ...], ...]
    m: int
    n: int

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.ranks[i][j]

    @property
    def length(self) -> int:
        return self.ranks[self.m][self.n]

    def check_cell(self, i: int, j: int) -> None:
        if not (0 <= i <= self.m and 0 <= j <= self.n):
            raise IndexError(
                f"cell ({i},{j}) outside 0..{self.m} x 0..{self.n}"
            )


def compute_ranks(a: SequenceLike, b: SequenceLike) -> RankMatrix:
    a = as_sequence(a)
    b = as_sequence(b)
    m, n = len(a), len(b)
    prev = [0] * (n + 1)
    rows = [tuple(prev)]
    for i in range(1, m + 1):
        ai = a[i - 1]
        cur = [0] * (n + 1)
        for j in range(1, n + 1):
            if ai == b[j - 1]:
                cur[j] = prev[j - 1] + 1
            else:
                up, left = prev[j], cur[j - 1]
                cur[j] = up if up >= left else left
        rows.append(tuple(cur))
        prev = cur
    return RankMatrix(tuple(rows), m, n)


def contour_key(p: MatchPoint) -> tuple[int, int]:
    """Sort key putting contour matches in lower-left to upper-right order."""
    return (p.col, -p.row)


@dataclass
class MatchClassification:
    rank: dict[tuple[int, int], int] = field(default_factory=dict)
    dominant: set[tuple[int, int]] = field(default_factory=set)
    antidominant: set[tuple[int, int]] = field(default_factory=set)
    # contours[r] holds the rank-r matches; contours[0] is always empty
    contours: list[list[MatchPoint]] = field(default_factory=list)

    def is_dominant(self, row: int, col: int) -> bool:
        return (row, col) in self.dominant

    def is_antidominant(self, row: int, col: int) -> bool:
        return (row, col) in self.antidominant


def classify_matches(
    a: SequenceLike, b: SequenceLike, ranks: RankMatrix | None = None
) -> MatchClassification:
    a = as_sequence(a)
    b = as_sequence(b)
    if ranks is None:
        ranks = compute_ranks(a, b)
    out = MatchClassification(contours=[[] for _ in range(ranks.length + 1)])
    # extreme column per (rank, row) and extreme row per (rank, col)
    row_min: dict[tuple[int, int], int] = {}
    row_max: dict[tuple[int, int], int] = {}
    col_min: dict[tuple[int, int], int] = {}
    col_max: dict[tuple[int, int], int] = {}
    for i in range(1, ranks.m + 1):
        for j in range(1, ranks.n + 1):
            if a[i - 1] != b[j - 1]:
                continue
            r = ranks.ranks[i][j]
            out.rank[i, j] = r
            out.contours[r].append(MatchPoint(i, j, a[i - 1]))
            row_min[r, i] = min(row_min.get((r, i), j), j)
            row_max[r, i] = max(row_max.get((r, i), j), j)
            col_min[r, j] = min(col_min.get((r, j), i), i)
            col_max[r, j] = max(col_max.get((r, j), i), i)
    for (i, j), r in out.rank.items():
        if row_min[r, i] == j and col_min[r, j] == i:
            out.dominant.add((i, j))
        if row_max[r, i] == j and col_max[r, j] == i:
            out.antidominant.add((i, j))
    for contour in out.contours:
        contour.sort(key=contour_key)
    return out
