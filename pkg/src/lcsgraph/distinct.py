"""All-prefixes-LCSs-graph restricted to distinct LCSs.

Every cell (i, j) of rank r > 0 points to the rank-r matches that are
antidominant inside the region ``a[:i]`` x ``b[:j]``. Cell adjacency lists
are excerpts of shared contour lists: an ordinary linked run from ``head``
to ``pretail`` followed by a separately recorded ``tail`` node. The link
stored in ``pretail``'s ``next`` slot is never consulted for this cell,
which is what lets neighbouring cells reuse the same nodes with different
last elements.
"""
from __future__ import annotations

from typing import Iterator

from .sequence import MatchPoint, RankMatrix, SequenceLike, as_sequence
from .store import NIL, NodeStore


class ApgDistinct:
    """Frozen graph; build with :func:`build_distinct`."""

    def __init__(self, a: bytes, b: bytes, ranks: RankMatrix, store: NodeStore,
                 head: list[int], pretail: list[int], tail: list[int],
                 steps: int) -> None:
        self.a = a
        self.b = b
        self.ranks = ranks
        self.store = store
        self.head = head
        self.pretail = pretail
        self.tail = tail
        self.steps = steps
        self.m = len(a)
        self.n = len(b)
        self._width = self.n + 1

    def cell(self, i: int, j: int) -> tuple[int, int, int, int]:
        """Return ``(rank, head, pretail, tail)`` with ``NIL`` for absent ids."""
        self.ranks.check_cell(i, j)
        k = i * self._width + j
        return (self.ranks.ranks[i][j], self.head[k], self.pretail[k],
                self.tail[k])

    def adjacency_ids(self, i: int, j: int) -> Iterator[int]:
        self.ranks.check_cell(i, j)
        k = i * self._width + j
        tail = self.tail[k]
        if tail == NIL:
            return
        node, pretail, nxt = self.head[k], self.pretail[k], self.store.next
        budget = len(self.store)
        while node != NIL:
            yield node
            if node == pretail:
                break
            node = nxt[node]
            budget -= 1
            if budget < 0:
                raise RuntimeError(f"corrupt adjacency list at ({i},{j})")
        yield tail

    def adjacency(self, i: int, j: int) -> list[MatchPoint]:
        return [self.store.point(v) for v in self.adjacency_ids(i, j)]


def build_distinct(a: SequenceLike, b: SequenceLike) -> ApgDistinct:
    a = as_sequence(a)
    b = as_sequence(b)
    m, n = len(a), len(b)
    w = n + 1
    size = (m + 1) * w
    rank = [0] * size
    head = [NIL] * size
    pretail = [NIL] * size
    tail = [NIL] * size
    store = NodeStore()
    rows = store.rows
    cols = store.cols
    steps = 0

    for i in range(1, m + 1):
        ai = a[i - 1]
        base = i * w
        for j in range(1, n + 1):
            k = base + j
            steps += 1
            if ai == b[j - 1]:
                # a match is its own sole antidominant match
                rank[k] = rank[k - w - 1] + 1
                tail[k] = store.new(i, j, ai)
                steps += 3
                continue
            up = rank[k - w]
            left = rank[k - 1]
            r = up if up >= left else left
            rank[k] = r
            steps += 4
            if r == 0:
                continue
            steps += 1
            if up == r:
                head[k] = head[k - w]
                pretail[k] = pretail[k - w]
                tail[k] = tail[k - w]
                steps += 3
            steps += 1
            if left != r:
                continue
            t_up = tail[k]
            steps += 1
            if t_up == NIL:
                tail[k] = tail[k - 1]
                steps += 1
                continue
            t_left = tail[k - 1]
            same_row = rows[t_left] == rows[t_up]
            steps += 3
            # drop the left tail when the up tail repeats or shadows its row
            p = pretail[k - 1] if same_row else t_left
            steps += 1
            steps += 2
            if not same_row and cols[t_left] == cols[t_up]:
                # up tail is shadowed by the row-i left tail in its column
                tail[k] = t_left
                head[k] = NIL
                pretail[k] = NIL
                steps += 3
                continue
            steps += 1
            if p == NIL:
                head[k] = NIL
                pretail[k] = NIL
                steps += 2
            else:
                # Only a row-i pretail may take a new link. An older node
                # already carries the successor that other cells read through
                # it; here its successor is the tail, which is never read
                # through the link.
                steps += 1
                if rows[p] == i:
                    store.link(p, t_up)
                    steps += 1
                h = head[k - 1]
                head[k] = h if h != NIL else p
                pretail[k] = p
                steps += 4

    store.freeze()
    ranks = RankMatrix(
        tuple(tuple(rank[i * w:(i + 1) * w]) for i in range(m + 1)), m, n
    )
    return ApgDistinct(a, b, ranks, store, head, pretail, tail, steps)
