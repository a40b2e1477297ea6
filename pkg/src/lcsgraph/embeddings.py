"""All-prefixes-LCSs-graph covering every LCS embedding.

Each cell of rank r > 0 points to all rank-r matches in its prefix region.
Those form a contiguous run of a contour list, so a ``head`` and a ``tail``
id suffice per cell.
"""
from __future__ import annotations

from typing import Iterator

from .sequence import MatchPoint, RankMatrix, SequenceLike, as_sequence
from .store import NIL, NodeStore


class ApgEmbeddings:
    """Frozen graph; build with :func:`build_embeddings`."""

    def __init__(self, a: bytes, b: bytes, ranks: RankMatrix, store: NodeStore,
                 head: list[int], tail: list[int], steps: int) -> None:
        self.a = a
        self.b = b
        self.ranks = ranks
        self.store = store
        self.head = head
        self.tail = tail
        self.steps = steps
        self.m = len(a)
        self.n = len(b)
        self._width = self.n + 1

    def cell(self, i: int, j: int) -> tuple[int, int, int]:
        """Return ``(rank, head, tail)`` with ``NIL`` for absent ids."""
        self.ranks.check_cell(i, j)
        k = i * self._width + j
        return self.ranks.ranks[i][j], self.head[k], self.tail[k]

    def adjacency_ids(self, i: int, j: int) -> Iterator[int]:
        self.ranks.check_cell(i, j)
        k = i * self._width + j
        node, tail, nxt = self.head[k], self.tail[k], self.store.next
        if node == NIL:
            return
        budget = len(self.store)
        while True:
            yield node
            if node == tail:
                return
            node = nxt[node]
            budget -= 1
            if node == NIL or budget < 0:
                raise RuntimeError(f"corrupt adjacency list at ({i},{j})")

    def adjacency(self, i: int, j: int) -> list[MatchPoint]:
        return [self.store.point(v) for v in self.adjacency_ids(i, j)]


def build_embeddings(a: SequenceLike, b: SequenceLike) -> ApgEmbeddings:
    a = as_sequence(a)
    b = as_sequence(b)
    m, n = len(a), len(b)
    w = n + 1
    size = (m + 1) * w
    rank = [0] * size
    head = [NIL] * size
    tail = [NIL] * size
    store = NodeStore()
    rows = store.rows
    steps = 0

    for i in range(1, m + 1):
        ai = a[i - 1]
        base = i * w
        for j in range(1, n + 1):
            k = base + j
            up = rank[k - w]
            left = rank[k - 1]
            steps += 3
            if ai == b[j - 1]:
                r = rank[k - w - 1] + 1
                node = store.new(i, j, ai)
                head[k] = tail[k] = node
                steps += 4
            else:
                node = NIL
                r = up if up >= left else left
                steps += 2
            rank[k] = r
            steps += 2
            if r == 0:
                continue
            steps += 1
            if up == r:
                steps += 1
                if node != NIL:
                    # the match goes on the front of the list above it
                    store.link(node, head[k - w])
                else:
                    head[k] = head[k - w]
                tail[k] = tail[k - w]
                steps += 2
            steps += 1
            if left != r:
                continue
            t_left = tail[k - 1]
            steps += 2
            if head[k] == NIL:
                head[k] = head[k - 1]
                tail[k] = t_left
                steps += 2
                continue
            steps += 1
            if rows[t_left] == i:
                # left list lies entirely in row i: splice it in front
                store.link(t_left, head[k])
                steps += 1
            # otherwise the left list already runs into the current one
            head[k] = head[k - 1]
            steps += 1

    store.freeze()
    ranks = RankMatrix(
        tuple(tuple(rank[i * w:(i + 1) * w]) for i in range(m + 1)), m, n
    )
    return ApgEmbeddings(a, b, ranks, store, head, tail, steps)
