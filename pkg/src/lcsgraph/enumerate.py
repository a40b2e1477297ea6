"""Output-sensitive listing and exact counting of LCSs from any prefix pair.

Both graph variants expose ``ranks``, ``store`` and ``adjacency_ids``; a
backtrace repeatedly picks a node from the current cell's adjacency list
and steps diagonally to ``(row - 1, col - 1)`` until it reaches rank 0.
Every adjacency list of a positive-rank cell is nonempty, so the search
never hits a dead end and its cost is bounded by the output it produces.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, NamedTuple, Union

if TYPE_CHECKING:
    from .distinct import ApgDistinct
    from .embeddings import ApgEmbeddings

    Graph = Union[ApgDistinct, ApgEmbeddings]


class LcsResult(NamedTuple):
    text: bytes
    pos_a: tuple[int, ...]
    pos_b: tuple[int, ...]


EMPTY = LcsResult(b"", (), ())


@dataclass
class StepCounter:
    steps: int = 0


def enumerate_results(g: Graph, i: int, j: int,
                      counter: StepCounter | None = None) -> Iterator[LcsResult]:
    """Lazily yield one result per path from cell (i, j).

    Results come out in depth-first order over adjacency lists in their
    stored lower-left to upper-right order. A rank-0 cell yields a single
    empty result.
    """
    g.ranks.check_cell(i, j)
    if counter is None:
        counter = StepCounter()
    return _walk(g, i, j, counter)


def _walk(g: Graph, i: int, j: int, counter: StepCounter) -> Iterator[LcsResult]:
    L = g.ranks.ranks
    rows, cols, syms = g.store.rows, g.store.cols, g.store.symbols
    if L[i][j] == 0:
        counter.steps += 1
        yield EMPTY
        return
    # path[d] is the node chosen at depth d; stack[d] iterates its siblings
    path: list[int] = []
    stack = [g.adjacency_ids(i, j)]
    while stack:
        node = next(stack[-1], None)
        counter.steps += 1
        if node is None:
            stack.pop()
            continue
        del path[len(stack) - 1:]
        path.append(node)
        p, q = rows[node] - 1, cols[node] - 1
        if L[p][q] == 0:
            counter.steps += 1
            chosen = path[::-1]
            yield LcsResult(
                bytes(syms[v] for v in chosen),
                tuple(rows[v] for v in chosen),
                tuple(cols[v] for v in chosen),
            )
        else:
            stack.append(g.adjacency_ids(p, q))


def enumerate_distinct(g: ApgDistinct, i: int, j: int,
                       counter: StepCounter | None = None) -> Iterator[LcsResult]:
    """Each distinct LCS of ``a[:i]``, ``b[:j]`` once, anticanonically embedded."""
    return enumerate_results(g, i, j, counter)


def enumerate_embeddings(g: ApgEmbeddings, i: int, j: int,
                         counter: StepCounter | None = None) -> Iterator[LcsResult]:
    """Every LCS embedding of ``a[:i]``, ``b[:j]`` exactly once."""
    return enumerate_results(g, i, j, counter)


def count_results(g: Graph, i: int, j: int) -> int:
    """Number of paths from (i, j), i.e. the length of the enumeration.

    Counts are memoized per match node; a node's count is the number of
    paths from the cell diagonally above-left of it.
    """
    g.ranks.check_cell(i, j)
    L = g.ranks.ranks
    if L[i][j] == 0:
        return 1
    rows, cols = g.store.rows, g.store.cols
    memo: dict[int, int] = {}
    stack = list(g.adjacency_ids(i, j))
    while stack:
        v = stack[-1]
        if v in memo:
            stack.pop()
            continue
        p, q = rows[v] - 1, cols[v] - 1
        if L[p][q] == 0:
            memo[v] = 1
            stack.pop()
            continue
        below = list(g.adjacency_ids(p, q))
        pending = [u for u in below if u not in memo]
        if pending:
            stack.extend(pending)
        else:
            memo[v] = sum(memo[u] for u in below)
            stack.pop()
    return sum(memo[v] for v in g.adjacency_ids(i, j))
