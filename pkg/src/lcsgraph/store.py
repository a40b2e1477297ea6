"""Pooled contour-list nodes addressed by dense integer ids."""
from __future__ import annotations

from .sequence import MatchPoint

NIL = -1


class FrozenStoreError(RuntimeError):
    pass


class NodeStore:
    """One node per match cell, each with a single mutable ``next`` link.

    Several adjacency lists alias the same nodes, so a link written for one
    cell may later be overwritten while building another. Once ``freeze``
    is called the links are read-only.
    """

    __slots__ = ("rows", "cols", "symbols", "next", "frozen")

    def __init__(self) -> None:
        self.rows: list[int] = []
        self.cols: list[int] = []
        self.symbols: list[int] = []
        self.next: list[int] = []
        self.frozen = False

    def __len__(self) -> int:
        return len(self.rows)

    def new(self, row: int, col: int, symbol: int) -> int:
        if self.frozen:
            raise FrozenStoreError("node store is frozen")
        self.rows.append(row)
        self.cols.append(col)
        self.symbols.append(symbol)
        self.next.append(NIL)
        return len(self.rows) - 1

    def link(self, node: int, successor: int) -> None:
        if self.frozen:
            raise FrozenStoreError("node store is frozen")
        self.next[node] = successor

    def freeze(self) -> None:
        self.frozen = True

    def point(self, node: int) -> MatchPoint:
        return MatchPoint(self.rows[node], self.cols[node], self.symbols[node])
