"""Cross-check both graphs against the naive oracle on every prefix pair."""
from __future__ import annotations

import itertools
import random
from typing import Iterator, NamedTuple

from .distinct import build_distinct
from .embeddings import build_embeddings
from .enumerate import (
    StepCounter, count_results, enumerate_distinct, enumerate_embeddings,
)
from .oracle import (
    DEFAULT_PATH_LIMIT, dedup, greedy_anticanonical, naive_backtrace,
    regional_antidominant, regional_same_rank,
)
from .sequence import SequenceLike, as_sequence

BUILD_STEPS_PER_CELL = 40


def binary_corpus(max_len: int = 6) -> Iterator[tuple[bytes, bytes]]:
    """Every ordered pair of strings over {a, b} of length <= max_len."""
    words = [
        bytes(t)
        for k in range(max_len + 1)
        for t in itertools.product(b"ab", repeat=k)
    ]
    return itertools.product(words, repeat=2)


def random_corpus(count: int = 500, max_len: int = 12,
                  alphabet: bytes = b"abc",
                  seed: int = 20021101) -> Iterator[tuple[bytes, bytes]]:
    rng = random.Random(seed)
    for _ in range(count):
        yield tuple(
            bytes(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))
            for _ in range(2)
        )


def adversarial_pair(k: int) -> tuple[bytes, bytes]:
    """``(abc)^k`` against ``(cba)^k``: many dominant matches."""
    return b"abc" * k, b"cba" * k


def _points(pts) -> list[tuple[int, int]]:
    return [(p.row, p.col) for p in pts]


class Failure(NamedTuple):
    kind: str  # adjacency, enumeration, count, anticanonical, build, traversal
    message: str

    def __str__(self) -> str:
        return f"[{self.kind}] {self.message}"


def verify_instance(a: SequenceLike, b: SequenceLike,
                    path_limit: int = DEFAULT_PATH_LIMIT) -> list[Failure]:
    """Return every disagreement found (empty if none).

    Checks, for every cell: adjacency lists against the definitional
    regional sets, enumeration output against deduplicated naive
    backtraces, anticanonical embeddings, counts, and the construction and
    traversal step bounds.
    """
    a = as_sequence(a)
    b = as_sequence(b)
    m, n = len(a), len(b)
    gd = build_distinct(a, b)
    ge = build_embeddings(a, b)
    R = gd.ranks
    failures: list[Failure] = []

    cap = BUILD_STEPS_PER_CELL * (m + 1) * (n + 1)
    for name, g in (("distinct", gd), ("embeddings", ge)):
        if g.steps > cap:
            failures.append(Failure(
                "build", f"{name} build took {g.steps} steps > {cap}"))
    if ge.ranks != R:
        failures.append(Failure("build", "builders disagree on ranks"))

    for i in range(m + 1):
        for j in range(n + 1):
            where = f"{a!r} {b!r} cell ({i},{j})"
            if _points(gd.adjacency(i, j)) != _points(
                    regional_antidominant(R, a, b, i, j)):
                failures.append(
                    Failure("adjacency", f"{where}: distinct list"))
            if _points(ge.adjacency(i, j)) != _points(
                    regional_same_rank(R, a, b, i, j)):
                failures.append(
                    Failure("adjacency", f"{where}: embeddings list"))

            naive = naive_backtrace(R, a, b, i, j, limit=path_limit)

            cd = StepCounter()
            distinct = list(enumerate_distinct(gd, i, j, cd))
            texts = [r.text for r in distinct]
            if len(set(texts)) != len(texts):
                failures.append(
                    Failure("enumeration", f"{where}: duplicate LCS"))
            if set(texts) != {r.text for r in dedup(naive, "string")}:
                failures.append(
                    Failure("enumeration", f"{where}: distinct set"))
            for res in distinct:
                if greedy_anticanonical(a[:i], b[:j], res.text) != res:
                    failures.append(Failure(
                        "anticanonical", f"{where}: {res.text!r}"))

            ce = StepCounter()
            embeds = list(enumerate_embeddings(ge, i, j, ce))
            if len(set(embeds)) != len(embeds):
                failures.append(
                    Failure("enumeration", f"{where}: duplicate embedding"))
            if set(embeds) != set(dedup(naive, "embedding")):
                failures.append(
                    Failure("enumeration", f"{where}: embedding set"))

            for name, out, counter, g in (("distinct", distinct, cd, gd),
                                          ("embeddings", embeds, ce, ge)):
                if count_results(g, i, j) != len(out):
                    failures.append(
                        Failure("count", f"{where}: {name} count"))
                bound = 2 * (sum(len(r.text) for r in out) + len(out) + 1)
                if counter.steps > bound:
                    failures.append(Failure(
                        "traversal",
                        f"{where}: {name} took {counter.steps} > {bound}"))
    return failures
