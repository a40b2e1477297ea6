import itertools

import pytest

from lcsgraph.verify import binary_corpus, random_corpus

PAPER_A = b"bilabial"
PAPER_B = b"balaclava"


def brute_lcs_length(a: bytes, b: bytes) -> int:
    """Longest subsequence of ``a`` that is also a subsequence of ``b``."""
    def is_sub(s, t):
        it = iter(t)
        return all(c in it for c in s)

    for k in range(len(a), -1, -1):
        for idx in itertools.combinations(range(len(a)), k):
            if is_sub(bytes(a[x] for x in idx), b):
                return k
    return 0


def brute_common_lcs_strings(a: bytes, b: bytes) -> set[bytes]:
    """All distinct longest common subsequences, by exhaustive search."""
    def subs(s):
        return {bytes(s[x] for x in idx)
                for k in range(len(s) + 1)
                for idx in itertools.combinations(range(len(s)), k)}

    common = subs(a) & subs(b)
    best = max(map(len, common))
    return {s for s in common if len(s) == best}


@pytest.fixture(scope="session")
def small_corpus():
    """{a,b} pairs up to length 4 plus a handful of random {a,b,c} pairs."""
    pairs = list(binary_corpus(4))
    pairs += list(random_corpus(count=60, max_len=9, seed=7))
    pairs.append((PAPER_A, PAPER_B))
    return pairs


_acceptance_lines: list[str] = []


@pytest.fixture
def acceptance_report():
    def report(label: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] {label}"
        if detail:
            line += f" ({detail})"
        _acceptance_lines.append(line)
        assert ok, line

    return report


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
