"""Shared brute-force helpers and strategies.

The helpers here use plain dicts and itertools only, so they stay
independent of the numpy code paths they check.
"""

from __future__ import annotations

import itertools

import pytest
from hypothesis import assume
from hypothesis import strategies as st

ACCEPTANCE_LINES: list[str] = []


def brute_degrees(n, edges):
    deg = [0] * n
    for (u, v), m in edges.items():
        deg[u - 1] += m
        deg[v - 1] += m
    return deg


def brute_is_triangular(n, edges):
    adj = {v: set() for v in range(1, n + 1)}
    for (u, v), m in edges.items():
        if m > 0:
            adj[u].add(v)
            adj[v].add(u)
    for (u, v), m in edges.items():
        if m > 0 and not any(w in adj[v] for w in adj[u] if w not in (u, v)):
            return False
    return True


def brute_graphical(degrees):
    """True iff some labelled simple graph has these degrees (full enumeration)."""
    n = len(degrees)
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        deg = [0] * n
        for bit, (i, j) in enumerate(pairs):
            if mask >> bit & 1:
                deg[i] += 1
                deg[j] += 1
        if deg == list(degrees):
            return True
    return False


@st.composite
def valid_sequences(draw, n_min=3, n_max=40, d_min=4, d_max=30):
    """Descending sequences satisfying ordering, parity and the d1 bound."""
    n = draw(st.integers(n_min, n_max))
    tail = sorted(draw(st.lists(st.integers(d_min, d_max), min_size=n - 1, max_size=n - 1)),
                  reverse=True)
    bound = sum(tail) - (n - 1)
    d1 = draw(st.integers(tail[0], min(bound, tail[0] + 2 * d_max)))
    if (d1 + sum(tail)) % 2:
        d1 = d1 + 1 if d1 + 1 <= bound else d1 - 1
    assume(tail[0] <= d1 <= bound)
    return [d1] + tail


@st.composite
def small_multigraphs(draw, max_n=6, max_m=3):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    mults = draw(st.lists(st.integers(0, max_m), min_size=len(pairs), max_size=len(pairs)))
    return n, {p: m for p, m in zip(pairs, mults) if m}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(number: int, name: str, ok: bool, detail: str = ""):
        status = "PASS" if ok else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {name}" + (f" ({detail})" if detail else ""))
        print(ACCEPTANCE_LINES[-1])
        return ok

    return record
