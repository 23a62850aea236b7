"""Exhaustive search for realizations at desk scale.

The search assigns a multiplicity to every vertex pair in lexicographic
order ``(1,2), (1,3), ..., (n-1,n)``, trying small multiplicities first.
A pair ``{u, v}`` never needs more than ``min(d_u, d_v)``, so capping there
keeps the search exhaustive. Pruning:

* a vertex whose last incident pair is being assigned gets exactly its
  residual degree;
* a vertex's residual must not exceed what its unassigned pairs can still
  carry (sum of the partners' residuals);
* in triangular mode, once row ``y`` is complete every edge ``{x, y}``
  with ``x < y`` is final and must already lie in a triangle.

This module deliberately shares nothing with the constructors or the
verifiers in :mod:`trimulti.multigraph` beyond the Multigraph container.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .errors import LimitExceeded
from .multigraph import Multigraph

DEFAULT_MAX_N = 6
DEFAULT_MAX_SUM = 40
SIMPLE_MAX_N = 8
CENSUS_MAX_N = 8


def env_limits() -> tuple[int, int]:
    """Oracle limits, overridable with TRIMULTI_ORACLE_MAX_N / TRIMULTI_ORACLE_MAX_SUM."""
    return (int(os.environ.get("TRIMULTI_ORACLE_MAX_N", DEFAULT_MAX_N)),
            int(os.environ.get("TRIMULTI_ORACLE_MAX_SUM", DEFAULT_MAX_SUM)))


@dataclass(frozen=True)
class OracleResult:
    exists: bool
    witness: Optional[Multigraph]
    nodes_explored: int
    bound_used: int  # largest per-pair cap min(d_u, d_v) over all pairs

    def __post_init__(self):
        if (self.witness is not None) != self.exists:
            raise ValueError("witness must be present exactly when a realization exists")

    def to_dict(self) -> dict:
        out = {"exists": self.exists, "nodes_explored": self.nodes_explored,
               "bound_used": self.bound_used}
        if self.witness is not None:
            out["witness"] = [list(e) for e in self.witness.edge_list()]
        return out


class _Search:
    def __init__(self, degrees: Sequence[int], cap: Optional[int], triangular: bool,
                 deadline: Optional[float]):
        self.d = list(degrees)
        self.n = len(self.d)
        n = self.n
        self.pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        self.caps = [min(self.d[i], self.d[j]) if cap is None else min(cap, self.d[i], self.d[j])
                     for i, j in self.pairs]
        self.res = list(self.d)
        self.adj = [[0] * n for _ in range(n)]
        self.triangular = triangular
        self.deadline = deadline
        self.nodes = 0
        # rows end at the pair (i, n-1); after it, edges {x, i} with x < i are final
        self.row_end = {p: i for p, (i, j) in enumerate(self.pairs) if j == n - 1}

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            raise LimitExceeded("deadline")

    def _capacity_ok(self, pos: int) -> bool:
        # for each vertex, residual <= sum of residuals of partners in unassigned pairs
        n, res = self.n, self.res
        if pos >= len(self.pairs):
            return all(r == 0 for r in res)
        i0, j0 = self.pairs[pos]
        for x in range(n):
            if res[x] == 0:
                continue
            # unassigned pairs touching x: (x, y) with (x, y) >= (i0, j0)
            room = 0
            for y in range(n):
                if y == x:
                    continue
                a, b = (x, y) if x < y else (y, x)
                if (a, b) >= (i0, j0):
                    room += res[y]
            if res[x] > room:
                return False
        return True

    def _edge_covered(self, x: int, y: int) -> bool:
        adj = self.adj
        return any(adj[x][w] and adj[y][w] for w in range(self.n) if w != x and w != y)

    def _row_ok(self, i: int) -> bool:
        # every pair involving i and any x <= i is now fixed, and so are all of x's pairs
        for x in range(i):
            if self.adj[x][i] and not self._edge_covered(x, i):
                return False
        return True

    def run(self) -> bool:
        if self.n == 0:
            return True
        if sum(self.d) % 2:
            return False
        if self.n == 1:
            return self.d[0] == 0
        return self._dfs(0)

    def _dfs(self, pos: int) -> bool:
        self._tick()
        if pos == len(self.pairs):
            if any(self.res):
                return False
            return not self.triangular or self._row_ok(self.n - 1)
        i, j = self.pairs[pos]
        res, adj = self.res, self.adj
        hi = min(res[i], res[j], self.caps[pos])
        lo = 0
        if j == self.n - 1:
            # last pair of row i: it must absorb i's residual
            if res[i] > hi:
                return False
            lo = hi = res[i]
        for m in range(lo, hi + 1):
            res[i] -= m
            res[j] -= m
            adj[i][j] = adj[j][i] = m
            ok = True
            if pos in self.row_end and self.triangular and not self._row_ok(i):
                ok = False
            if ok and self._capacity_ok(pos + 1) and self._dfs(pos + 1):
                return True
            res[i] += m
            res[j] += m
            adj[i][j] = adj[j][i] = 0
        return False

    def witness(self) -> Multigraph:
        edges = [(i + 1, j + 1, self.adj[i][j]) for i, j in self.pairs if self.adj[i][j]]
        return Multigraph(self.n, edges)


def _self_check(g: Multigraph, degrees: Sequence[int], triangular: bool) -> None:
    deg = [0] * g.n
    nbrs = [set() for _ in range(g.n)]
    for u, v, m in g.edge_list():
        deg[u - 1] += m
        deg[v - 1] += m
        nbrs[u - 1].add(v - 1)
        nbrs[v - 1].add(u - 1)
    assert deg == list(degrees), "oracle witness has wrong degrees"
    if triangular:
        for u, v, _ in g.edge_list():
            assert nbrs[u - 1] & nbrs[v - 1], "oracle witness is not triangular"


def _search(degrees, cap, triangular, deadline_s) -> OracleResult:
    deadline = None if deadline_s is None else time.monotonic() + deadline_s
    s = _Search(degrees, cap, triangular, deadline)
    found = s.run()
    witness = s.witness() if found else None
    if witness is not None:
        _self_check(witness, degrees, triangular)
    bound = max(s.caps, default=0)
    return OracleResult(found, witness, s.nodes, bound)


def _validate(degrees: Sequence[int], max_n: int, max_sum: Optional[int], min_degree: int) -> List[int]:
    d = [int(x) for x in degrees]
    if len(d) > max_n:
        raise LimitExceeded(f"n={len(d)} > {max_n}")
    if max_sum is not None and sum(d) > max_sum:
        raise LimitExceeded(f"degree sum {sum(d)} > {max_sum}")
    if any(x < min_degree for x in d):
        raise ValueError(f"oracle degrees must be at least {min_degree}")
    return d


def exists_triangular_realization(degrees: Sequence[int], max_n: Optional[int] = None,
                                  max_sum: Optional[int] = None,
                                  deadline: Optional[float] = None) -> OracleResult:
    """Decide by exhaustion whether a triangular multigraph has exactly these degrees.

    Vertex ``i`` of the witness has degree ``degrees[i - 1]``; order is
    irrelevant to the verdict. ``deadline`` is in seconds.
    """
    env_n, env_sum = env_limits()
    d = _validate(degrees, env_n if max_n is None else max_n,
                  env_sum if max_sum is None else max_sum, 1)
    return _search(d, None, True, deadline)


def exists_simple_realization(degrees: Sequence[int], max_n: int = SIMPLE_MAX_N,
                              deadline: Optional[float] = None) -> OracleResult:
    """Decide by exhaustion over 0/1 multiplicities whether ``degrees`` is graphical."""
    d = _validate(degrees, max_n, None, 0)
    return _search(d, 1, False, deadline)


@dataclass(frozen=True)
class CensusRow:
    n: int
    exists: bool
    nodes_explored: int


def proposition_census(n_max: int, deadline: Optional[float] = None) -> List[CensusRow]:
    """Run the oracle on the all-3 sequence for every length ``3..n_max``.

    Odd lengths have odd degree sum and are reported as non-existent
    without searching.
    """
    if n_max > CENSUS_MAX_N:
        raise LimitExceeded(f"census n_max={n_max} > {CENSUS_MAX_N}")
    rows = []
    for n in range(3, n_max + 1):
        if (3 * n) % 2:
            rows.append(CensusRow(n, False, 0))
            continue
        r = exists_triangular_realization([3] * n, max_n=CENSUS_MAX_N, max_sum=3 * CENSUS_MAX_N,
                                          deadline=deadline)
        rows.append(CensusRow(n, r.exists, r.nodes_explored))
    return rows
