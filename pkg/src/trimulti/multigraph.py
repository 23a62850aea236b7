"""Loopless multigraphs and the verifiers every construction is checked against.

Edges are held as three parallel int64 arrays ``(u, v, m)`` with ``u < v``,
sorted by ``(u, v)`` with no repeated pair and every ``m >= 1``. Vertices
are labelled ``1..n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import SharedVertexCountNotOne, VertexOutOfRange

Pair = Tuple[int, int]
EdgeInput = Union[Mapping[Pair, int], Iterable[Tuple[int, int, int]]]


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class Multigraph:
    """Immutable loopless multigraph on vertices ``1..n``."""

    __slots__ = ("n", "u", "v", "m", "_edges")

    def __init__(self, n: int, edges: Optional[EdgeInput] = None):
        if edges is None:
            triples: list = []
        elif isinstance(edges, Mapping):
            triples = [(a, b, c) for (a, b), c in edges.items()]
        else:
            triples = list(edges)
        if triples:
            u, v, m = (np.array(col, dtype=np.int64) for col in zip(*triples))
        else:
            u = v = m = np.zeros(0, dtype=np.int64)
        self._init_arrays(n, u, v, m)

    @classmethod
    def from_arrays(cls, n: int, u, v, m) -> "Multigraph":
        """Build from parallel arrays; repeated pairs are summed."""
        g = cls.__new__(cls)
        g._init_arrays(n, np.asarray(u, dtype=np.int64), np.asarray(v, dtype=np.int64),
                       np.asarray(m, dtype=np.int64))
        return g

    def _init_arrays(self, n, u, v, m):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if not (u.shape == v.shape == m.shape) or u.ndim != 1:
            raise ValueError("edge arrays must be one-dimensional and equally long")
        if u.size:
            lo = np.minimum(u, v)
            hi = np.maximum(u, v)
            if bool((lo == hi).any()):
                raise ValueError("loops are not representable")
            low, high = int(lo.min()), int(hi.max())
            if low < 1 or high > n:
                raise VertexOutOfRange(low if low < 1 else high, n)
            if int(m.min()) < 1:
                raise ValueError("multiplicities must be positive")
            key = lo * (n + 1) + hi
            if key.size > 1 and not bool(np.all(key[1:] > key[:-1])):
                order = np.argsort(key, kind="stable")
                key, lo, hi, m = key[order], lo[order], hi[order], m[order]
                start = np.flatnonzero(np.concatenate(([True], key[1:] != key[:-1])))
                if start.size != key.size:
                    m = np.add.reduceat(m, start)
                    lo, hi = lo[start], hi[start]
            u, v = lo, hi
        self.n = n
        self.u = _readonly(np.ascontiguousarray(u, dtype=np.int64))
        self.v = _readonly(np.ascontiguousarray(v, dtype=np.int64))
        self.m = _readonly(np.ascontiguousarray(m, dtype=np.int64))
        self._edges = None

    @property
    def keys(self) -> np.ndarray:
        """Sorted integer encoding ``u * (n + 1) + v`` of the positive pairs."""
        return self.u * (self.n + 1) + self.v

    @property
    def edges(self) -> dict:
        """Mapping ``(u, v) -> m`` with ``u < v``; absent pairs have multiplicity 0."""
        if self._edges is None:
            self._edges = dict(zip(zip(self.u.tolist(), self.v.tolist()), self.m.tolist()))
        return self._edges

    def edge_list(self) -> list[Tuple[int, int, int]]:
        return list(zip(self.u.tolist(), self.v.tolist(), self.m.tolist()))

    def multiplicity(self, a: int, b: int) -> int:
        if a == b:
            return 0
        if a > b:
            a, b = b, a
        return self.edges.get((a, b), 0)

    @property
    def num_pairs(self) -> int:
        return int(self.u.size)

    @property
    def total_multiplicity(self) -> int:
        return int(self.m.sum())

    def relabel(self, mapping: Sequence[int], n: Optional[int] = None) -> "Multigraph":
        """Send vertex ``i`` to ``mapping[i - 1]``; ``mapping`` must be injective."""
        table = np.concatenate(([0], np.asarray(mapping, dtype=np.int64)))
        if table.size != self.n + 1:
            raise ValueError("mapping must have one image per vertex")
        target_n = int(table.max(initial=0)) if n is None else n
        return Multigraph.from_arrays(max(target_n, 0), table[self.u], table[self.v], self.m)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self.u, other.u)
                and np.array_equal(self.v, other.v) and np.array_equal(self.m, other.m))

    def __hash__(self):
        return hash((self.n, self.u.tobytes(), self.v.tobytes(), self.m.tobytes()))

    def __repr__(self) -> str:
        if self.num_pairs <= 12:
            return f"Multigraph(n={self.n}, edges={self.edges})"
        return f"Multigraph(n={self.n}, pairs={self.num_pairs}, total={self.total_multiplicity})"


def degree(g: Multigraph, v: int) -> int:
    if not 1 <= v <= g.n:
        raise VertexOutOfRange(v, g.n)
    return int(g.m[g.u == v].sum() + g.m[g.v == v].sum())


def degree_array(g: Multigraph) -> np.ndarray:
    """Degrees as an int64 array, entry ``i`` for vertex ``i + 1``."""
    deg = np.zeros(g.n + 1, dtype=np.int64)
    np.add.at(deg, g.u, g.m)
    np.add.at(deg, g.v, g.m)
    return deg[1:]


def degree_sequence_of(g: Multigraph) -> list[int]:
    """Degrees in vertex order (not sorted)."""
    return degree_array(g).tolist()


def _adjacency(g: Multigraph):
    """CSR neighbour lists (forward neighbours first, then backward ones)."""
    n = g.n
    src = np.concatenate((g.u, g.v))
    dst = np.concatenate((g.v, g.u))
    order = np.argsort(src, kind="stable")
    src, dst = src[order], dst[order]
    counts = np.bincount(src, minlength=n + 1)
    indptr = np.concatenate(([0], np.cumsum(counts)))
    return indptr, dst, counts


@dataclass(frozen=True)
class TriangularityReport:
    is_triangular: bool
    uncovered_edge: Optional[Pair] = None

    def __post_init__(self):
        if (self.uncovered_edge is None) != self.is_triangular:
            raise ValueError("uncovered_edge must be given exactly when not triangular")


def uncovered_mask(g: Multigraph) -> np.ndarray:
    """Boolean mask over ``g``'s pairs: True where no third vertex is adjacent to both ends."""
    E = g.num_pairs
    if E == 0:
        return np.zeros(0, dtype=bool)
    indptr, nbr, adj_deg = _adjacency(g)
    keys = g.keys
    u, v = g.u, g.v
    # scan neighbours of the endpoint with fewer distinct neighbours
    swap = adj_deg[u] > adj_deg[v]
    a = np.where(swap, v, u)
    b = np.where(swap, u, v)
    covered = np.zeros(E, dtype=bool)
    pending = np.arange(E)
    # round r tests the r-th neighbour of a; most edges settle within two rounds
    r = 0
    while pending.size:
        aa, bb = a[pending], b[pending]
        live = adj_deg[aa] > r
        pending, aa, bb = pending[live], aa[live], bb[live]
        if not pending.size:
            break
        w = nbr[indptr[aa] + r]
        lo = np.minimum(w, bb)
        hi = np.maximum(w, bb)
        q = lo * (g.n + 1) + hi
        pos = np.searchsorted(keys, q)
        pos[pos == E] = 0
        hit = (keys[pos] == q) & (w != bb)
        covered[pending[hit]] = True
        pending = pending[~hit]
        r += 1
    return ~covered


def check_triangular(g: Multigraph) -> TriangularityReport:
    """Every positive pair must have a common neighbour; multiplicities beyond 1 are irrelevant."""
    bad = np.flatnonzero(uncovered_mask(g))
    if bad.size == 0:
        return TriangularityReport(True)
    i = int(bad[0])
    return TriangularityReport(False, (int(g.u[i]), int(g.v[i])))


def union_on_shared_vertex(g1: Multigraph, g2: Multigraph, relabel2) -> Multigraph:
    """Glue ``g2`` onto ``g1`` after relabelling; exactly one vertex may coincide.

    ``relabel2`` maps each vertex of ``g2`` to a vertex of the result,
    either as a sequence (``relabel2[i - 1]`` is the image of ``i``) or a dict.
    Multiplicities of coinciding pairs would add, but a single shared
    vertex means no pair is shared.
    """
    if isinstance(relabel2, Mapping):
        images = np.array([relabel2[i] for i in range(1, g2.n + 1)], dtype=np.int64)
    else:
        images = np.asarray(relabel2, dtype=np.int64)
    if images.size != g2.n:
        raise ValueError("relabel2 needs one image per vertex of g2")
    if images.size and (int(images.min()) < 1 or np.unique(images).size != images.size):
        raise ValueError("relabel2 must be injective into positive labels")
    shared = int(np.count_nonzero(images <= g1.n))
    if shared != 1:
        raise SharedVertexCountNotOne(shared)
    n = max(g1.n, int(images.max()))
    table = np.concatenate(([0], images))
    return Multigraph.from_arrays(n, np.concatenate((g1.u, table[g2.u])),
                                  np.concatenate((g1.v, table[g2.v])),
                                  np.concatenate((g1.m, g2.m)))
