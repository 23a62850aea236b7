import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_degrees, brute_is_triangular, small_multigraphs, valid_sequences
from trimulti.constructors import realize
from trimulti.errors import SharedVertexCountNotOne, VertexOutOfRange
from trimulti.multigraph import (
    Multigraph,
    TriangularityReport,
    check_triangular,
    degree,
    degree_sequence_of,
    union_on_shared_vertex,
)


def complete(n, m=1):
    return Multigraph(n, {(a, b): m for a, b in itertools.combinations(range(1, n + 1), 2)})


K3 = complete(3)
K4 = complete(4)


def test_degree_examples():
    assert degree(K3, 1) == 2
    assert degree(Multigraph(2, {(1, 2): 5}), 1) == 5
    assert degree(Multigraph(3), 3) == 0
    with pytest.raises(VertexOutOfRange):
        degree(K3, 4)
    with pytest.raises(VertexOutOfRange):
        degree(K3, 0)


def test_degree_sequence_examples():
    assert degree_sequence_of(K4) == [3, 3, 3, 3]
    small4 = Multigraph(4, [(1, 2, 2), (3, 4, 2), (1, 3, 1), (1, 4, 1), (2, 3, 1), (2, 4, 1)])
    assert degree_sequence_of(small4) == [4, 4, 4, 4]
    assert degree_sequence_of(Multigraph(2)) == [0, 0]
    # vertex order, not sorted
    assert degree_sequence_of(Multigraph(3, {(2, 3): 4})) == [0, 4, 4]


def test_canonical_storage():
    g = Multigraph(4, [(3, 1, 2), (2, 1, 1), (1, 3, 1)])
    assert g.edge_list() == [(1, 2, 1), (1, 3, 3)]
    assert g.multiplicity(3, 1) == 3
    assert g.multiplicity(2, 4) == 0
    assert g == Multigraph(4, {(1, 2): 1, (1, 3): 3})
    assert g != Multigraph(5, {(1, 2): 1, (1, 3): 3})


def test_invalid_graphs_rejected():
    with pytest.raises(ValueError):
        Multigraph(3, [(1, 1, 1)])
    with pytest.raises(ValueError):
        Multigraph(3, [(1, 2, 0)])
    with pytest.raises(VertexOutOfRange):
        Multigraph(3, [(1, 4, 1)])


def test_check_triangular_examples():
    assert check_triangular(K3) == TriangularityReport(True)
    r = check_triangular(Multigraph(3, {(1, 2): 5}))
    assert not r.is_triangular and r.uncovered_edge == (1, 2)
    assert check_triangular(K4).is_triangular
    assert check_triangular(Multigraph(5)).is_triangular


def test_triangle_needs_distinct_third_vertex():
    # path 1-2-3 plus a heavy 1-2: neither edge lies in a triangle
    g = Multigraph(3, {(1, 2): 4, (2, 3): 1})
    assert check_triangular(g).uncovered_edge == (1, 2)


@settings(max_examples=300)
@given(small_multigraphs())
def test_check_triangular_matches_brute_force(case):
    n, edges = case
    g = Multigraph(n, edges)
    assert check_triangular(g).is_triangular == brute_is_triangular(n, edges)
    assert degree_sequence_of(g) == brute_degrees(n, edges)


@given(small_multigraphs())
def test_triangularity_is_multiplicity_blind(case):
    n, edges = case
    flat = {p: 1 for p in edges}
    assert check_triangular(Multigraph(n, edges)).is_triangular == \
        check_triangular(Multigraph(n, flat)).is_triangular


@given(small_multigraphs(max_n=8, max_m=6))
def test_handshake(case):
    n, edges = case
    assert sum(degree_sequence_of(Multigraph(n, edges))) % 2 == 0


def test_uncovered_edge_has_positive_multiplicity():
    g = Multigraph(5, {(1, 2): 1, (2, 3): 1, (1, 3): 1, (4, 5): 2})
    r = check_triangular(g)
    assert r.uncovered_edge == (4, 5)
    assert g.multiplicity(*r.uncovered_edge) >= 1


def test_union_bowtie():
    g = union_on_shared_vertex(K3, K3, {1: 1, 2: 4, 3: 5})
    assert degree_sequence_of(g) == [4, 2, 2, 2, 2]
    assert check_triangular(g).is_triangular


def test_union_with_empty_graph_is_identity():
    assert union_on_shared_vertex(K4, Multigraph(1), [1]) == K4


def test_union_overlap_rejected():
    with pytest.raises(SharedVertexCountNotOne):
        union_on_shared_vertex(K3, K3, [1, 2, 4])
    with pytest.raises(SharedVertexCountNotOne):
        union_on_shared_vertex(K3, K3, [4, 5, 6])


@settings(max_examples=50, deadline=None)
@given(valid_sequences(n_max=12, d_max=12), valid_sequences(n_max=12, d_max=12), st.randoms())
def test_union_preserves_triangularity_and_adds_degrees(s1, s2, rnd):
    g1, _ = realize(s1)
    g2, _ = realize(s2)
    shared = rnd.randrange(1, g1.n + 1)
    images = list(range(g1.n + 1, g1.n + g2.n))
    images.insert(rnd.randrange(g2.n), shared)
    g = union_on_shared_vertex(g1, g2, images)
    assert check_triangular(g).is_triangular
    expected = degree_sequence_of(g1) + [0] * (g.n - g1.n)
    for i, dv in enumerate(degree_sequence_of(g2)):
        expected[images[i] - 1] += dv
    assert degree_sequence_of(g) == expected


def test_relabel_moves_degrees():
    g = Multigraph(3, {(1, 2): 3, (2, 3): 1})
    h = g.relabel([3, 1, 2])
    assert degree_sequence_of(h) == [4, 1, 3]
    assert np.array_equal(h.keys, np.sort(h.keys))
