import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qspectral.graph import (
    ClusteredGraph,
    GraphError,
    asymmetric_edge_set,
    brute_count_partially_symmetric,
    build,
    build_slots,
    complete,
    count_partially_symmetric,
    disjoint_union,
    edge_partition,
    empty,
    is_partially_symmetric,
    pad,
    partial_transpose,
    relabel,
)
from qspectral.fixtures import claw, claw_transposed


@st.composite
def clustered_graphs(draw, max_q=5):
    q = draw(st.integers(1, max_q))
    n = 2 * q
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build(q, [p for p, keep in zip(pairs, mask) if keep])


def test_slot_indexing_round_trip():
    g = empty(3)
    for mu in (1, 2):
        for i in (1, 2, 3):
            assert g.slot(g.index(mu, i)) == (mu, i)
    assert g.index(2, 1) == 3
    with pytest.raises(GraphError):
        g.index(3, 1)
    with pytest.raises(GraphError):
        g.index(1, 4)


def test_build_rejects_bad_edges():
    with pytest.raises(GraphError):
        build(2, [(0, 4)])
    with pytest.raises(GraphError):
        build(2, [(1, 1)])
    with pytest.raises(GraphError):
        ClusteredGraph(3, (0, 0, 0))


def test_from_adjacency_validates_symmetry():
    with pytest.raises(GraphError):
        ClusteredGraph.from_adjacency(2, [0b10, 0])
    g = ClusteredGraph.from_adjacency(2, [0b10, 0b01])
    assert g.edges == [(0, 1)]


def test_duplicate_edges_collapse():
    g = build(2, [(0, 2), (2, 0), (0, 2)])
    assert g.m == 1


def test_claw_transpose_is_triangle_plus_point():
    k = claw()
    assert asymmetric_edge_set(k) == {(1, 2)}
    assert partial_transpose(k) == claw_transposed()


def test_transpose_with_no_cross_edges_is_identity():
    g = build_slots(2, [((1, 1), (1, 2)), ((2, 1), (2, 2))])
    assert partial_transpose(g) == g
    assert is_partially_symmetric(g)


def test_two_asymmetric_edges_move_independently():
    # (v11, v22) and (v13, v21): both mirrors absent
    g = build_slots(3, [((1, 1), (2, 2)), ((1, 3), (2, 1))])
    t = partial_transpose(g)
    assert t == build_slots(3, [((1, 2), (2, 1)), ((1, 1), (2, 3))])


def test_mirror_pair_is_fixed():
    g = build_slots(3, [((1, 1), (2, 2)), ((1, 2), (2, 1))])
    assert is_partially_symmetric(g)


def test_empty_and_complete_are_symmetric():
    for q in range(1, 5):
        assert is_partially_symmetric(empty(q))
        assert is_partially_symmetric(complete(q))


def test_partially_symmetric_counts():
    assert [count_partially_symmetric(q) for q in (1, 2, 3)] == [2, 32, 4096]
    for q in (1, 2, 3):
        assert brute_count_partially_symmetric(q) == count_partially_symmetric(q)


def test_brute_count_at_q4_uses_cross_slots():
    assert brute_count_partially_symmetric(4) == count_partially_symmetric(4)


def test_brute_count_range():
    with pytest.raises(GraphError):
        brute_count_partially_symmetric(5)
    with pytest.raises(GraphError):
        count_partially_symmetric(0)


def test_edge_partition_splits_by_cluster():
    k = claw()
    part = edge_partition(k)
    assert part.intra1 == frozenset()
    assert part.intra2 == {(2, 3)}
    assert part.cross == {(0, 2), (1, 2)}


def test_disjoint_union_slot_layout():
    g = disjoint_union(claw(), build_slots(1, [((1, 1), (2, 1))]))
    assert g.q == 3
    # claw's v21 (index 2 at q=2) moves to index 3 at q=3; new slot is v13/v23
    assert g.has_edge(0, 3) and g.has_edge(1, 3) and g.has_edge(3, 4)
    assert g.has_edge(2, 5)


def test_pad_adds_isolated_slots():
    g = pad(claw(), 2)
    assert g.q == 4 and g.m == 3
    assert all(g.degree(v) == 0 for v in (2, 3, 6, 7))


def test_relabel_keeps_type_and_edge_count():
    k = claw()
    r = relabel(k, [3, 2, 1, 0])
    assert isinstance(r, ClusteredGraph)
    assert r.m == k.m
    assert r.has_edge(3, 1)


@settings(max_examples=300, deadline=None)
@given(clustered_graphs())
def test_transpose_is_an_involution(g):
    assert partial_transpose(partial_transpose(g)) == g


@settings(max_examples=300, deadline=None)
@given(clustered_graphs())
def test_transpose_preserves_cluster_degree_sums(g):
    t = partial_transpose(g)
    q = g.q
    assert t.m == g.m
    for lo in (0, q):
        assert sum(g.degree(v) for v in range(lo, lo + q)) == sum(t.degree(v) for v in range(lo, lo + q))
    assert edge_partition(g).intra1 == edge_partition(t).intra1
    assert edge_partition(g).intra2 == edge_partition(t).intra2


@settings(max_examples=200, deadline=None)
@given(clustered_graphs(max_q=3), clustered_graphs(max_q=3))
def test_transpose_commutes_with_union(g, h):
    assert partial_transpose(disjoint_union(g, h)) == disjoint_union(partial_transpose(g), partial_transpose(h))


@settings(max_examples=200, deadline=None)
@given(clustered_graphs())
def test_transpose_output_is_symmetric_iff_input_is(g):
    t = partial_transpose(g)
    assert is_partially_symmetric(t) == is_partially_symmetric(g)
    assert len(asymmetric_edge_set(t)) == len(asymmetric_edge_set(g))
