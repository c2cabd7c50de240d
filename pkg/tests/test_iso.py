import networkx as nx
import pytest

from conftest import random_graph
from qspectral.fixtures import claw, claw_transposed, relabelled_path, switching_pair
from qspectral.graph import all_graphs, build_graph, empty, partial_transpose, relabel
from qspectral.iso import (
    MAX_ORDER,
    SizeGuardError,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    fingerprint,
)


def nx_graph(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_claw_is_not_isomorphic_to_its_transpose():
    assert not are_isomorphic(claw(), claw_transposed())


def test_relabelled_path_clusterings_are_isomorphic():
    g0, g = relabelled_path()
    assert are_isomorphic(g0, g)


def test_transpose_differs_from_drawn_switch():
    g, gm = switching_pair()
    assert not are_isomorphic(partial_transpose(g), gm)


def test_path_relabelling():
    p = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    q = build_graph(4, [(2, 0), (0, 3), (3, 1)])
    assert canonical_form(p) == canonical_form(q)


def test_isomorphism_class_counts():
    # unlabelled graph counts on 2, 4 and 6 vertices
    for q, expected in zip((1, 2, 3), (2, 11, 156)):
        assert len({canonical_form(g) for g in all_graphs(q)}) == expected


def test_against_networkx(rng):
    for _ in range(150):
        n = rng.randint(1, 9)
        g, h = random_graph(rng, n, 0.5), random_graph(rng, n, 0.5)
        if rng.random() < 0.5:
            perm = list(range(n))
            rng.shuffle(perm)
            h = relabel(g, perm)
        assert are_isomorphic(g, h) == nx.is_isomorphic(nx_graph(g), nx_graph(h))


def test_regular_graphs_against_networkx():
    # refinement alone cannot split these; the search has to branch
    import itertools

    gs = [nx.random_regular_graph(3, 12, seed=s) for s in range(12)]
    ours = [build_graph(12, list(h.edges)) for h in gs]
    for (a, x), (b, y) in itertools.combinations(zip(gs, ours), 2):
        assert are_isomorphic(x, y) == nx.is_isomorphic(a, b)


def test_canonical_form_is_relabel_invariant(rng):
    for _ in range(60):
        n = rng.randint(2, 12)
        g = random_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert canonical_form(g) == canonical_form(h)
        assert canonical_graph(g) == canonical_graph(h)
        assert fingerprint(g) == fingerprint(h)


def test_size_guard():
    big = build_graph(MAX_ORDER + 1, [])
    with pytest.raises(SizeGuardError):
        canonical_form(big)
    with pytest.raises(SizeGuardError):
        are_isomorphic(big, big)
    canonical_form(build_graph(MAX_ORDER, [(0, 1)]))


def test_hex_encoding_is_stable():
    assert canonical_form(claw()).hex == "042c"
    assert canonical_form(empty(0)).hex == "00"
