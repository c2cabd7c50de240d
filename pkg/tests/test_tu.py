import pytest

from conftest import random_graph
from qspectral.fixtures import broken_pair, broken_pair_transposed, claw, claw_transposed
from qspectral.graph import build_graph, complete
from qspectral.spectral import q_polynomial
from qspectral.tu import (
    BudgetExceeded,
    are_comparable,
    classify_tu,
    coefficient_via_tu,
    coefficients_via_tu,
    tu_subgraphs,
    tu_weight,
    tu_weight_totals,
)


def test_triangle_is_a_single_unicyclic_component():
    t = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    h = classify_tu(t, t.edges)
    assert h.unicyclic == (3,) and h.trees == ()
    assert tu_weight(h) == 4


def test_even_cycle_is_not_tu():
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert classify_tu(c4, c4.edges) is None
    assert classify_tu(c4, c4.edges[:3]) is not None


def test_two_cycles_in_one_component_is_not_tu():
    bowtie = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert classify_tu(bowtie, bowtie.edges) is None


def test_forest_weight_counts_isolated_vertices():
    g = build_graph(5, [(0, 1), (1, 2), (3, 4)])
    h = classify_tu(g, [(0, 1), (1, 2)])
    # a 2-edge path plus three isolated vertices
    assert sorted(h.trees) == [(1, 0), (1, 0), (3, 2)]
    assert tu_weight(h) == 3


def test_missing_edge_is_rejected():
    with pytest.raises(ValueError):
        classify_tu(claw(), [(0, 1)])


def test_claw_coefficients():
    assert coefficients_via_tu(claw()) == (1, -6, 9, -4, 0)
    # both graphs of the smallest transpose pair carry equal weight at every size
    for j in range(5):
        assert are_comparable(claw(), claw_transposed(), j)


def test_claw_subgraph_counts():
    totals = tu_weight_totals(claw())
    assert [c for _, c in totals] == [1, 3, 3, 1, 0]
    assert len(tu_subgraphs(claw_transposed(), 3)) == 1


def test_coefficient_bounds():
    g = claw()
    assert coefficient_via_tu(g, 0) == 1
    assert coefficient_via_tu(g, 4) == 0
    with pytest.raises(ValueError):
        coefficient_via_tu(g, 5)


def test_budget_guard():
    g = complete(4)
    with pytest.raises(BudgetExceeded):
        coefficients_via_tu(g, budget=100)
    with pytest.raises(BudgetExceeded):
        tu_subgraphs(g, 4, budget=10)


def test_broken_pair_differs_somewhere():
    a, b = broken_pair(), broken_pair_transposed()
    assert any(not are_comparable(a, b, j) for j in range(a.n + 1))


def test_agrees_with_determinant_on_random_graphs(rng):
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 8))
        assert coefficients_via_tu(g) == q_polynomial(g).coeffs


def test_direct_subset_enumeration_agrees_with_walk(rng):
    for _ in range(20):
        g = random_graph(rng, 6, 0.5)
        for j in range(min(g.m, 6) + 1):
            direct = (-1) ** j * sum(tu_weight(h) for h in tu_subgraphs(g, j))
            assert direct == coefficient_via_tu(g, j)
