import json
import random

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph, sympy_charpoly
from qspectral.fixtures import broken_pair, broken_pair_transposed, claw, claw_transposed
from qspectral.graph import build_graph, complete, empty
from qspectral.spectral import (
    QPolynomial,
    are_q_cospectral,
    bareiss_det,
    interpolate_monic,
    q_polynomial,
    q_spectrum,
    signless_laplacian,
)


def test_claw_polynomial():
    # eigenvalues 0, 1, 1, 4
    assert q_polynomial(claw()).coeffs == (1, -6, 9, -4, 0)
    assert q_polynomial(claw_transposed()) == q_polynomial(claw())


def test_empty_graph_polynomial_is_power_of_x():
    assert q_polynomial(empty(3)).coeffs == (1, 0, 0, 0, 0, 0, 0)
    assert q_polynomial(build_graph(0, [])).coeffs == (1,)


def test_single_edge():
    # eigenvalues 0 and 2
    assert q_polynomial(build_graph(2, [(0, 1)])).coeffs == (1, -2, 0)


def test_complete_graph_closed_form():
    # Q(K_n) has eigenvalue 2n-2 once and n-2 with multiplicity n-1
    for q in (1, 2, 3):
        n = 2 * q
        x = sympy.symbols("x")
        expected = sympy.Poly((x - (2 * n - 2)) * (x - (n - 2)) ** (n - 1), x).all_coeffs()
        assert q_polynomial(complete(q)).coeffs == tuple(int(c) for c in expected)


def test_signless_laplacian_of_claw():
    Q = signless_laplacian(claw())
    assert Q.tolist() == [[1, 0, 1, 0], [0, 1, 1, 0], [1, 1, 3, 1], [0, 0, 1, 1]]


def test_broken_pair_is_not_cospectral():
    assert not are_q_cospectral(broken_pair(), broken_pair_transposed())


def test_cospectral_requires_same_order():
    assert not are_q_cospectral(empty(1), empty(2))


def test_matches_sympy_on_random_graphs(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 9))
        assert q_polynomial(g).coeffs == sympy_charpoly(g)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8), st.randoms(use_true_random=False))
def test_low_order_coefficients(n, r):
    g = random_graph(r, n)
    p = q_polynomial(g).coeffs
    # trace of Q is twice the edge count
    assert p[1] == -2 * g.m
    assert q_polynomial(g)(0) == (-1) ** n * round(np.linalg.det(signless_laplacian(g)))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.randoms(use_true_random=False))
def test_union_is_multiplicative(a, b, r):
    g, h = random_graph(r, a), random_graph(r, b)
    u = build_graph(a + b, g.edges + [(x + a, y + a) for x, y in h.edges])
    assert q_polynomial(u) == q_polynomial(g) * q_polynomial(h)


def test_spectrum_matches_polynomial(rng):
    for _ in range(20):
        g = random_graph(rng, 8)
        spec = q_spectrum(g)
        assert spec == sorted(spec)
        assert abs(sum(spec) - 2 * g.m) < 1e-9
        assert min(spec) >= 0
        p = q_polynomial(g)
        for lam in spec:
            # residual relative to the coefficient scale
            assert abs(p(lam)) < 1e-6 * max(1, max(abs(c) for c in p.coeffs))


def test_cospectrality_is_an_equivalence(rng):
    gs = [random_graph(rng, 6, 0.4) for _ in range(40)]
    keys = [q_polynomial(g) for g in gs]
    for a, ka in zip(gs, keys):
        assert are_q_cospectral(a, a)
        for b, kb in zip(gs, keys):
            assert are_q_cospectral(a, b) == are_q_cospectral(b, a) == (ka == kb)


def test_json_round_trip():
    p = q_polynomial(complete(4))
    data = json.loads(json.dumps(p.to_json()))
    assert QPolynomial.from_json(data) == p
    with pytest.raises(ValueError):
        QPolynomial.from_json({"n": 3, "coeffs": ["1", "0"]})


def test_str():
    assert str(q_polynomial(claw())) == "x^4 - 6x^3 + 9x^2 - 4x"
    assert str(QPolynomial((0,))) == "0"
    assert str(QPolynomial((1, 0, -3))) == "x^2 - 3"


def test_interpolate_rejects_non_integer_data():
    # x^2 / 2 at 0, 1, 2
    with pytest.raises(ArithmeticError):
        interpolate_monic([0, 1, 3])
    assert interpolate_monic([1, 2, 5]) == (1, 0, 1)


def test_bareiss_against_sympy():
    r = random.Random(7)
    for n in range(1, 8):
        M = [[r.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert bareiss_det(M) == sympy.Matrix(M).det()
    # zero pivot in the first column forces a row swap
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[0, 0], [1, 0]]) == 0
    assert bareiss_det([]) == 1
