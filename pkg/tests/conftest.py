import random

import pytest
import sympy

from qspectral.graph import build, build_graph

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")


def sympy_charpoly(g):
    """Monic det(xI - Q) via sympy, as integer coefficients."""
    n = g.n
    Q = sympy.zeros(n, n)
    for u, v in g.edges:
        Q[u, v] = Q[v, u] = 1
        Q[u, u] += 1
        Q[v, v] += 1
    x = sympy.symbols("x")
    return tuple(int(c) for c in Q.charpoly(x).all_coeffs())


def random_graph(rng: random.Random, n: int, p: float | None = None):
    p = rng.random() if p is None else p
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build(n // 2, edges) if n % 2 == 0 else build_graph(n, edges)


def random_clustered(rng: random.Random, q: int, p: float | None = None):
    return random_graph(rng, 2 * q, p)


@pytest.fixture
def rng():
    return random.Random(12345)
