"""Q-polynomial coefficients from TU subgraphs.

A TU subgraph is a spanning subgraph whose components are trees or
unicyclic with an odd cycle.  Its weight is ``4^c * prod(1 + |E(T_i)|)``
over the ``c`` unicyclic components and the tree components ``T_i``
(isolated vertices are 0-edge trees).  The coefficient of ``x^(n-j)`` in
``det(x I - Q)`` is ``(-1)^j`` times the total weight of the ``j``-edge
TU subgraphs.

This module enumerates edge subsets directly and never touches a matrix,
so it serves as an independent check on :mod:`qspectral.spectral`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, prod
from typing import Iterable

from .graph import Edge, Graph

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class TUSubgraph:
    edges: frozenset[Edge]
    # (vertex count, edge count) per tree component, isolated vertices included
    trees: tuple[tuple[int, int], ...]
    # vertex count of each odd-unicyclic component
    unicyclic: tuple[int, ...]

    @property
    def c(self) -> int:
        return len(self.unicyclic)

    @property
    def s(self) -> int:
        return len(self.trees)


def tu_weight(h: TUSubgraph) -> int:
    return 4 ** h.c * prod(1 + e for _, e in h.trees)


def classify_tu(g: Graph, edge_subset: Iterable[Edge]) -> TUSubgraph | None:
    """Component analysis of the spanning subgraph; ``None`` when it is not TU."""
    sub = set()
    for u, v in edge_subset:
        u, v = min(u, v), max(u, v)
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the graph")
        sub.add((u, v))
    n = g.n
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in sub:
        nbrs[u].append(v)
        nbrs[v].append(u)
    colour = [-1] * n
    trees, unicyclic = [], []
    for root in range(n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        stack, verts, degsum, bipartite = [root], 0, 0, True
        while stack:
            x = stack.pop()
            verts += 1
            degsum += len(nbrs[x])
            for y in nbrs[x]:
                if colour[y] < 0:
                    colour[y] = colour[x] ^ 1
                    stack.append(y)
                elif colour[y] == colour[x]:
                    bipartite = False
        ecount = degsum // 2
        if ecount == verts - 1:
            trees.append((verts, ecount))
        elif ecount == verts and not bipartite:
            unicyclic.append(verts)
        else:
            return None
    return TUSubgraph(frozenset(sub), tuple(trees), tuple(unicyclic))


class _Forest:
    """Union-find with parity and rollback, tracking edges and a cycle flag per component."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.parity = [0] * n
        self.size = [1] * n
        self.edges = [0] * n
        self.cyclic = [False] * n
        self.history: list[tuple[int, int, bool]] = []

    def find(self, x: int) -> tuple[int, int]:
        p = 0
        while self.parent[x] != x:
            p ^= self.parity[x]
            x = self.parent[x]
        return x, p

    def add(self, u: int, v: int) -> bool:
        """Insert edge ``uv``; return False, state untouched, if the result is not TU."""
        ru, pu = self.find(u)
        rv, pv = self.find(v)
        if ru == rv:
            # closing edge: odd cycle iff endpoints share a colour
            if self.cyclic[ru] or pu != pv:
                return False
            self.history.append((ru, -1, False))
            self.cyclic[ru] = True
            self.edges[ru] += 1
            return True
        if self.cyclic[ru] and self.cyclic[rv]:
            return False
        if self.size[ru] < self.size[rv]:
            ru, rv = rv, ru
        self.history.append((ru, rv, self.cyclic[ru]))
        self.parent[rv] = ru
        self.parity[rv] = pu ^ pv ^ 1
        self.size[ru] += self.size[rv]
        self.edges[ru] += self.edges[rv] + 1
        self.cyclic[ru] = self.cyclic[ru] or self.cyclic[rv]
        return True

    def undo(self):
        ru, rv, was_cyclic = self.history.pop()
        if rv < 0:
            self.cyclic[ru] = False
            self.edges[ru] -= 1
            return
        self.parent[rv] = rv
        self.parity[rv] = 0
        self.size[ru] -= self.size[rv]
        self.edges[ru] -= self.edges[rv] + 1
        self.cyclic[ru] = was_cyclic

    def weight(self) -> int:
        w = 1
        for x, p in enumerate(self.parent):
            if p == x:
                w *= 4 if self.cyclic[x] else 1 + self.edges[x]
        return w


def _check_budget(m: int, j: int, budget: int):
    if comb(m, j) > budget:
        raise BudgetExceeded(f"C(m={m}, j={j}) = {comb(m, j)} exceeds the subset budget {budget}")


def _walk(g: Graph, max_j: int, visit):
    """Depth-first over TU edge subsets of size <= max_j, in edge order.

    ``visit(j, forest)`` is called once per TU subset with ``j`` edges.
    Branches die as soon as an added edge closes an even cycle or a
    second cycle in one component, since no superset can recover.
    """
    edges = g.edges
    m = len(edges)
    forest = _Forest(g.n)

    def rec(start: int, j: int):
        visit(j, forest)
        if j == max_j:
            return
        for k in range(start, m):
            u, v = edges[k]
            if forest.add(u, v):
                rec(k + 1, j + 1)
                forest.undo()

    rec(0, 0)


def tu_subgraphs(g: Graph, j: int, budget: int = DEFAULT_BUDGET) -> list[TUSubgraph]:
    """All TU subgraphs with exactly ``j`` edges, classified."""
    _check_budget(g.m, j, budget)
    out = []
    for subset in combinations(g.edges, j):
        h = classify_tu(g, subset)
        if h is not None:
            out.append(h)
    return out


def tu_weight_totals(g: Graph, budget: int = DEFAULT_BUDGET) -> list[tuple[int, int]]:
    """``(total weight, subgraph count)`` of the ``j``-edge TU subgraphs, ``j = 0..n``."""
    n, m = g.n, g.m
    top = min(n, m)
    for j in range(top + 1):
        _check_budget(m, j, budget)
    totals = [[0, 0] for _ in range(n + 1)]

    def visit(j, forest):
        totals[j][0] += forest.weight()
        totals[j][1] += 1

    _walk(g, top, visit)
    return [(w, c) for w, c in totals]


def coefficient_via_tu(g: Graph, j: int, budget: int = DEFAULT_BUDGET) -> int:
    """``p_j`` of the monic Q-polynomial from the ``j``-edge TU subgraphs.

    A TU subgraph on ``n`` vertices has at most ``n`` edges, and none has
    more than ``m``; coefficients beyond either bound come out as 0.
    """
    if not 0 <= j <= g.n:
        raise ValueError(f"j must lie in 0..{g.n}, got {j}")
    if j == 0:
        return 1
    if j > g.m:
        return 0
    _check_budget(g.m, j, budget)
    total = 0

    def visit(k, forest):
        nonlocal total
        if k == j:
            total += forest.weight()

    _walk(g, j, visit)
    return (-1) ** j * total


def coefficients_via_tu(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Every coefficient ``p_0..p_n`` in one enumeration pass."""
    totals = tu_weight_totals(g, budget)
    return tuple((-1) ** j * w if j else 1 for j, (w, _) in enumerate(totals))


def are_comparable(g: Graph, h: Graph, j: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether the ``j``-edge TU subgraphs of ``g`` and ``h`` carry equal total weight."""
    return coefficient_via_tu(g, j, budget) == coefficient_via_tu(h, j, budget)
