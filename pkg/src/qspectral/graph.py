"""Clustered graphs and the partial transpose.

A clustered graph has ``2q`` vertices split into two clusters of ``q``
labelled slots.  Slot ``(mu, i)`` with ``mu in {1, 2}`` and ``i in 1..q``
lives at linear index ``(mu - 1) * q + (i - 1)``.  Every operation here
uses that convention, and everything is labelling dependent: the partial
transpose of two isomorphic clustered graphs need not be isomorphic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed vertex indices, self-loops and similar input errors."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is a bitmask of the neighbours of ``v``.  The constructor
    trusts its input; use :func:`build` or :meth:`from_adjacency` for
    anything user supplied.
    """

    n: int
    adj: tuple[int, ...]

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @property
    def edges(self) -> list[Edge]:
        """Sorted edge list with ``u < v``."""
        out = []
        for u, a in enumerate(self.adj):
            for v in _bits(a >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    @classmethod
    def from_adjacency(cls, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for u, a in enumerate(adj):
            if a & ~full:
                raise GraphError(f"vertex {u} has a neighbour out of range")
            if a >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
            for v in _bits(a):
                if not adj[v] >> u & 1:
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")
        return cls(n, adj)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, edges={self.edges})"


@dataclass(frozen=True, repr=False)
class ClusteredGraph(Graph):
    """A graph on ``2q`` vertices read through the fixed 2 x q clustering."""

    def __post_init__(self):
        if self.n % 2:
            raise GraphError(f"a clustered graph needs an even vertex count, got {self.n}")

    @property
    def q(self) -> int:
        return self.n // 2

    def index(self, mu: int, i: int) -> int:
        """Linear index of slot ``v_{mu,i}`` (both 1-based)."""
        if mu not in (1, 2) or not 1 <= i <= self.q:
            raise GraphError(f"no slot v_{mu},{i} in a graph with q={self.q}")
        return (mu - 1) * self.q + (i - 1)

    def slot(self, v: int) -> tuple[int, int]:
        """Inverse of :meth:`index`."""
        return v // self.q + 1, v % self.q + 1

    def __repr__(self) -> str:
        return f"ClusteredGraph(q={self.q}, edges={self.edges})"


def clustered(g: Graph) -> ClusteredGraph:
    """View an even-order graph under the identity clustering."""
    if isinstance(g, ClusteredGraph):
        return g
    return ClusteredGraph(g.n, g.adj)


class EdgePartition(NamedTuple):
    intra1: frozenset[Edge]
    intra2: frozenset[Edge]
    cross: frozenset[Edge]


def _bits(a: int):
    while a:
        low = a & -a
        yield low.bit_length() - 1
        a ^= low


def _adjacency(n: int, edges: Iterable[Edge]) -> tuple[int, ...]:
    adj = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {e} has an index outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return tuple(adj)


def build(q: int, edges: Iterable[Edge]) -> ClusteredGraph:
    """Build a clustered graph from linear-index vertex pairs.

    Duplicate pairs and both orientations of one pair collapse to a single edge.
    """
    if q < 0:
        raise GraphError(f"q must be non-negative, got {q}")
    return ClusteredGraph(2 * q, _adjacency(2 * q, edges))


def build_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """Unclustered counterpart of :func:`build`, for any vertex count."""
    if n < 0:
        raise GraphError(f"n must be non-negative, got {n}")
    return Graph(n, _adjacency(n, edges))


def build_slots(q: int, edges: Iterable[tuple[tuple[int, int], tuple[int, int]]]) -> ClusteredGraph:
    """Build from 1-based slot pairs, e.g. ``((1, 1), (2, 1))`` for ``(v11, v21)``."""
    return build(q, [((a - 1) * q + i - 1, (b - 1) * q + j - 1) for (a, i), (b, j) in edges])


def empty(q: int) -> ClusteredGraph:
    return ClusteredGraph(2 * q, (0,) * (2 * q))


def complete(q: int) -> ClusteredGraph:
    n = 2 * q
    full = (1 << n) - 1
    return ClusteredGraph(n, tuple(full ^ (1 << v) for v in range(n)))


def partial_transpose(g: ClusteredGraph) -> ClusteredGraph:
    """Replace every asymmetric cross edge ``(v1i, v2j)`` by its mirror ``(v1j, v2i)``.

    The asymmetric set is read off the original graph before any edge moves.
    """
    asym = asymmetric_edge_set(g)
    if not asym:
        return g
    q = g.q
    adj = list(g.adj)
    for u, v in asym:
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    for u, v in asym:
        i, j = u, v - q
        a, b = j, q + i
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return ClusteredGraph(2 * q, tuple(adj))


def asymmetric_edge_set(g: ClusteredGraph) -> frozenset[Edge]:
    """Cross edges ``(v1i, v2j)``, ``i != j``, whose mirror ``(v1j, v2i)`` is absent.

    Edges are returned as linear index pairs ``(u, v)`` with ``u`` in cluster 1.
    """
    q = g.q
    out = []
    for i in range(q):
        row = g.adj[i] >> q
        for j in _bits(row):
            if j != i and not g.adj[j] >> (q + i) & 1:
                out.append((i, q + j))
    return frozenset(out)


def is_partially_symmetric(g: ClusteredGraph) -> bool:
    return not asymmetric_edge_set(g)


def count_partially_symmetric(q: int) -> int:
    """Number of labelled edge sets on 2 x q clusters that the transpose fixes."""
    if q < 1:
        raise GraphError(f"q must be positive, got {q}")
    return 2 ** (q * (3 * q - 1) // 2)


def brute_count_partially_symmetric(q: int) -> int:
    """Count labelled graphs on ``2q`` vertices with ``G == G^tau`` by enumeration.

    For ``q <= 3`` every one of the ``2^(q(2q-1))`` graphs is transposed and
    compared.  At ``q = 4`` (``2^28`` graphs) only the ``q^2`` cross slots are
    enumerated and the count is scaled by the ``2^(q(q-1))`` intra-cluster
    edge sets, which the transpose never touches.
    """
    if not 1 <= q <= 4:
        raise GraphError(f"brute-force count supports 1 <= q <= 4, got {q}")
    if q <= 3:
        return sum(1 for g in all_graphs(q) if partial_transpose(g) == g)
    cross = [(i, q + j) for i in range(q) for j in range(q)]
    fixed = 0
    for mask in range(1 << len(cross)):
        g = build(q, [e for k, e in enumerate(cross) if mask >> k & 1])
        if partial_transpose(g) == g:
            fixed += 1
    return fixed << (q * (q - 1))


def edge_partition(g: ClusteredGraph) -> EdgePartition:
    q = g.q
    intra1, intra2, cross = [], [], []
    for u, v in g.edges:
        if v < q:
            intra1.append((u, v))
        elif u >= q:
            intra2.append((u, v))
        else:
            cross.append((u, v))
    return EdgePartition(frozenset(intra1), frozenset(intra2), frozenset(cross))


def _shift(g: ClusteredGraph, q: int, offset: int) -> list[Edge]:
    """Edges of ``g`` re-indexed into a graph with cluster size ``q``, slots shifted by ``offset``."""
    def move(v: int) -> int:
        mu, i = divmod(v, g.q)
        return mu * q + offset + i

    return [(move(u), move(v)) for u, v in g.edges]


def disjoint_union(g1: ClusteredGraph, g2: ClusteredGraph) -> ClusteredGraph:
    """Disjoint union in which ``g2``'s cluster-k slots follow ``g1``'s cluster-k slots."""
    q = g1.q + g2.q
    return build(q, _shift(g1, q, 0) + _shift(g2, q, g1.q))


def add_edges(g: ClusteredGraph, edges: Iterable[Edge]) -> ClusteredGraph:
    return build(g.q, g.edges + list(edges))


def remove_edges(g: ClusteredGraph, edges: Iterable[Edge]) -> ClusteredGraph:
    drop = {(min(e), max(e)) for e in edges}
    return build(g.q, [e for e in g.edges if e not in drop])


def pad(g: ClusteredGraph, r: int) -> ClusteredGraph:
    """Append ``r`` isolated slots to each cluster."""
    return disjoint_union(g, empty(r))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Same kind of graph with vertex ``v`` moved to ``perm[v]``."""
    adj = [0] * g.n
    for u, a in enumerate(g.adj):
        pu = perm[u]
        for v in _bits(a):
            adj[pu] |= 1 << perm[v]
    return type(g)(g.n, tuple(adj))


def all_graphs(q: int):
    """Every labelled graph on ``2q`` vertices; exponential, meant for tiny ``q``."""
    pairs = list(combinations(range(2 * q), 2))
    for mask in range(1 << len(pairs)):
        yield build(q, [e for k, e in enumerate(pairs) if mask >> k & 1])
