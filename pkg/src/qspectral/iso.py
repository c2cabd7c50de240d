"""Canonical forms and isomorphism tests for small graphs.

The canonical labelling is the classic individualise-and-refine search:
refine the vertex partition to an equitable one, branch on the first
non-singleton cell, and keep the largest adjacency code over all leaves.
Two cheap prunings keep the tree small at the orders used here:

* twins (``N(u) - v == N(v) - u``) in a cell give identical subtrees, so
  only one per twin class is tried;
* automorphisms discovered at leaves with equal codes are used to skip
  cell vertices already covered by the orbit of a tried one.

Cluster structure is ignored; this is plain graph isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError

MAX_ORDER = 16


class SizeGuardError(GraphError):
    pass


@dataclass(frozen=True)
class CanonicalForm:
    """Byte string identifying an isomorphism class.

    Layout: one byte for ``n``, then the upper triangle of the canonically
    ordered adjacency matrix, row-major, packed big-endian into bytes.
    """

    encoding: bytes

    @property
    def hex(self) -> str:
        return self.encoding.hex()

    def __str__(self) -> str:
        return self.hex


def _bits(a: int):
    while a:
        low = a & -a
        yield low.bit_length() - 1
        a ^= low


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Each cell is split by the vector of neighbour counts into every cell;
    sub-cells are ordered by that vector, which depends only on the
    partition, never on vertex names.
    """
    while True:
        masks = []
        for c in cells:
            mk = 0
            for v in c:
                mk |= 1 << v
            masks.append(mk)
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                a = adj[v]
                key = tuple((a & mk).bit_count() for mk in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                changed = True
                out.extend(groups[k] for k in sorted(groups))
        cells = out
        if not changed:
            return cells


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    n = len(order)
    code = 0
    for i in range(n):
        a = adj[order[i]]
        for j in range(i + 1, n):
            code = code << 1 | (a >> order[j] & 1)
    return code


class _Search:
    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.n = len(adj)
        self.best_code = -1
        self.best_order: list[int] | None = None
        self.autos: list[list[int]] = []

    def run(self):
        cells = _refine(self.adj, [list(range(self.n))])
        self._visit(cells, [])
        return self.best_code, self.best_order

    def _leaf(self, order: list[int]):
        code = _code(self.adj, order)
        if code > self.best_code:
            self.best_code, self.best_order = code, order
        elif code == self.best_code:
            # best_order[k] <-> order[k] is an automorphism
            perm = list(range(self.n))
            for a, b in zip(order, self.best_order):
                perm[a] = b
            self.autos.append(perm)

    def _orbit_finder(self, prefix: list[int]):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.autos:
            if all(g[p] == p for p in prefix):
                for x in range(self.n):
                    a, b = find(x), find(g[x])
                    if a != b:
                        parent[a] = b
        return find

    def _visit(self, cells: list[list[int]], prefix: list[int]):
        target = None
        for k, c in enumerate(cells):
            if len(c) > 1:
                target = k
                break
        if target is None:
            self._leaf([c[0] for c in cells])
            return
        cell = cells[target]
        adj = self.adj
        tried: list[int] = []
        for v in cell:
            if any((adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u)) for u in tried):
                continue
            if tried and self.autos:
                find = self._orbit_finder(prefix)
                fv = find(v)
                if any(find(u) == fv for u in tried):
                    continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            split = cells[:target] + [[v], rest] + cells[target + 1:]
            self._visit(_refine(adj, split), prefix + [v])


def canonical_order(g: Graph) -> list[int]:
    """Vertex order realising the canonical form (``order[k]`` goes to position ``k``)."""
    if g.n > MAX_ORDER:
        raise SizeGuardError(f"canonical form is limited to n <= {MAX_ORDER}, got n={g.n}")
    if g.n == 0:
        return []
    return _Search(g.adj).run()[1]


def canonical_form(g: Graph) -> CanonicalForm:
    if g.n > MAX_ORDER:
        raise SizeGuardError(f"canonical form is limited to n <= {MAX_ORDER}, got n={g.n}")
    n = g.n
    code = _Search(g.adj).run()[0] if n else 0
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 7) // 8
    code <<= nbytes * 8 - nbits
    return CanonicalForm(bytes([n]) + code.to_bytes(nbytes, "big"))


def canonical_graph(g: Graph) -> Graph:
    """The graph relabelled into canonical order."""
    order = canonical_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = [0] * g.n
    for u, a in enumerate(g.adj):
        for v in _bits(a):
            adj[pos[u]] |= 1 << pos[v]
    return Graph(g.n, tuple(adj))


def fingerprint(g: Graph) -> tuple:
    """Isomorphism invariant: (n, m, sorted degrees, sorted per-vertex triangle counts)."""
    adj = g.adj
    tri = []
    for v in range(g.n):
        a = adj[v]
        t = 0
        for u in _bits(a):
            t += (adj[u] & a).bit_count()
        tri.append(t // 2)
    return (g.n, g.m, tuple(sorted(g.degrees())), tuple(sorted(tri)))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n > MAX_ORDER or h.n > MAX_ORDER:
        raise SizeGuardError(f"isomorphism test is limited to n <= {MAX_ORDER}")
    if fingerprint(g) != fingerprint(h):
        return False
    return canonical_form(g) == canonical_form(h)
