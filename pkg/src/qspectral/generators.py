"""Constructive families of graphs that are Q-cospectral to their partial transpose.

Every constructor returns a plain :class:`ClusteredGraph`; :func:`report`
turns one into a :class:`GeneratorReport` whose ``cospectral`` and
``isomorphic`` flags are recomputed from exact polynomials and canonical
forms, never taken on trust.

Slot indices in this module are 1-based, ``(mu, i)`` meaning ``v_{mu,i}``.
Cycles run ``v_{mu,1} - v_{mu,2} - ... - v_{mu,q} - v_{mu,1}``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

from .graph import (
    ClusteredGraph,
    GraphError,
    asymmetric_edge_set,
    build,
    disjoint_union,
    empty,
    is_partially_symmetric,
    partial_transpose,
)
from .iso import are_isomorphic
from .spectral import q_polynomial


class HypothesisError(GraphError):
    """A construction's precondition does not hold for the given input."""


@dataclass(frozen=True)
class GeneratorReport:
    graph: ClusteredGraph
    transposed: ClusteredGraph
    cospectral: bool
    isomorphic: bool
    family: str
    params: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "q": self.graph.q,
            "edges": [list(e) for e in self.graph.edges],
            "transposed_edges": [list(e) for e in self.transposed.edges],
            "cospectral": self.cospectral,
            "isomorphic": self.isomorphic,
        }


def _jsonable(v):
    if isinstance(v, (set, frozenset)):
        return sorted(_jsonable(x) for x in v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def report(g: ClusteredGraph, family: str = "custom", **params) -> GeneratorReport:
    t = partial_transpose(g)
    return GeneratorReport(
        graph=g,
        transposed=t,
        cospectral=q_polynomial(g) == q_polynomial(t),
        isomorphic=are_isomorphic(g, t),
        family=family,
        params=params,
    )


def _v(q: int, mu: int, i: int) -> int:
    return (mu - 1) * q + i - 1


def _cycle(q: int, mu: int) -> list[tuple[int, int]]:
    return [(_v(q, mu, i), _v(q, mu, i % q + 1)) for i in range(1, q + 1)]


def _path(q: int, mu: int) -> list[tuple[int, int]]:
    return [(_v(q, mu, i), _v(q, mu, i + 1)) for i in range(1, q)]


def _check_index(q: int, *idx: int):
    for i in idx:
        if not 1 <= i <= q:
            raise GraphError(f"index {i} outside 1..{q}")


def theorem1_graph(q: int, i: int, j: int) -> ClusteredGraph:
    """Two q-cycles plus the chord ``(v1i, v1j)`` and cross edges ``(v1i, v2i)``, ``(v1i, v2j)``.

    ``v1i`` and ``v1j`` must be non-adjacent on the cycle.
    """
    if q < 4:
        raise HypothesisError(f"needs q >= 4 for a non-adjacent pair on a q-cycle, got q={q}")
    _check_index(q, i, j)
    if not i < j:
        raise GraphError(f"need i < j, got i={i}, j={j}")
    if j - i in (1, q - 1):
        raise HypothesisError(f"v1{i} and v1{j} are adjacent on the cycle; the construction needs them non-adjacent")
    extra = [(_v(q, 1, i), _v(q, 1, j)), (_v(q, 1, i), _v(q, 2, i)), (_v(q, 1, i), _v(q, 2, j))]
    return build(q, _cycle(q, 1) + _cycle(q, 2) + extra)


def corollary1_graph(q: int, i: int, keep_edge: bool = False) -> ClusteredGraph:
    """Two q-cycles, cross edges ``(v1i, v2i)``, ``(v1i, v2,i+1)``, and ``(v2i, v2,i+1)`` removed.

    Indices wrap modulo ``q``.  With ``keep_edge=True`` the cycle edge stays,
    which gives a graph isomorphic to its transpose.
    """
    if q < 3:
        raise GraphError(f"needs q >= 3, got q={q}")
    _check_index(q, i)
    k = i % q + 1
    bottom = [e for e in _cycle(q, 2) if keep_edge or set(e) != {_v(q, 2, i), _v(q, 2, k)}]
    extra = [(_v(q, 1, i), _v(q, 2, i)), (_v(q, 1, i), _v(q, 2, k))]
    return build(q, _cycle(q, 1) + bottom + extra)


def corollary2_graph(q: int, diagonal_set: Iterable[int] = ()) -> ClusteredGraph:
    """A q-cycle on cluster 1, a path ``v21 ... v2q`` on cluster 2, cross edges
    ``(v11, v21)``, ``(v11, v2q)``, plus ``(v1k, v2k)`` for each ``k`` in ``diagonal_set``.
    """
    if q < 3:
        raise GraphError(f"needs q >= 3, got q={q}")
    diag = sorted(set(diagonal_set))
    for k in diag:
        if not 2 <= k <= q:
            raise GraphError(f"diagonal index {k} outside 2..{q}")
    extra = [(_v(q, 1, 1), _v(q, 2, 1)), (_v(q, 1, 1), _v(q, 2, q))]
    extra += [(_v(q, 1, k), _v(q, 2, k)) for k in diag]
    return build(q, _cycle(q, 1) + _path(q, 2) + extra)


def cluster_swap(g: ClusteredGraph) -> ClusteredGraph:
    """Relabel ``v1i <-> v2i``."""
    q = g.q
    return build(q, [((u + q) % (2 * q), (v + q) % (2 * q)) for u, v in g.edges])


def procedure1_union(g: ClusteredGraph, gp: ClusteredGraph, require: str = "symmetric") -> ClusteredGraph:
    """``g`` disjoint-union ``gp``, where ``gp`` is left alone by the transpose.

    ``require="symmetric"`` (default) demands ``gp == gp^tau`` on the nose;
    ``require="isomorphic"`` accepts ``gp`` merely isomorphic to ``gp^tau``.
    """
    if require == "symmetric":
        if not is_partially_symmetric(gp):
            raise HypothesisError("the added graph must equal its partial transpose")
    elif require == "isomorphic":
        if not are_isomorphic(gp, partial_transpose(gp)):
            raise HypothesisError("the added graph must be isomorphic to its partial transpose")
    else:
        raise ValueError(f"require must be 'symmetric' or 'isomorphic', got {require!r}")
    return disjoint_union(g, gp)


def _distinguished(g: ClusteredGraph, distinguished: tuple[int, int]) -> tuple[int, int]:
    i, j = distinguished
    q = g.q
    _check_index(q, i, j)
    if i == j:
        raise HypothesisError("the distinguished cross edge needs i != j")
    if (_v(q, 1, i), _v(q, 2, j)) not in asymmetric_edge_set(g):
        raise HypothesisError(f"(v1{i}, v2{j}) is not an asymmetric cross edge of the graph")
    return i, j


def procedure2_add_pairs(
    g: ClusteredGraph, pairs: Iterable[tuple[int, int]], distinguished: tuple[int, int]
) -> ClusteredGraph:
    """Add ``(v1k, v1l)`` together with ``(v2k, v2l)`` for each pair, with ``k, l`` outside ``{i, j}``."""
    i, j = _distinguished(g, distinguished)
    q = g.q
    new = []
    for k, l in pairs:
        _check_index(q, k, l)
        if k == l:
            raise GraphError(f"pair ({k}, {l}) would be a self-loop")
        if {k, l} & {i, j}:
            raise HypothesisError(f"pair ({k}, {l}) touches the distinguished indices {{{i}, {j}}}")
        for mu in (1, 2):
            e = (_v(q, mu, k), _v(q, mu, l))
            if g.has_edge(*e):
                raise HypothesisError(f"edge (v{mu}{k}, v{mu}{l}) is already present")
            new.append(e)
    return build(q, g.edges + new)


def procedure3_add_psym_cross(
    g: ClusteredGraph, cross_edges: Iterable[tuple[int, int]], distinguished: tuple[int, int]
) -> ClusteredGraph:
    """Add cross edges ``(v1k, v2l)`` forming a partially symmetric set away from ``{i, j}``."""
    i, j = _distinguished(g, distinguished)
    q = g.q
    cross = set(cross_edges)
    for k, l in cross:
        _check_index(q, k, l)
        if {k, l} & {i, j}:
            raise HypothesisError(f"cross edge (v1{k}, v2{l}) touches the distinguished indices {{{i}, {j}}}")
        if (l, k) not in cross:
            raise HypothesisError(f"cross edge (v1{k}, v2{l}) lacks its mirror (v1{l}, v2{k})")
    return build(q, g.edges + [(_v(q, 1, k), _v(q, 2, l)) for k, l in cross])


def _extend(g: ClusteredGraph, r: int, intra_new, attach, cross_new) -> ClusteredGraph:
    """Shared machinery of the vertex-adding procedures.

    New slots are ``q+1 .. q+r`` in each cluster.  ``intra_new[mu-1]``
    holds new-new pairs inside cluster ``mu``; ``attach`` holds
    ``(mu, old, new)`` triples; ``cross_new`` holds ``(k, l)`` for
    ``(v1k, v2l)`` with both indices new and must be mirror closed.
    """
    if r < 1:
        raise GraphError(f"r must be positive, got {r}")
    q = g.q
    big = disjoint_union(g, empty(r))
    Q = q + r
    new_idx = range(q + 1, Q + 1)
    edges = big.edges
    for mu, group in zip((1, 2), intra_new or ((), ())):
        for a, b in group:
            if a not in new_idx or b not in new_idx or a == b:
                raise HypothesisError(f"intra edge ({a}, {b}) in cluster {mu} must join two distinct new vertices")
            edges.append((_v(Q, mu, a), _v(Q, mu, b)))
    for mu, old, new in attach or ():
        if not 1 <= old <= q or new not in new_idx:
            raise HypothesisError(f"attachment ({mu}, {old}, {new}) must join an old vertex to a new one")
        edges.append((_v(Q, mu, old), _v(Q, mu, new)))
    cross = set(cross_new or ())
    for k, l in cross:
        if k not in new_idx or l not in new_idx:
            raise HypothesisError(f"cross edge (v1{k}, v2{l}) must join new vertices")
        if (l, k) not in cross:
            raise HypothesisError(f"new cross edges must be partially symmetric; (v1{l}, v2{k}) is missing")
        edges.append((_v(Q, 1, k), _v(Q, 2, l)))
    return build(Q, edges)


def procedure4_extend(
    g: ClusteredGraph,
    r: int,
    intra_new=((), ()),
    attach=(),
    cross_new=(),
    distinguished: tuple[int, int] | None = None,
) -> ClusteredGraph:
    """Add ``r`` vertices per cluster, keeping ``v1i, v1j, v2i, v2j`` away from them.

    ``distinguished`` names the asymmetric edge ``(v1i, v2j)``; when omitted
    the graph must have exactly one asymmetric cross edge and that one is used.
    """
    if distinguished is None:
        asym = sorted(asymmetric_edge_set(g))
        if len(asym) != 1:
            raise HypothesisError(f"graph has {len(asym)} asymmetric cross edges; pass distinguished=(i, j)")
        u, v = asym[0]
        distinguished = (u + 1, v - g.q + 1)
    i, j = _distinguished(g, distinguished)
    for mu, old, new in attach:
        if old in (i, j):
            raise HypothesisError(f"v{mu}{old} is a distinguished vertex and may not be adjacent to a new vertex")
    return _extend(g, r, intra_new, attach, cross_new)


def procedure5_extend(
    g0: ClusteredGraph,
    r: int,
    intra_new=((), ()),
    attach_vertex: tuple[int, int] | None = None,
    attach_edges: Iterable[int] = (),
    cross_new=(),
) -> ClusteredGraph:
    """Extend a graph whose transpose is its cluster swap.

    ``attach_vertex`` is a slot ``(mu, k)`` not incident to any asymmetric
    cross edge; it is joined to each new slot of its own cluster listed in
    ``attach_edges``.
    """
    if partial_transpose(g0) != cluster_swap(g0):
        raise HypothesisError("the partial transpose is not the cluster swap v1i <-> v2i of the graph")
    asym = asymmetric_edge_set(g0)
    if not asym:
        raise HypothesisError("the asymmetric cross edge set is empty")
    attach = []
    attach_edges = list(attach_edges)
    if attach_edges:
        if attach_vertex is None:
            raise GraphError("attach_edges given without attach_vertex")
        mu, k = attach_vertex
        _check_index(g0.q, k)
        v = _v(g0.q, mu, k)
        if any(v in e for e in asym):
            raise HypothesisError(f"v{mu}{k} is incident to an asymmetric cross edge")
        attach = [(mu, k, new) for new in attach_edges]
    return _extend(g0, r, intra_new, attach, cross_new)


_COUNTS = {
    "theorem1": lambda q: 2 ** (q - 2),
    "corollary1": lambda q: 1,
    "procedure2": lambda q: 2 ** (q * (q - 2) - 1),
    "procedure3": lambda q: 2 ** ((q - 2) * (3 * q - 7) // 2),
}


def family_count(family: str, q: int) -> dict:
    """Published size claim for a family; reported as data, not certified."""
    try:
        value = _COUNTS[family](q)
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(_COUNTS)}") from None
    return {"family": family, "q": q, "count": value, "verified": False}


# -- seeded samplers ---------------------------------------------------------

def _cycle_base(rng: random.Random, q_range=(4, 6)) -> tuple[ClusteredGraph, tuple[int, int]]:
    """A theorem-1 or corollary-1 graph with its distinguished ``(i, j)``."""
    q = rng.randint(*q_range)
    # no admissible chord exists on a 3-cycle
    if q >= 4 and rng.random() < 0.5:
        while True:
            i, j = sorted(rng.sample(range(1, q + 1), 2))
            if j - i not in (1, q - 1):
                return theorem1_graph(q, i, j), (i, j)
    i = rng.randint(1, q)
    return corollary1_graph(q, i), (i, i % q + 1)


def random_partially_symmetric(r: int, rng: random.Random, p: float = 0.5) -> ClusteredGraph:
    """Random graph on 2 x r clusters whose cross edges come in mirror pairs."""
    edges = []
    for mu in (1, 2):
        edges += [(_v(r, mu, a), _v(r, mu, b)) for a in range(1, r + 1) for b in range(a + 1, r + 1) if rng.random() < p]
    for a in range(1, r + 1):
        for b in range(a, r + 1):
            if rng.random() < p:
                edges += [(_v(r, 1, a), _v(r, 2, b)), (_v(r, 1, b), _v(r, 2, a))]
    return build(r, edges)


def sample_procedure1(rng: random.Random) -> ClusteredGraph:
    g, _ = _cycle_base(rng, (4, 5))
    return procedure1_union(g, random_partially_symmetric(rng.randint(1, 3), rng))


def _reflection(q: int, i: int, j: int):
    """The reflection of the index cycle that swaps ``i`` and ``j``."""
    return lambda k: (i + j - k - 1) % q + 1


def sample_procedure2(rng: random.Random) -> ClusteredGraph:
    """Pairs are added in orbits of the reflection swapping ``i`` and ``j``.

    Unrestricted pairs usually break cospectrality; reflection-closed
    sets kept it in every instance checked.
    """
    while True:
        g, (i, j) = _cycle_base(rng, (5, 7))
        q = g.q
        rho = _reflection(q, i, j)
        free = [k for k in range(1, q + 1) if k not in (i, j)]
        options = {(k, l) for a, k in enumerate(free) for l in free[a + 1:]
                   if not g.has_edge(_v(q, 1, k), _v(q, 1, l)) and not g.has_edge(_v(q, 2, k), _v(q, 2, l))}
        orbits = sorted({tuple(sorted({p, tuple(sorted((rho(p[0]), rho(p[1]))))})) for p in options})
        orbits = [o for o in orbits if all(p in options for p in o)]
        if orbits:
            chosen = rng.sample(orbits, rng.randint(1, min(2, len(orbits))))
            return procedure2_add_pairs(g, sorted({p for o in chosen for p in o}), (i, j))


def sample_procedure3(rng: random.Random) -> ClusteredGraph:
    """Cross edges closed under mirroring and under the ``i <-> j`` reflection."""
    while True:
        g, (i, j) = _cycle_base(rng, (5, 7))
        q = g.q
        rho = _reflection(q, i, j)
        free = [k for k in range(1, q + 1) if k not in (i, j)]
        cross = set()
        for a, k in enumerate(free):
            for l in free[a:]:
                if rng.random() < 0.4:
                    for x, y in ((k, l), (rho(k), rho(l))):
                        cross |= {(x, y), (y, x)}
        if cross:
            return procedure3_add_psym_cross(g, sorted(cross), (i, j))


def sample_procedure4(rng: random.Random) -> ClusteredGraph:
    """New vertices hang off old ones fixed by the ``i <-> j`` reflection freely.

    Attachments at indices the reflection moves are added in blocks closed
    under the reflection and under swapping the clusters.
    """
    g, (i, j) = _cycle_base(rng, (3, 5)) if rng.random() < 0.8 else (corollary1_graph(3, 1), (1, 2))
    q = g.q
    rho = _reflection(q, i, j)
    r = rng.randint(1, 3)
    new = list(range(q + 1, q + r + 1))
    intra = tuple([(a, b) for x, a in enumerate(new) for b in new[x + 1:] if rng.random() < 0.5] for _ in (1, 2))
    olds = [k for k in range(1, q + 1) if k not in (i, j)]
    attach = set()
    for o in olds:
        for nv in new:
            if rho(o) == o:
                attach |= {(mu, o, nv) for mu in (1, 2) if rng.random() < 0.3}
            elif rng.random() < 0.2:
                attach |= {(mu, x, nv) for mu in (1, 2) for x in (o, rho(o))}
    cross = set()
    for x, a in enumerate(new):
        for b in new[x:]:
            if rng.random() < 0.4:
                cross |= {(a, b), (b, a)}
    return procedure4_extend(g, r, intra, sorted(attach), sorted(cross), distinguished=(i, j))


def example10_base() -> ClusteredGraph:
    """Six-vertex graph whose transpose is its cluster swap, asymmetric edge ``(v12, v23)``."""
    q = 3
    return build(q, [(_v(q, a, i), _v(q, b, j)) for (a, i), (b, j) in [
        ((1, 1), (1, 2)), ((1, 2), (2, 2)), ((2, 2), (2, 1)), ((2, 1), (1, 1)),
        ((1, 2), (2, 3)), ((1, 1), (1, 3)), ((2, 1), (2, 3)),
    ]])


def sample_procedure5(rng: random.Random) -> ClusteredGraph:
    g0 = example10_base()
    q = g0.q
    r = rng.randint(1, 3)
    new = list(range(q + 1, q + r + 1))
    intra = tuple([(a, b) for x, a in enumerate(new) for b in new[x + 1:] if rng.random() < 0.5] for _ in (1, 2))
    # v11 and v21 are exchanged by the cluster swap and kept cospectrality in
    # every instance checked; the other vertices off the asymmetric edge did not
    vertex = rng.choice([(1, 1), (2, 1)])
    attach = sorted(rng.sample(new, rng.randint(1, r)))
    cross = set()
    for x, a in enumerate(new):
        for b in new[x:]:
            if rng.random() < 0.3:
                cross |= {(a, b), (b, a)}
    return procedure5_extend(g0, r, intra, vertex, attach, cross)
